"""
Exact values by exhaustive search
=================================

exact_px_k pairs an upper bound (a verified coloring) with a lower bound
(exhausting every coloring with one color fewer, up to symmetry). On the
small members of each family the result matches the closed forms.
"""

from properindex import (
    FamilySpec,
    exact_px_k,
    exists_k_proper_coloring,
    px3_formula,
)
from properindex.solver import count_classes

for kind, params in [
    ("star", (4,)),
    ("bipartite", (2, 4)),
    ("bipartite", (2, 5)),
    ("bipartite", (2, 9)),
    ("bipartite", (3, 4)),
    ("multipartite", (1, 1, 4)),
    ("multipartite", (1, 1, 5)),
]:
    fam = FamilySpec(kind, params)
    r = exact_px_k(fam.build(), 3)
    print(f"{str(fam):10s} exact={r.lo}..{r.hi} formula={px3_formula(fam)} lower={r.lower}")

# the code-multiset quotient is what makes K_{3,13} reachable: 77520 classes
# instead of billions of raw colorings
g = FamilySpec("bipartite", (3, 13)).build()
print("K_{3,13} classes with 2 colors:", count_classes(g, 2, "code-multiset"))
out = exists_k_proper_coloring(g, 3, 2, "code-multiset")
print("2-coloring exists:", out.found, "| searched", out.classes_searched, "of", out.classes_checked)
