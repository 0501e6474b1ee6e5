"""
Command-line pipeline
=====================

The same operations from the shell: generate a coloring, pipe it into the
verifier, ask for an exact value, and reproduce a table.
"""

import subprocess
import sys


def sh(*args, stdin=None):
    cmd = [sys.executable, "-m", "properindex", *args]
    print("$ properindex", " ".join(args))
    proc = subprocess.run(cmd, input=stdin, capture_output=True, text=True)
    print(proc.stdout.rstrip())
    print(f"(exit {proc.returncode})\n")
    return proc.stdout


doc = sh("color", "--family", "bipartite", "--s", "3", "--t", "13", "--k", "3")
sh("verify", "--k", "3", stdin=doc)
sh("verify", "--set", "3,4,5", stdin=doc)
sh("exact", "--family", "bipartite", "--s", "2", "--t", "5", "--k", "3")
sh("formula", "--family", "multipartite", "--parts", "1,1,1,15", "--k", "3")
sh("table", "--theorem", "3", "--t", "2..8", "--no-banner")
