"""Exhaustive search for counterexamples, written as JSON lines.

Usage: ``python gallery/07_search.py [max_multiplicity] [max_frobenius] [jobs]``
"""

import sys

from semigroup_forge import run_search

m, f, jobs = (int(x) for x in (sys.argv[1:] + ["6", "25", "1"][len(sys.argv) - 1:])[:3])
with open("search.jsonl", "w") as out:
    summary = run_search(m, f, jobs=jobs, out=out)
print("\n".join(summary.lines()))
print("records written to search.jsonl")
