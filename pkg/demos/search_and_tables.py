"""
Searching the move graph
========================

Equivalence, a minimal-genus bound and a tiny table, all at desk scale.
"""

import tempfile
from pathlib import Path

from knotoids.gauss import parse_code, serialize
from knotoids.moves import UNDER_CLOSURE
from knotoids.search import SearchBudget, equivalent, min_genus_bound, read_table, replay, tabulate

small = SearchBudget(max_crossings=4, max_nodes=4000, max_depth=4)

# an R2 pair next to a kink is the trivial knotoid
a, b = parse_code(""), parse_code("O1+ O2- U1+ U2- U3+ O3+")
verdict = equivalent(a, b, small)
print(verdict, [str(s) for s in verdict.path])
print("replayed:", serialize(replay(a, verdict.path)))

# f separates these two immediately
print(equivalent(a, parse_code("O1+ U2+ U1+ O2+"), small))

# forbidden moves past an endpoint only make sense for the underpass closure
print(equivalent(parse_code("U1+ O2+ O1+ U2+"), a, SearchBudget(max_crossings=3, max_nodes=2000, max_depth=3, mode=UNDER_CLOSURE)))

# a genus-1 diagram of a classical knotoid, and one that stays at genus 1
for text in ["O1- O2+ O3+ U1- U2+ U3+", "O1+ O2+ U1+ U2+"]:
    g, witness = min_genus_bound(parse_code(text), small)
    print(text, "->", g, serialize(witness))

with tempfile.TemporaryDirectory() as tmp:
    store = Path(tmp) / "table.tsv"
    tabulate(2, SearchBudget(max_crossings=4, max_nodes=500, max_depth=4), store)
    records = read_table(store)
    print(len(records), "codes in", len({r.class_rep for r in records}), "classes")
    for r in records[:6]:
        print(r.line())
