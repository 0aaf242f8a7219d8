"""Bounded exploration of the move graph.

All searches are breadth first over canonical codes. Each layer is sorted by
canonical text before it is expanded and children are discovered in site
order, so the visited set, verdicts and tables are deterministic. The node
budget truncates the discovery sequence, so raising ``max_nodes`` or
``max_depth`` (other fields fixed) only extends what is reached.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .gauss import (
    CyclicGaussCode,
    OpenGaussCode,
    all_codes,
    canonicalize,
    serialize,
)
from .invariants import f_polynomial, knotoid_f
from .laurent import LaurentPolynomial
from .moves import (
    STANDARD,
    UNDER_CLOSURE,
    InsertionCaps,
    MoveSite,
    apply_move,
    apply_unchecked,
    check_mode,
    find_inverse,
    sites_for_entries,
)
from .planar import from_classical_code, underpass_closure
from .surface import carrier_genus

__all__ = [
    "SearchBudget",
    "ExploreResult",
    "Equivalent",
    "Distinct",
    "Unknown",
    "TabulationRecord",
    "explore",
    "equivalent",
    "replay",
    "min_genus_bound",
    "tabulate",
    "read_table",
    "TABLE_HEADER",
]

TABLE_HEADER = "#knotoid-tab v1"


@dataclass(frozen=True)
class SearchBudget:
    max_crossings: int = 8
    max_nodes: int = 200_000
    max_depth: int = 12
    mode: str = STANDARD
    classical_only: bool = False

    def __post_init__(self):
        if min(self.max_crossings, self.max_nodes, self.max_depth) < 1:
            raise ValueError("budget limits must be positive")
        if self.mode not in (STANDARD, UNDER_CLOSURE):
            raise ValueError(f"unknown mode {self.mode!r}")

    def dominates(self, other: SearchBudget) -> bool:
        return (
            self.mode == other.mode
            and self.classical_only == other.classical_only
            and self.max_crossings >= other.max_crossings
            and self.max_nodes >= other.max_nodes
            and self.max_depth >= other.max_depth
        )


def _text(entries) -> str:
    return " ".join(e.token() for e in entries)


def _is_cyclic(code) -> bool:
    return isinstance(code, CyclicGaussCode)


def _genus0(entries) -> bool:
    return carrier_genus(OpenGaussCode(entries)) == 0


class _Search:
    """One breadth-first search tree, expanded a layer at a time."""

    def __init__(self, start, budget: SearchBudget, cyclic: bool, visited_cap: list):
        self.budget = budget
        self.cyclic = cyclic
        self.caps = InsertionCaps(max_crossings=budget.max_crossings)
        self.parent: dict[tuple, tuple | None] = {start: None}
        self.layer = [start]
        self.depth = 0
        self.truncated = False
        self._cap = visited_cap  # shared one-element list: nodes still allowed

    def done(self) -> bool:
        return self.truncated or not self.layer or self.depth >= self.budget.max_depth

    def expand(self, on_new=None):
        """Expand the current layer; ``on_new(child)`` returning True stops early."""
        self.layer.sort(key=_text)
        nxt = []
        for node in self.layer:
            for site in sites_for_entries(node, self.cyclic, self.budget.mode, self.caps):
                child = apply_unchecked(node, site, self.cyclic)
                if child in self.parent:
                    continue
                if self.budget.classical_only and not self.cyclic and not _genus0(child):
                    continue
                self.parent[child] = (node, site)
                nxt.append(child)
                self._cap[0] -= 1
                if on_new is not None and on_new(child):
                    self.layer = nxt
                    self.depth += 1
                    return child
                if self._cap[0] <= 0:
                    self.truncated = True
                    self.layer = nxt
                    self.depth += 1
                    return None
        self.layer = nxt
        self.depth += 1
        return None

    def path_to(self, node) -> list[tuple[tuple, MoveSite]]:
        """``[(from_node, site), ...]`` leading from the root to ``node``."""
        steps = []
        while self.parent[node] is not None:
            prev, site = self.parent[node]
            steps.append((prev, site))
            node = prev
        return steps[::-1]


def _start_entries(code):
    code = canonicalize(code)
    if not _is_cyclic(code):
        check_mode(code, STANDARD)
    return code.entries


def _wrap(entries, cyclic):
    return CyclicGaussCode(entries) if cyclic else OpenGaussCode(entries)


@dataclass(frozen=True)
class ExploreResult:
    codes: tuple  # canonical codes in discovery order
    frontier_exhausted: bool
    depth: int

    def __contains__(self, code) -> bool:
        return canonicalize(code) in set(self.codes)


def explore(code, budget: SearchBudget = SearchBudget()) -> ExploreResult:
    """Breadth-first closure of ``canonicalize(code)`` under the move set, within budget.

    ``frontier_exhausted`` is True when the closure is complete for the
    crossing cap (the search stopped because nothing new was reachable).
    """
    cyclic = _is_cyclic(code)
    if budget.mode == UNDER_CLOSURE:
        check_mode(code, UNDER_CLOSURE)
    start = _start_entries(code)
    s = _Search(start, budget, cyclic, [budget.max_nodes - 1])
    if budget.max_nodes <= 1:
        s.truncated = True
    while not s.done():
        s.expand()
    codes = tuple(_wrap(e, cyclic) for e in s.parent)
    return ExploreResult(codes, not s.layer and not s.truncated, s.depth)


# -- equivalence ------------------------------------------------------------------

@dataclass(frozen=True)
class Equivalent:
    path: tuple[MoveSite, ...]

    def __str__(self):
        return "EQUIVALENT"


@dataclass(frozen=True)
class Distinct:
    invariant: str
    values: tuple[LaurentPolynomial, LaurentPolynomial]

    def __str__(self):
        return "DISTINCT"


@dataclass(frozen=True)
class Unknown:
    nodes: int

    def __str__(self):
        return "UNKNOWN"


def _invariant(code, mode: str = STANDARD) -> LaurentPolynomial:
    if _is_cyclic(code):
        return f_polynomial(code)
    if mode == UNDER_CLOSURE:
        # OMEGA- changes the virtual closure but not the underpass closure
        return f_polynomial(underpass_closure(from_classical_code(code)))
    return knotoid_f(code)


def replay(code, path) -> object:
    """Apply the sites of ``path`` in order, starting from ``canonicalize(code)``.

    Site positions always refer to canonical codes, which matters for cyclic
    codes where canonicalization rotates the entries.
    """
    code = canonicalize(code)
    for site in path:
        code = apply_move(code, site)
    return code


def equivalent(code1, code2, budget: SearchBudget = SearchBudget()):
    """Decide equivalence at desk scale.

    Returns :class:`Distinct` when the f-polynomials differ (of the
    underpass closures in under-closure mode), :class:`Equivalent`
    with a replayable path when searches from both sides meet, otherwise
    :class:`Unknown`.
    """
    cyclic = _is_cyclic(code1)
    if cyclic != _is_cyclic(code2):
        raise TypeError("cannot compare an open code with a cyclic code")
    if budget.mode == UNDER_CLOSURE:
        check_mode(code1, UNDER_CLOSURE)
        check_mode(code2, UNDER_CLOSURE)
    f1, f2 = _invariant(code1, budget.mode), _invariant(code2, budget.mode)
    if f1 != f2:
        return Distinct("f" if budget.mode == STANDARD else "f-underpass", (f1, f2))
    a, b = _start_entries(code1), _start_entries(code2)
    if a == b:
        return Equivalent(())
    cap = [budget.max_nodes - 2]
    fwd = _Search(a, budget, cyclic, cap)
    if budget.mode == UNDER_CLOSURE:
        # OMEGA- has no inverse in the move set, so search one way only
        hit = None
        while hit is None and not fwd.done():
            hit = fwd.expand(lambda child: child == b)
        if hit is None:
            return Unknown(len(fwd.parent))
        return Equivalent(tuple(site for _, site in fwd.path_to(b)))
    bwd = _Search(b, budget, cyclic, cap)
    meet = None
    while meet is None and not (fwd.done() and bwd.done()):
        side, other = (fwd, bwd) if len(fwd.parent) <= len(bwd.parent) or bwd.done() else (bwd, fwd)
        if side.done():
            side, other = other, side
        meet = side.expand(lambda child, o=other: child in o.parent)
    if meet is None:
        return Unknown(len(fwd.parent) + len(bwd.parent))
    path = [site for _, site in fwd.path_to(meet)]
    node = meet
    for prev, _site in reversed(bwd.path_to(meet)):
        inverse = find_inverse(_wrap(prev, cyclic), _wrap(node, cyclic))
        if inverse is None:  # pragma: no cover - every move has an inverse
            raise RuntimeError("missing inverse move")
        path.append(inverse)
        node = prev
    return Equivalent(tuple(path))


# -- minimal genus ---------------------------------------------------------------

def min_genus_bound(code: OpenGaussCode, budget: SearchBudget = SearchBudget()):
    """Smallest carrier genus found in the bounded class of ``code``, with a witness.

    The searches are run for every crossing cap up to ``budget.max_crossings``
    so that the bound never increases when any budget field grows.
    """
    if budget.mode == UNDER_CLOSURE:
        check_mode(code, UNDER_CLOSURE)
    code = canonicalize(code)
    best, witness = carrier_genus(code), code
    if best == 0 or budget.max_nodes <= 1:
        return best, witness
    for cap in range(code.n, budget.max_crossings + 1):
        improved = []

        def check(child):
            g = carrier_genus(OpenGaussCode(child))
            if g < (improved[-1][0] if improved else best):
                improved.append((g, child))
            return g == 0

        s = _Search(code.entries, replace(budget, max_crossings=cap), False, [budget.max_nodes - 1])
        while not s.done() and s.expand(check) is None:
            pass
        if improved:
            best, witness = improved[-1][0], OpenGaussCode(improved[-1][1])
        if best == 0:
            break
    return best, witness


# -- tabulation ------------------------------------------------------------------

@dataclass(frozen=True)
class TabulationRecord:
    code: str
    n: int
    carrier_genus: int
    min_genus_bound: int
    f_poly: str
    class_rep: int

    def line(self) -> str:
        return "\t".join(
            [self.code, str(self.n), str(self.carrier_genus), str(self.min_genus_bound),
             self.f_poly, str(self.class_rep)]
        )

    @classmethod
    def from_line(cls, line: str) -> TabulationRecord:
        code, n, g, mg, f, rep = line.rstrip("\n").split("\t")
        return cls(code, int(n), int(g), int(mg), f, int(rep))


def tabulate(n_max: int, budget: SearchBudget, store_path: str | Path) -> int:
    """Write one record per canonical code with at most ``n_max`` crossings.

    Codes are grouped into classes by bounded exploration; ``class_rep`` is
    the row index of the first code of the class. Codes with different
    f-polynomials are never grouped. The store is rewritten in full.
    """
    codes = [c for n in range(n_max + 1) for c in all_codes(n)]
    codes.sort(key=lambda c: (c.n, serialize(c)))
    index = {c.entries: i for i, c in enumerate(codes)}
    parent = list(range(len(codes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    fs = [knotoid_f(c) for c in codes]
    bounds = []
    for i, c in enumerate(codes):
        reached = explore(c, budget)
        for other in reached.codes:
            j = index.get(other.entries)
            if j is not None and fs[j] == fs[i]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        bounds.append(min_genus_bound(c, budget)[0])
    records = [
        TabulationRecord(
            serialize(c), c.n, carrier_genus(c), bounds[i], fs[i].serialize(), find(i)
        )
        for i, c in enumerate(codes)
    ]
    body = "".join(r.line() + "\n" for r in records)
    Path(store_path).write_text(TABLE_HEADER + "\n" + body)
    return len(records)


def read_table(store_path: str | Path) -> list[TabulationRecord]:
    lines = Path(store_path).read_text().splitlines()
    if not lines or lines[0] != TABLE_HEADER:
        raise ValueError("not a knotoid table")
    return [TabulationRecord.from_line(l) for l in lines[1:] if l]
