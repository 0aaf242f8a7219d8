"""Reidemeister moves on Gauss codes.

Moves act on open codes (knotoid diagrams) and, for closure comparisons, on
cyclic codes. On open codes adjacency never wraps, so every move happens
away from the endpoints; sliding an endpoint over or under a strand (the
forbidden moves) is only available as the explicit ``OMEGA-`` deletion in
under-closure mode.

Local patterns, read along the curve:

* ``R1``: two adjacent passages of one crossing, any pass order and sign
  (variants ``0..3`` = O-U+, O-U-, U-O+, U-O-).
* ``R2``: two disjoint adjacent pairs on crossings ``a, b``, one pair all
  over and the other all under, ``sign(a) = -sign(b)``; the under pair may
  repeat or reverse the order of the over pair. Variant bits: 4 = the
  first pair (in code order) is the under pair, 2 = reversed order,
  1 = the first entry is negative.
* ``R3``: three disjoint adjacent pairs, each two sharing exactly one
  crossing; the move reverses each pair. Valid pass/sign arrangements are
  taken from :data:`R3_TABLE`, derived from straight-line pictures by
  :func:`derive_r3_table`.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .errors import NotClassicalError, StaleSiteError, CodeSyntaxError
from .gauss import CyclicGaussCode, GaussEntry, OpenGaussCode, canonicalize, relabel_entries
from .surface import carrier_genus

__all__ = [
    "STANDARD",
    "UNDER_CLOSURE",
    "MoveSite",
    "InsertionCaps",
    "R3_TABLE",
    "derive_r3_table",
    "enumerate_moves",
    "apply_move",
    "is_forbidden_endpoint_slide",
    "find_inverse",
]

STANDARD = "standard"
UNDER_CLOSURE = "under-closure"

KINDS = ("R1-", "R1+", "R2-", "R2+", "R3", "OMEGA-")
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}


@dataclass(frozen=True, order=True)
class MoveSite:
    """A concrete move: kind, position data and pattern variant.

    Locations are entry indices for deletions and R3, and insertion gaps
    (``0`` = before the first entry) for ``R1+``/``R2+``.
    """

    kind: str
    location: tuple[int, ...]
    variant: int = 0

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.location, self.variant)

    def __str__(self):
        return f"{self.kind}@{','.join(map(str, self.location))}#{self.variant}"

    @classmethod
    def parse(cls, text: str) -> MoveSite:
        m = re.fullmatch(r"(R1[+-]|R2[+-]|R3|OMEGA-)@(\d+(?:,\d+){0,2})#(\d+)", text.strip())
        if m is None:
            raise CodeSyntaxError(f"bad move site {text!r}")
        return cls(m.group(1), tuple(int(x) for x in m.group(2).split(",")), int(m.group(3)))


@dataclass(frozen=True)
class InsertionCaps:
    """Limits on the otherwise unbounded insertion moves.

    ``max_crossings`` bounds the crossing number after an insertion;
    ``max_gap`` bounds the distance between the two R2+ insertion gaps;
    ``insertions=False`` disables R1+ and R2+ entirely.
    """

    max_crossings: int | None = None
    max_gap: int | None = None
    insertions: bool = True


# -- R3 variant table ---------------------------------------------------------

def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _strand_blocks(heights, flips, offset):
    """Blocks of the three-line picture; line 0 is horizontal at height ``offset``."""
    angles = (0.0, math.pi / 3, 2 * math.pi / 3)
    dirs = [(f * math.cos(a), f * math.sin(a)) for a, f in zip(angles, flips)]
    points = [(0.0, offset), (0.0, 0.0), (0.0, 0.0)]
    crossing_of = {}
    t_on = {i: {} for i in range(3)}
    for i, j in itertools.combinations(range(3), 2):
        # p_i + t d_i = p_j + s d_j
        dx = (points[j][0] - points[i][0], points[j][1] - points[i][1])
        den = _cross(dirs[i], dirs[j])
        t = _cross(dx, dirs[j]) / den
        s = _cross(dx, dirs[i]) / den
        t_on[i][j] = t
        t_on[j][i] = s
        over, under = (i, j) if heights[i] > heights[j] else (j, i)
        sign = 1 if _cross(dirs[over], dirs[under]) > 0 else -1
        crossing_of[frozenset((i, j))] = sign
    blocks = []
    for i in range(3):
        others = sorted(t_on[i], key=lambda j: t_on[i][j])
        block = []
        for j in others:
            cid = frozenset((i, j))
            block.append((cid, heights[i] > heights[j], crossing_of[cid]))
        blocks.append(tuple(block))
    return blocks


def _block_key(blocks) -> tuple:
    """Relabel crossings by first occurrence across blocks taken in order."""
    mapping = {}
    key = []
    for block in blocks:
        kb = []
        for cid, over, sign in block:
            if cid not in mapping:
                mapping[cid] = len(mapping) + 1
            kb.append((mapping[cid], over, sign))
        key.append(tuple(kb))
    return tuple(key)


def derive_r3_table() -> tuple[tuple, ...]:
    """All R3 local patterns, as block triples in code order with canonical labels.

    Three straight strands at 0, 60 and 120 degrees, every height order and
    orientation, with the horizontal strand on either side of the other
    two strands' crossing. Every order in which the curve may visit the
    three strands is included. Both sides of each move are in the table,
    and reversing each block maps one side to the other.
    """
    keys = set()
    for heights in itertools.permutations(range(3)):
        for flips in itertools.product((1, -1), repeat=3):
            before = _strand_blocks(heights, flips, 1.0)
            after = _strand_blocks(heights, flips, -1.0)
            for order in itertools.permutations(range(3)):
                kb = _block_key([before[i] for i in order])
                ka = _block_key([after[i] for i in order])
                flipped = _block_key([tuple(reversed(before[i])) for i in order])
                if flipped != ka:
                    raise AssertionError("R3 picture does not reverse strand orders")
                keys.add(kb)
                keys.add(ka)
    return tuple(sorted(keys))


R3_TABLE = derive_r3_table()
_R3_INDEX = {key: i for i, key in enumerate(R3_TABLE)}


# -- pattern matching -----------------------------------------------------------

def _r1_variant(first: GaussEntry) -> int:
    return (0 if first.over else 2) + (0 if first.sign > 0 else 1)


def _r1_pair(variant: int, label: int) -> tuple[GaussEntry, GaussEntry]:
    over_first = variant < 2
    sign = 1 if variant % 2 == 0 else -1
    return GaussEntry(label, over_first, sign), GaussEntry(label, not over_first, sign)


def _r2_variant(x: tuple[GaussEntry, GaussEntry], y: tuple[GaussEntry, GaussEntry]) -> int | None:
    """Variant of the R2 pattern with first pair ``x`` and second pair ``y``, or None."""
    a, b = x[0].label, x[1].label
    if a == b:
        return None
    if {y[0].label, y[1].label} != {a, b}:
        return None
    if not (x[0].over == x[1].over != y[0].over == y[1].over):
        return None
    if x[0].sign != -x[1].sign:
        return None
    reversed_ = y[0].label != a
    return (0 if x[0].over else 4) + (2 if reversed_ else 0) + (0 if x[0].sign > 0 else 1)


def _r2_pairs(variant: int, a: int, b: int):
    over_first = variant < 4
    reversed_ = bool(variant & 2)
    sa = -1 if variant & 1 else 1
    x = (GaussEntry(a, over_first, sa), GaussEntry(b, over_first, -sa))
    ya, yb = GaussEntry(a, not over_first, sa), GaussEntry(b, not over_first, -sa)
    y = (yb, ya) if reversed_ else (ya, yb)
    return x, y


def _pair_at(entries, i, cyclic):
    L = len(entries)
    j = i + 1
    if j >= L:
        if not cyclic or L < 2:
            return None
        j = 0
    return entries[i], entries[j]


def _r3_variant(entries, starts, cyclic) -> int | None:
    blocks = []
    for p in starts:
        pair = _pair_at(entries, p, cyclic)
        if pair is None:
            return None
        blocks.append(tuple((e.label, e.over, e.sign) for e in pair))
    labels = [frozenset(x[0] for x in b) for b in blocks]
    if any(len(s) != 2 for s in labels):
        return None
    for s, t in itertools.combinations(labels, 2):
        if len(s & t) != 1:
            return None
    if len(labels[0] | labels[1] | labels[2]) != 3:
        return None
    return _R3_INDEX.get(_block_key(blocks))


def _blocks_disjoint(starts, L, cyclic) -> bool:
    cells = set()
    for p in starts:
        q = p + 1
        if q >= L:
            if not cyclic:
                return False
            q -= L
        if p in cells or q in cells:
            return False
        cells.update((p, q))
    return True


# -- enumeration ----------------------------------------------------------------

def _deletion_sites(entries, cyclic):
    L = len(entries)
    sites = []
    n_pairs = L if cyclic and L > 2 else L - 1
    for i in range(max(0, n_pairs)):
        pair = _pair_at(entries, i, cyclic)
        if pair[0].label == pair[1].label:
            sites.append(MoveSite("R1-", (i,), _r1_variant(pair[0])))
    if L >= 4:
        for i in range(n_pairs):
            x = _pair_at(entries, i, cyclic)
            if x[0].label == x[1].label:
                continue
            for j in range(i + 2, n_pairs):
                if not _blocks_disjoint((i, j), L, cyclic):
                    continue
                v = _r2_variant(x, _pair_at(entries, j, cyclic))
                if v is not None:
                    sites.append(MoveSite("R2-", (i, j), v))
    return sites


def _r3_sites(entries, cyclic):
    L = len(entries)
    if L < 6:
        return []
    pos: dict[int, list[int]] = {}
    for i, e in enumerate(entries):
        pos.setdefault(e.label, []).append(i)

    def other(label, i):
        p, q = pos[label]
        return q if p == i else p

    def blocks_containing(i):
        out = []
        for s in (i - 1, i):
            if cyclic:
                s %= L
            elif s < 0 or s + 1 >= L:
                continue
            out.append(s)
        return out

    found = set()
    n_pairs = L if cyclic else L - 1
    for i in range(n_pairs):
        x = _pair_at(entries, i, cyclic)
        a, b = x[0].label, x[1].label
        if a == b:
            continue
        ia = i
        ib = (i + 1) % L
        for s2 in blocks_containing(other(a, ia)):
            for s3 in blocks_containing(other(b, ib)):
                starts = tuple(sorted({i, s2, s3}))
                if len(starts) != 3 or starts in found:
                    continue
                if not _blocks_disjoint(starts, L, cyclic):
                    continue
                if _r3_variant(entries, starts, cyclic) is not None:
                    found.add(starts)
    return [MoveSite("R3", s, _r3_variant(entries, s, cyclic)) for s in sorted(found)]


def _insertion_sites(entries, cyclic, caps: InsertionCaps):
    L = len(entries)
    n = L // 2
    if not caps.insertions:
        return []
    sites = []
    gaps = range(max(L, 1)) if cyclic else range(L + 1)
    if caps.max_crossings is None or n + 1 <= caps.max_crossings:
        for p in gaps:
            for v in range(4):
                sites.append(MoveSite("R1+", (p,), v))
    if caps.max_crossings is None or n + 2 <= caps.max_crossings:
        for p in gaps:
            for q in gaps:
                if q < p or (caps.max_gap is not None and q - p > caps.max_gap):
                    continue
                for v in range(8):
                    sites.append(MoveSite("R2+", (p, q), v))
    return sites


def _omega_sites(entries):
    L = len(entries)
    sites = []
    if L and not entries[0].over:
        sites.append(MoveSite("OMEGA-", (0,), 0))
    if L and not entries[-1].over and L - 1 != 0:
        sites.append(MoveSite("OMEGA-", (L - 1,), 0))
    return sites


def sites_for_entries(entries, cyclic: bool, mode: str, caps: InsertionCaps) -> list[MoveSite]:
    """Unsorted sites on raw entries; no classicality check on the input."""
    sites = _deletion_sites(entries, cyclic)
    sites += _r3_sites(entries, cyclic)
    sites += _insertion_sites(entries, cyclic, caps)
    if mode == UNDER_CLOSURE:
        sites += _omega_sites(entries)
        sites = [
            s for s in sites
            if carrier_genus(OpenGaussCode(_apply(entries, s, False))) == 0
        ]
    return sites


def check_mode(code, mode: str) -> None:
    if mode == UNDER_CLOSURE:
        if isinstance(code, CyclicGaussCode):
            raise ValueError("under-closure mode applies to open codes only")
        if carrier_genus(code) != 0:
            raise NotClassicalError("under-closure mode needs a classical (genus 0) code")
    elif mode != STANDARD:
        raise ValueError(f"unknown mode {mode!r}")


def enumerate_moves(code, mode: str = STANDARD, caps: InsertionCaps | None = None) -> list[MoveSite]:
    """Every applicable move on ``code`` within ``caps``, in deterministic order.

    ``code`` is an :class:`OpenGaussCode` or a :class:`CyclicGaussCode`.
    Under-closure mode (open classical codes only) adds ``OMEGA-`` deletions
    at the endpoints and keeps only moves whose result is classical.
    """
    check_mode(code, mode)
    cyclic = isinstance(code, CyclicGaussCode)
    sites = sites_for_entries(code.entries, cyclic, mode, caps or InsertionCaps())
    sites.sort(key=MoveSite.sort_key)
    return sites


# -- application ----------------------------------------------------------------

def _check_site(entries, site: MoveSite, cyclic: bool) -> None:
    L = len(entries)
    kind, loc, v = site.kind, site.location, site.variant
    bad = StaleSiteError(f"{site} does not apply to this code")
    try:
        if kind == "R1-":
            (i,) = loc
            pair = _pair_at(entries, i, cyclic) if 0 <= i < L else None
            if pair is None or pair[0].label != pair[1].label or _r1_variant(pair[0]) != v:
                raise bad
        elif kind == "R2-":
            i, j = loc
            if not (0 <= i < j < L) or j - i < 2 or not _blocks_disjoint((i, j), L, cyclic):
                raise bad
            x, y = _pair_at(entries, i, cyclic), _pair_at(entries, j, cyclic)
            if x is None or y is None or _r2_variant(x, y) != v:
                raise bad
        elif kind == "R3":
            if len(loc) != 3 or list(loc) != sorted(set(loc)) or not all(0 <= p < L for p in loc):
                raise bad
            if not _blocks_disjoint(loc, L, cyclic) or _r3_variant(entries, loc, cyclic) != v:
                raise bad
        elif kind == "R1+":
            (p,) = loc
            top = max(L - 1, 0) if cyclic else L
            if not (0 <= p <= top) or not 0 <= v < 4:
                raise bad
        elif kind == "R2+":
            p, q = loc
            top = max(L - 1, 0) if cyclic else L
            if not (0 <= p <= q <= top) or not 0 <= v < 8:
                raise bad
        elif kind == "OMEGA-":
            (i,) = loc
            if cyclic or i not in (0, L - 1) or L == 0 or entries[i].over:
                raise bad
        else:
            raise bad
    except (TypeError, ValueError) as exc:
        if isinstance(exc, StaleSiteError):
            raise
        raise bad from None


def _apply(entries, site: MoveSite, cyclic: bool) -> tuple[GaussEntry, ...]:
    kind, loc, v = site.kind, site.location, site.variant
    L = len(entries)
    fresh = max((e.label for e in entries), default=0) + 1
    if kind == "R1-":
        i = loc[0]
        drop = {i, (i + 1) % L}
        return tuple(e for k, e in enumerate(entries) if k not in drop)
    if kind == "R2-":
        i, j = loc
        drop = {i, (i + 1) % L, j, (j + 1) % L}
        return tuple(e for k, e in enumerate(entries) if k not in drop)
    if kind == "OMEGA-":
        label = entries[loc[0]].label
        return tuple(e for e in entries if e.label != label)
    if kind == "R1+":
        p = loc[0]
        return entries[:p] + _r1_pair(v, fresh) + entries[p:]
    if kind == "R2+":
        p, q = loc
        x, y = _r2_pairs(v, fresh, fresh + 1)
        return entries[:p] + x + entries[p:q] + y + entries[q:]
    if kind == "R3":
        out = list(entries)
        for p in loc:
            q = (p + 1) % L
            out[p], out[q] = entries[q], entries[p]
        return tuple(out)
    raise StaleSiteError(f"unknown move kind {kind!r}")


def apply_move(code, site: MoveSite):
    """Apply ``site`` to ``code`` and return the re-canonicalized result.

    Raises :class:`StaleSiteError` if the site's pattern is not present.
    """
    cyclic = isinstance(code, CyclicGaussCode)
    _check_site(code.entries, site, cyclic)
    out = _apply(code.entries, site, cyclic)
    return canonicalize(type(code)(out))


def apply_unchecked(entries: tuple[GaussEntry, ...], site: MoveSite, cyclic: bool = False):
    """Fast path for search: canonical entries of the result, no site validation."""
    out = _apply(entries, site, cyclic)
    if cyclic:
        from .gauss import cyclic_canonical_entries

        return cyclic_canonical_entries(out)
    return relabel_entries(out)


def is_forbidden_endpoint_slide(code: OpenGaussCode, end: str, over: bool | str) -> bool:
    """Whether the passage next to ``end`` ("tail"/"head") has the given pass value.

    If so the corresponding forbidden move (OMEGA+ for over, OMEGA- for under)
    could slide the endpoint off that crossing; standard mode rejects it.
    """
    if isinstance(over, str):
        over = over.lower() in ("over", "o", "+")
    if not code.entries:
        return False
    if end == "tail":
        e = code.entries[0]
    elif end == "head":
        e = code.entries[-1]
    else:
        raise ValueError(f"end must be 'tail' or 'head', not {end!r}")
    return e.over == over


def find_inverse(before, after, mode: str = STANDARD) -> MoveSite | None:
    """A site on ``after`` whose application gives ``canonicalize(before)``."""
    target = canonicalize(before)
    caps = InsertionCaps(max_crossings=max(before.n, after.n))
    for site in enumerate_moves(after, mode=STANDARD, caps=caps):
        if apply_move(after, site) == target:
            return site
    return None
