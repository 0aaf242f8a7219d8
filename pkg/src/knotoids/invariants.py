"""Kauffman bracket of virtual knot diagrams and the writhe-normalized f-polynomial.

The bracket is the state sum over A/B smoothings of every classical crossing
of the cyclic Gauss code::

    <K> = sum_states A**(a - b) * delta**(loops - 1),  delta = -A**2 - A**-2

Loops are traced along the Gauss diagram, so virtual crossings never need
handling. Via the virtual closure this gives an invariant of virtual
knotoids, :func:`knotoid_f`.

States are evaluated in blocks with numpy, one row per state. Each
smoothing is an involution on arc ends; composed with the arc involution it
is a permutation whose cycle count is twice the loop count. Cycles are
counted by pointer doubling on the flattened rows (each end learns the
minimum end index on its cycle).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import CapExceededError
from .gauss import CyclicGaussCode, GaussEntry, OpenGaussCode, relabel_entries, virtual_closure
from .laurent import DELTA, LaurentPolynomial

__all__ = ["DEFAULT_CAP", "writhe", "bracket", "f_polynomial", "knotoid_f", "smoothing_pairs"]

DEFAULT_CAP = 16
_BLOCK = 1 << 12


def writhe(code: CyclicGaussCode | OpenGaussCode) -> int:
    """Sum of crossing signs, each label counted once."""
    return sum(e.sign for e in code.entries if e.over)


def _crossing_ends(entries: tuple[GaussEntry, ...]) -> list[tuple[int, int, int, int]]:
    under, over, sign = {}, {}, {}
    for i, e in enumerate(entries):
        (over if e.over else under)[e.label] = i
        sign[e.label] = e.sign
    out = []
    for label in sorted(under):
        u, o = under[label], over[label]
        u_in, u_out, o_in, o_out = 2 * u, 2 * u + 1, 2 * o, 2 * o + 1
        if sign[label] > 0:
            out.append((u_in, o_out, u_out, o_in))
        else:
            out.append((u_in, o_in, u_out, o_out))
    return out


def smoothing_pairs(entries: tuple[GaussEntry, ...]):
    """Per crossing, the ``(A pairs, B pairs)`` of arc ends joined by each smoothing.

    Arc ends are numbered ``2i`` (into position ``i``) and ``2i + 1`` (out
    of position ``i``). With ends ``(d0, d1, d2, d3)`` counterclockwise from
    the incoming understrand, the A-smoothing joins ``d0-d1`` and ``d2-d3``
    (it opens the two regions swept by turning the overstrand
    counterclockwise) and the B-smoothing joins ``d1-d2`` and ``d3-d0``.
    """
    return [
        (((d0, d1), (d2, d3)), ((d1, d2), (d3, d0)))
        for d0, d1, d2, d3 in _crossing_ends(entries)
    ]


def _state_histogram(entries: tuple[GaussEntry, ...]) -> dict[tuple[int, int], int]:
    """Count states by ``(number of B smoothings, number of loops)``."""
    L = len(entries)
    n = L // 2
    if n == 0:
        return {(0, 1): 1}
    ends = 2 * L
    arc = [0] * ends
    for i in range(L):
        j = (i + 1) % L
        arc[2 * i + 1] = 2 * j
        arc[2 * j] = 2 * i + 1
    # partner of each end under the A and B smoothings, and the crossing it belongs to
    smooth_a, smooth_b, owner = [0] * ends, [0] * ends, [0] * ends
    for c, (d0, d1, d2, d3) in enumerate(_crossing_ends(entries)):
        smooth_a[d0], smooth_a[d1], smooth_a[d2], smooth_a[d3] = d1, d0, d3, d2
        smooth_b[d0], smooth_b[d1], smooth_b[d2], smooth_b[d3] = d3, d2, d1, d0
        owner[d0] = owner[d1] = owner[d2] = owner[d3] = c
    # compose with the arc involution up front: perm = smoothing o arc
    pa = np.array([smooth_a[x] for x in arc], dtype=np.int64)
    pb = np.array([smooth_b[x] for x in arc], dtype=np.int64)
    po = np.array([owner[x] for x in arc], dtype=np.int64)
    steps = max(1, int(np.ceil(np.log2(ends))))
    shifts = np.arange(n, dtype=np.int64)
    counts = np.zeros((n + 1) * (ends + 1), dtype=np.int64)
    total = 1 << n
    for lo in range(0, total, _BLOCK):
        states = np.arange(lo, min(total, lo + _BLOCK), dtype=np.int64)
        size = len(states)
        bits = (states[:, None] >> shifts) & 1
        offsets = (np.arange(size, dtype=np.int64) * ends)[:, None]
        perm = (np.where(bits[:, po] == 1, pb, pa) + offsets).ravel()
        ident = (np.arange(ends, dtype=np.int64) + offsets).ravel()
        low = ident
        for _ in range(steps):
            low = np.minimum(low, low[perm])
            perm = perm[perm]
        loops = (low == ident).reshape(size, ends).sum(axis=1) // 2
        counts += np.bincount(bits.sum(axis=1) * (ends + 1) + loops, minlength=len(counts))
    return {divmod(int(k), ends + 1): int(counts[k]) for k in np.flatnonzero(counts)}


@lru_cache(maxsize=None)
def _delta_power(k: int) -> LaurentPolynomial:
    return DELTA**k


@lru_cache(maxsize=200_000)
def _bracket_cached(entries: tuple[GaussEntry, ...]) -> LaurentPolynomial:
    n = len(entries) // 2
    acc: dict[int, int] = {}
    for (n_b, loops), count in _state_histogram(entries).items():
        shift = n - 2 * n_b
        for e, c in _delta_power(loops - 1).terms.items():
            acc[e + shift] = acc.get(e + shift, 0) + c * count
    return LaurentPolynomial(acc)


def bracket(code: CyclicGaussCode, cap: int = DEFAULT_CAP) -> LaurentPolynomial:
    """Exact Kauffman bracket of a virtual knot diagram (cost ``2**n`` states)."""
    if code.n > cap:
        raise CapExceededError(f"{code.n} crossings exceeds the state-sum cap of {cap}")
    return _bracket_cached(relabel_entries(code.entries))


def f_polynomial(code: CyclicGaussCode, cap: int = DEFAULT_CAP) -> LaurentPolynomial:
    """``(-A**3)**(-writhe) * bracket``; invariant under all Reidemeister moves."""
    w = writhe(code)
    norm = LaurentPolynomial.monomial(-3 * w, -1 if w % 2 else 1)
    return norm * bracket(code, cap)


def knotoid_f(code: OpenGaussCode, cap: int = DEFAULT_CAP) -> LaurentPolynomial:
    """f-polynomial of the virtual closure; an invariant of the virtual knotoid."""
    return f_polynomial(virtual_closure(code), cap)
