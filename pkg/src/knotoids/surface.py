"""Abstract knotoid diagrams: ribbon surface, boundary count and carrier genus.

The ribbon surface of an open code with ``n`` crossings has a disk for each
crossing and each endpoint (``n + 2`` disks) joined by ``2n + 1`` untwisted
bands along the curve segments. It is a ribbon graph, so its boundary
circles are the orbits of ``rotation o edge-flip`` on half-edges (darts).
Capping the ``B`` boundary circles gives a closed orientable surface of
Euler characteristic ``(1 - n) + B``, hence genus ``(1 + n - B) / 2``.

Half-edge numbering: segment ``k`` (tail side is ``k = 0``) owns darts
``2k`` (its start) and ``2k + 1`` (its end). The passage at code position
``i`` is entered through dart ``2i + 1`` and left through dart ``2i + 2``.
A crossing disk sees its four band ends in counterclockwise order::

        positive                 negative
          U out                    U out
            |                        |
    O in ---+--> O out      O out <--+--- O in
            |                        |
          U in                     U in

i.e. ``(U in, O out, U out, O in)`` for ``+1`` and ``(U in, O in, U out, O out)``
for ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gauss import CyclicGaussCode, GaussEntry, OpenGaussCode

__all__ = [
    "RibbonStructure",
    "crossing_rotation",
    "rotation_system",
    "face_orbits",
    "ribbon_structure",
    "boundary_components",
    "carrier_genus",
    "is_classical",
    "cyclic_boundary_components",
    "cyclic_carrier_genus",
]


def crossing_rotation(sign: int, u_in: int, u_out: int, o_in: int, o_out: int) -> tuple[int, int, int, int]:
    """Counterclockwise band ends at a crossing disk, starting at the incoming understrand."""
    if sign > 0:
        return (u_in, o_out, u_out, o_in)
    return (u_in, o_in, u_out, o_out)


def _passage_positions(entries):
    under, over, sign = {}, {}, {}
    for i, e in enumerate(entries):
        (over if e.over else under)[e.label] = i
        sign[e.label] = e.sign
    return under, over, sign


def rotation_system(entries: tuple[GaussEntry, ...], cyclic: bool = False):
    """Return ``(sigma, n_darts, vertices)`` for the ribbon graph of a code.

    ``sigma[d]`` is the counterclockwise successor of dart ``d`` at its vertex
    and ``vertices`` lists each vertex's darts in counterclockwise order.
    For open codes the tail vertex holds dart 0 and the head vertex the last
    dart; for cyclic codes the segment after the last position wraps to 0.
    """
    L = len(entries)
    if cyclic:
        n_darts = 2 * L

        def d_in(i):
            return 2 * i + 1

        def d_out(i):
            return (2 * i + 2) % n_darts

        vertices = []
    else:
        n_darts = 2 * (L + 1)

        def d_in(i):
            return 2 * i + 1

        def d_out(i):
            return 2 * i + 2

        vertices = [(0,), (n_darts - 1,)]
    under, over, sign = _passage_positions(entries)
    for label in sorted(under):
        u, o = under[label], over[label]
        vertices.append(crossing_rotation(sign[label], d_in(u), d_out(u), d_in(o), d_out(o)))
    sigma = [0] * n_darts
    for darts in vertices:
        k = len(darts)
        for j, d in enumerate(darts):
            sigma[d] = darts[(j + 1) % k]
    return sigma, n_darts, vertices


def face_orbits(sigma: list[int], n_darts: int) -> list[list[int]]:
    """Orbits of ``d -> sigma[d ^ 1]``; ``d ^ 1`` is the other end of d's edge."""
    seen = [False] * n_darts
    orbits = []
    for start in range(n_darts):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = sigma[d ^ 1]
        orbits.append(orbit)
    return orbits


@dataclass(frozen=True)
class RibbonStructure:
    disk_count: int
    band_count: int
    rotations: tuple[tuple[int, ...], ...]
    boundary_components: int
    genus: int

    @property
    def euler_characteristic(self) -> int:
        return self.disk_count - self.band_count


def ribbon_structure(code: OpenGaussCode) -> RibbonStructure:
    entries = code.entries
    n = len(entries) // 2
    sigma, n_darts, vertices = rotation_system(entries)
    b = len(face_orbits(sigma, n_darts))
    twice_g = 1 + n - b
    if twice_g < 0 or twice_g % 2:
        raise RuntimeError(f"ribbon construction bug: n={n}, B={b}")
    return RibbonStructure(
        disk_count=n + 2,
        band_count=2 * n + 1,
        rotations=tuple(tuple(v) for v in vertices),
        boundary_components=b,
        genus=twice_g // 2,
    )


def boundary_components(code: OpenGaussCode) -> int:
    sigma, n_darts, _ = rotation_system(code.entries)
    return len(face_orbits(sigma, n_darts))


def carrier_genus(code: OpenGaussCode) -> int:
    return ribbon_structure(code).genus


def is_classical(code: OpenGaussCode) -> bool:
    """True iff the diagram is realizable in the sphere (carrier genus 0)."""
    return carrier_genus(code) == 0


def cyclic_boundary_components(code: CyclicGaussCode) -> int:
    if not code.entries:
        return 2  # a bare circle's annulus
    sigma, n_darts, _ = rotation_system(code.entries, cyclic=True)
    return len(face_orbits(sigma, n_darts))


def cyclic_carrier_genus(code: CyclicGaussCode) -> int:
    """Genus of the closed virtual knot diagram's carrier: ``(2 + n - B) / 2``."""
    n = code.n
    twice_g = 2 + n - cyclic_boundary_components(code)
    if twice_g < 0 or twice_g % 2:
        raise RuntimeError(f"ribbon construction bug: n={n}")
    return twice_g // 2
