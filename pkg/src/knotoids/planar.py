"""Knotoid diagrams in the sphere as combinatorial maps.

A :class:`PlanarDiagram` is a rotation system: every edge ``k`` has two
darts ``e<k>a`` and ``e<k>b``; classical and virtual crossings list their
four darts counterclockwise, classical ones starting with the incoming
understrand; the tail and head each hold one dart. Faces are the orbits of
``d -> ccw_next(partner(d))``, and the face of a dart lies on the right of
the edge as seen walking out along that dart.

``.pkd`` text format, one item per line (``#`` comments allowed)::

    C <id> <sign> <d1> <d2> <d3> <d4>    classical crossing, d1 = incoming under
    V <id> <d1> <d2> <d3> <d4>           virtual crossing
    T <dart>                             tail
    H <dart>                             head
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import DiagramError, NotClassicalError, RouteError
from .gauss import CyclicGaussCode, GaussEntry, OpenGaussCode, virtual_closure
from .surface import carrier_genus, crossing_rotation

__all__ = [
    "Crossing",
    "VirtualCrossing",
    "PlanarDiagram",
    "from_classical_code",
    "to_open_code",
    "endpoints_same_face",
    "underpass_closure",
    "overpass_closure",
    "virtual_closure_routed",
    "closure",
    "auto_route",
    "face_routes",
    "parse_pkd",
    "read_pkd",
    "format_pkd",
]

_DART = re.compile(r"e(\d+)([ab])\Z")


def dart_index(name: str) -> int:
    m = _DART.match(name)
    if m is None:
        raise DiagramError(f"bad dart name {name!r}")
    return 2 * int(m.group(1)) + (m.group(2) == "b")


def dart_name(index: int) -> str:
    return f"e{index // 2}{'ab'[index % 2]}"


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: int
    darts: tuple[int, int, int, int]


@dataclass(frozen=True)
class VirtualCrossing:
    id: int
    darts: tuple[int, int, int, int]


@dataclass(frozen=True)
class _Walk:
    passages: tuple[tuple[int, int, bool], ...]  # (crossing id, edge entered on, over?)
    edge_start: dict = field(hash=False, compare=False)  # edge -> dart walked out along


@dataclass(frozen=True)
class PlanarDiagram:
    """Immutable rotation system of a (virtual) knotoid diagram in the sphere."""

    crossings: tuple[Crossing, ...]
    virtuals: tuple[VirtualCrossing, ...]
    tail: int
    head: int

    def __post_init__(self):
        n_edges = self.edge_count
        darts = [d for c in self.crossings for d in c.darts]
        darts += [d for v in self.virtuals for d in v.darts]
        darts += [self.tail, self.head]
        if sorted(darts) != list(range(2 * n_edges)):
            raise DiagramError("every dart e<k>a/e<k>b must be used exactly once")
        ids = [c.id for c in self.crossings] + [v.id for v in self.virtuals]
        if len(set(ids)) != len(ids):
            raise DiagramError("duplicate crossing id")
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise DiagramError(f"crossing {c.id}: sign must be +1 or -1")
        sigma = [0] * (2 * n_edges)
        owner = [None] * (2 * n_edges)
        for vertex in self._vertices():
            for j, d in enumerate(vertex.darts):
                sigma[d] = vertex.darts[(j + 1) % len(vertex.darts)]
                owner[d] = (vertex, j)
        object.__setattr__(self, "_sigma", tuple(sigma))
        object.__setattr__(self, "_owner", tuple(owner))
        object.__setattr__(self, "_walk", self._trace())
        faces, face_of = self._faces()
        object.__setattr__(self, "_faces_list", faces)
        object.__setattr__(self, "_face_of", face_of)
        if self.euler_characteristic() != 2:
            raise DiagramError(
                f"V - E + F = {self.euler_characteristic()}, the map is not spherical"
            )

    @property
    def edge_count(self) -> int:
        return 2 * (len(self.crossings) + len(self.virtuals)) + 1

    def _vertices(self):
        yield _Endpoint(self.tail)
        yield _Endpoint(self.head)
        yield from self.crossings
        yield from self.virtuals

    def _trace(self) -> _Walk:
        """Walk tail to head, checking strand structure and over/under consistency."""
        passages = []
        edge_start = {}
        visits = {}
        d = self.tail
        seen_edges = set()
        while True:
            edge = d // 2
            if edge in seen_edges:
                raise DiagramError("the curve revisits an edge")
            seen_edges.add(edge)
            edge_start[edge] = d
            arrive = d ^ 1
            vertex, j = self._owner[arrive]
            if isinstance(vertex, _Endpoint):
                if arrive != self.head:
                    raise DiagramError("the curve from the tail ends at the tail")
                break
            visits[vertex.id] = visits.get(vertex.id, 0) + 1
            if isinstance(vertex, Crossing):
                if j == 0:
                    passages.append((vertex.id, edge, False))
                elif j == (3 if vertex.sign > 0 else 1):
                    passages.append((vertex.id, edge, True))
                else:
                    raise DiagramError(
                        f"crossing {vertex.id}: the curve enters through a dart that"
                        " is not an incoming strand for its sign"
                    )
            d = vertex.darts[(j + 2) % 4]
        if len(seen_edges) != self.edge_count:
            raise DiagramError("the map has edges off the tail-to-head curve")
        for v in list(self.crossings) + list(self.virtuals):
            if visits.get(v.id) != 2:
                raise DiagramError(f"crossing {v.id} is not visited exactly twice")
        return _Walk(tuple(passages), edge_start)

    def _faces(self):
        n = 2 * self.edge_count
        face_of = [-1] * n
        faces = []
        for start in range(n):
            if face_of[start] >= 0:
                continue
            orbit = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(faces)
                orbit.append(d)
                d = self._sigma[d ^ 1]
            faces.append(tuple(orbit))
        return tuple(faces), tuple(face_of)

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return self._faces_list

    def face_of(self, dart: int) -> int:
        return self._face_of[dart]

    def vertex_count(self) -> int:
        return len(self.crossings) + len(self.virtuals) + 2

    def euler_characteristic(self) -> int:
        return self.vertex_count() - self.edge_count + len(self._faces_list)

    def curve_edges(self) -> list[int]:
        """Edges in order from the tail to the head."""
        return list(self._walk.edge_start)

    def right_face(self, edge: int) -> int:
        return self._face_of[self._walk.edge_start[edge]]

    def left_face(self, edge: int) -> int:
        return self._face_of[self._walk.edge_start[edge] ^ 1]

    def tail_face(self) -> int:
        return self._face_of[self.tail]

    def head_face(self) -> int:
        return self._face_of[self.head]

    def dual_edges(self) -> dict[tuple[int, int], list[int]]:
        """``(f, g) -> edges`` separating faces ``f != g``, both orientations listed."""
        out: dict[tuple[int, int], list[int]] = {}
        for edge in range(self.edge_count):
            f, g = self._face_of[2 * edge], self._face_of[2 * edge + 1]
            if f != g:
                out.setdefault((f, g), []).append(edge)
                out.setdefault((g, f), []).append(edge)
        return out


@dataclass(frozen=True)
class _Endpoint:
    dart: int

    @property
    def darts(self):
        return (self.dart,)


def from_classical_code(code: OpenGaussCode) -> PlanarDiagram:
    """Spherical diagram of a genus-0 code; edge ``k`` is curve segment ``k``."""
    if carrier_genus(code) != 0:
        raise NotClassicalError("the code has positive carrier genus")
    entries = code.entries
    L = len(entries)
    under, over, sign = {}, {}, {}
    for i, e in enumerate(entries):
        (over if e.over else under)[e.label] = i
        sign[e.label] = e.sign
    crossings = []
    for label in under:
        u, o = under[label], over[label]
        darts = crossing_rotation(sign[label], 2 * u + 1, 2 * u + 2, 2 * o + 1, 2 * o + 2)
        crossings.append(Crossing(label, sign[label], darts))
    crossings.sort(key=lambda c: c.id)
    return PlanarDiagram(tuple(crossings), (), 0, 2 * L + 1)


def to_open_code(d: PlanarDiagram) -> OpenGaussCode:
    """Classical passages from tail to head; virtual crossings are skipped."""
    sign = {c.id: c.sign for c in d.crossings}
    return OpenGaussCode(GaussEntry(cid, over, sign[cid]) for cid, _, over in d._walk.passages)


def endpoints_same_face(d: PlanarDiagram) -> bool:
    return d.tail_face() == d.head_face()


def auto_route(d: PlanarDiagram) -> list[int]:
    """Shortest dual path from the head's face to the tail's face, smallest ids first."""
    start, goal = d.head_face(), d.tail_face()
    adj: dict[int, set[int]] = {}
    for f, g in d.dual_edges():
        adj.setdefault(f, set()).add(g)
    parent = {start: None}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        if f == goal:
            break
        for g in sorted(adj.get(f, ())):
            if g not in parent:
                parent[g] = f
                queue.append(g)
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def face_routes(d: PlanarDiagram, limit: int = 100) -> list[list[int]]:
    """Simple dual paths from the head's face to the tail's face, as edge lists.

    Parallel edges between two faces give distinct routes. Deterministic order,
    at most ``limit`` routes.
    """
    start, goal = d.head_face(), d.tail_face()
    dual = d.dual_edges()
    adj: dict[int, list[int]] = {}
    for f, g in sorted(dual):
        adj.setdefault(f, []).append(g)
    routes: list[list[int]] = []

    def rec(f, faces, edges):
        if len(routes) >= limit:
            return
        if f == goal:
            routes.append(list(edges))
            return
        for g in adj.get(f, ()):
            if g in faces:
                continue
            for e in dual[(f, g)]:
                faces.add(g)
                edges.append(e)
                rec(g, faces, edges)
                edges.pop()
                faces.discard(g)

    rec(start, {start}, [])
    return routes


def _edges_for(d: PlanarDiagram, route) -> list[int]:
    """Resolve ``route`` to the list of edges crossed by the closing arc."""
    if route is None or route == "auto":
        route = auto_route(d)
        return _face_path_edges(d, route)
    if isinstance(route, dict) and "edges" in route:
        edges = list(route["edges"])
        _check_edge_route(d, edges)
        return edges
    return _face_path_edges(d, list(route))


def _face_path_edges(d: PlanarDiagram, faces: Sequence[int]) -> list[int]:
    if not faces or faces[0] != d.head_face() or faces[-1] != d.tail_face():
        raise RouteError("a route must run from the head's face to the tail's face")
    if len(set(faces)) != len(faces):
        raise RouteError("a route may not revisit a face")
    dual = d.dual_edges()
    edges = []
    for f, g in zip(faces, faces[1:]):
        if (f, g) not in dual:
            raise RouteError(f"faces {f} and {g} are not adjacent")
        edges.append(min(dual[(f, g)]))
    return edges


def _check_edge_route(d: PlanarDiagram, edges: Sequence[int]) -> None:
    f = d.head_face()
    visited = {f}
    for e in edges:
        if not 0 <= e < d.edge_count:
            raise RouteError(f"no edge {e}")
        a, b = d.face_of(2 * e), d.face_of(2 * e + 1)
        if f == a and b != a:
            f = b
        elif f == b and a != b:
            f = a
        else:
            raise RouteError(f"edge {e} does not border face {f}")
        if f in visited:
            raise RouteError("a route may not revisit a face")
        visited.add(f)
    if f != d.tail_face():
        raise RouteError("the route does not reach the tail's face")


def closure(d: PlanarDiagram, kind: str = "under", route="auto") -> CyclicGaussCode:
    """Close ``d`` along ``route`` with an arc of the given kind (under/over/virtual).

    ``route`` is ``"auto"``, a face path (list of face ids, head's face first)
    or ``{"edges": [...]}`` naming the crossed edges explicitly.
    """
    edges = _edges_for(d, route)
    if kind == "virtual":
        return virtual_closure(to_open_code(d))
    if kind not in ("under", "over"):
        raise ValueError(f"closure kind must be under, over or virtual, not {kind!r}")
    if d.virtuals:
        raise NotClassicalError("under/over closures are defined for diagrams without virtual crossings")
    closing_over = kind == "over"
    next_label = max((c.id for c in d.crossings), default=0) + 1
    new_on_edge: dict[int, GaussEntry] = {}
    arc_entries = []
    f = d.head_face()
    for e in edges:
        right, left = d.right_face(e), d.left_face(e)
        to_left = f == right
        f = left if to_left else right
        # closing arc under: positive iff it crosses the curve from its right to its left
        sign = 1 if to_left != closing_over else -1
        new_on_edge[e] = GaussEntry(next_label, closing_over is False, sign)
        arc_entries.append(GaussEntry(next_label, closing_over, sign))
        next_label += 1
    sign_of = {c.id: c.sign for c in d.crossings}
    entries = []
    passages = {edge: (cid, over) for cid, edge, over in d._walk.passages}
    for edge in d.curve_edges():
        if edge in new_on_edge:
            entries.append(new_on_edge[edge])
        if edge in passages:
            cid, over = passages[edge]
            entries.append(GaussEntry(cid, over, sign_of[cid]))
    return CyclicGaussCode(entries + arc_entries)


def underpass_closure(d: PlanarDiagram, route="auto") -> CyclicGaussCode:
    return closure(d, "under", route)


def overpass_closure(d: PlanarDiagram, route="auto") -> CyclicGaussCode:
    return closure(d, "over", route)


def virtual_closure_routed(d: PlanarDiagram, route="auto") -> CyclicGaussCode:
    """Closure through virtual crossings only; the route is validated but unrecorded."""
    return closure(d, "virtual", route)


# -- .pkd I/O -------------------------------------------------------------------

def parse_pkd(text: str) -> PlanarDiagram:
    crossings, virtuals = [], []
    tail = head = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "C" and len(parts) == 7:
                sign = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}[parts[2]]
                crossings.append(
                    Crossing(int(parts[1]), sign, tuple(dart_index(p) for p in parts[3:]))
                )
            elif tag == "V" and len(parts) == 6:
                virtuals.append(VirtualCrossing(int(parts[1]), tuple(dart_index(p) for p in parts[2:])))
            elif tag == "T" and len(parts) == 2 and tail is None:
                tail = dart_index(parts[1])
            elif tag == "H" and len(parts) == 2 and head is None:
                head = dart_index(parts[1])
            else:
                raise DiagramError(f"line {lineno}: cannot parse {raw.strip()!r}")
        except (KeyError, ValueError) as exc:
            if isinstance(exc, DiagramError):
                raise
            raise DiagramError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
    if tail is None or head is None:
        raise DiagramError("a diagram needs exactly one T and one H line")
    for c in crossings:
        if c.id < 1:
            raise DiagramError("crossing ids must be positive")
    return PlanarDiagram(tuple(crossings), tuple(virtuals), tail, head)


def read_pkd(path: str | Path) -> PlanarDiagram:
    return parse_pkd(Path(path).read_text())


def format_pkd(d: PlanarDiagram) -> str:
    lines = []
    for c in d.crossings:
        lines.append(f"C {c.id} {'+' if c.sign > 0 else '-'} " + " ".join(dart_name(x) for x in c.darts))
    for v in d.virtuals:
        lines.append(f"V {v.id} " + " ".join(dart_name(x) for x in v.darts))
    lines.append(f"T {dart_name(d.tail)}")
    lines.append(f"H {dart_name(d.head)}")
    return "\n".join(lines) + "\n"
