"""Independent reference implementations used to check the library.

Nothing here imports the library's surface, invariant or polynomial code.
Codes are plain lists of ``(label, over, sign)`` triples and polynomials are
``{exponent: coefficient}`` dicts.
"""

import itertools
import math


def triples(code):
    return [(e.label, e.over, e.sign) for e in code.entries]


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def count(self):
        return len({self.find(x) for x in range(len(self.parent))})


def _crossing_geometry(sign):
    """Unit vectors of the four strand ends at a crossing.

    The understrand runs south to north. Seen along it, a positive
    overstrand goes from left (west) to right (east); a negative one the
    other way. Returns ``{name: angle}`` for u_in, u_out, o_in, o_out.
    """
    west, east = math.pi, 0.0
    o_in, o_out = (west, east) if sign > 0 else (east, west)
    return {"u_in": -math.pi / 2, "u_out": math.pi / 2, "o_in": o_in, "o_out": o_out}


def _ccw_order(geometry):
    return sorted(geometry, key=lambda k: geometry[k] % (2 * math.pi))


def _ends(code_triples):
    """Positions of the four ends of each crossing along the curve."""
    under, over, sign = {}, {}, {}
    for i, (label, is_over, s) in enumerate(code_triples):
        (over if is_over else under)[label] = i
        sign[label] = s
    return under, over, sign


def genus_oracle(code_triples):
    """Carrier genus by building the ribbon surface's boundary explicitly.

    Every band end has two corner points on its disk, ``cw`` and ``ccw``.
    Disk boundary arcs join one end's ccw corner to the next end's cw
    corner; an untwisted band joins ``ccw`` at one end to ``cw`` at the
    other and vice versa. Boundary circles are the connected components.
    """
    L = len(code_triples)
    n = L // 2
    # band k runs from "start of segment k" to "end of segment k", k = 0..L
    n_ends = 2 * (L + 1)
    uf = UnionFind(2 * n_ends)

    def cw(end):
        return 2 * end

    def ccw(end):
        return 2 * end + 1

    for k in range(L + 1):
        a, b = 2 * k, 2 * k + 1
        uf.union(ccw(a), cw(b))
        uf.union(cw(a), ccw(b))
    # endpoint disks
    uf.union(cw(0), ccw(0))
    uf.union(cw(n_ends - 1), ccw(n_ends - 1))
    under, over, sign = _ends(code_triples)
    for label in under:
        u, o = under[label], over[label]
        end_of = {"u_in": 2 * u + 1, "u_out": 2 * (u + 1), "o_in": 2 * o + 1, "o_out": 2 * (o + 1)}
        order = _ccw_order(_crossing_geometry(sign[label]))
        for x, y in zip(order, order[1:] + order[:1]):
            uf.union(ccw(end_of[x]), cw(end_of[y]))
    boundary = uf.count()
    chi = (n + 2) - (2 * n + 1)
    twice_g = 2 - chi - boundary
    assert twice_g >= 0 and twice_g % 2 == 0
    return twice_g // 2


# -- polynomials as dicts ----------------------------------------------------

def padd(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def pmul(p, q):
    out = {}
    for (e1, c1), (e2, c2) in itertools.product(p.items(), q.items()):
        out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def ppow(p, k):
    out = {0: 1}
    for _ in range(k):
        out = pmul(out, p)
    return out


DELTA = {2: -1, -2: -1}


def bracket_oracle(code_triples):
    """Kauffman bracket of a cyclic code by brute force over all states.

    At each crossing, in counterclockwise order, the A-smoothing joins each
    under end to the next over end (closing off the two B regions) and the
    B-smoothing joins each over end to the next under end.
    """
    L = len(code_triples)
    if L == 0:
        return {0: 1}
    under, over, sign = _ends(code_triples)
    labels = sorted(under)
    # arc ends: 2i = arriving at position i, 2i + 1 = leaving position i
    result = {}
    for state in itertools.product("AB", repeat=len(labels)):
        uf = UnionFind(2 * L)
        for i in range(L):
            uf.union(2 * i + 1, 2 * ((i + 1) % L))
        for label, s in zip(labels, state):
            u, o = under[label], over[label]
            end_of = {"u_in": 2 * u, "u_out": 2 * u + 1, "o_in": 2 * o, "o_out": 2 * o + 1}
            order = _ccw_order(_crossing_geometry(sign[label]))
            for x, y in zip(order, order[1:] + order[:1]):
                joins_a = x.startswith("u") and y.startswith("o")
                if joins_a == (s == "A"):
                    uf.union(end_of[x], end_of[y])
        loops = uf.count()
        a = state.count("A")
        b = len(state) - a
        term = pmul({a - b: 1}, ppow(DELTA, loops - 1))
        result = padd(result, term)
    return result


def f_oracle(code_triples):
    w = sum(s for _, is_over, s in code_triples if is_over)
    norm = {-3 * w: (-1) ** (w % 2)}
    return pmul(norm, bracket_oracle(code_triples))


def as_dict(poly):
    return dict(poly.terms)


# Right-handed trefoil as a closed curve (sign +1 under the convention above)
# and its normalized bracket, the Jones polynomial at t = A**-4.
TREFOIL_CYCLIC = "O1+ U2+ O3+ U1+ O2+ U3+"
TREFOIL_F = {-4: 1, -12: 1, -16: -1}
