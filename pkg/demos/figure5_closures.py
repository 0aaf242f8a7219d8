"""
Closing a planar knotoid diagram
================================

The stored three-crossing diagram has its tail and head in different
faces. Joining them with an arc that runs under everything gives a trefoil;
running over everything gives the trivial knot.
"""

from knotoids import fixture_path
from knotoids.planar import face_routes, overpass_closure, read_pkd, underpass_closure, to_open_code
from knotoids.invariants import f_polynomial, knotoid_f
from knotoids.gauss import serialize

d = read_pkd(fixture_path("fig5.pkd"))
print("open code:", serialize(to_open_code(d)))

# the closing arc crosses the edges listed in each route
for route in face_routes(d):
    under = underpass_closure(d, {"edges": route})
    print("route", route, "underpass", serialize(under), " f =", f_polynomial(under).serialize())

print("overpass f =", f_polynomial(overpass_closure(d)).serialize())

# the virtual closure keeps both ends virtual, so its f is the knotoid's own
print("knotoid f  =", knotoid_f(to_open_code(d)).serialize())
