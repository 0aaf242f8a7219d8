"""
Carrier genus, products and the virtual closure
===============================================
"""

from knotoids.gauss import parse_code, product, serialize, virtual_closure
from knotoids.surface import carrier_genus, is_classical
from knotoids.invariants import knotoid_f

kink = parse_code("O1+ U1+")
clasp = parse_code("O1+ O2+ U1+ U2+")
trefoil_type = parse_code("O1+ U2+ U1+ O2+")

for name, code in [("kink", kink), ("clasp", clasp), ("trefoil type", trefoil_type)]:
    print(f"{name:13s} genus {carrier_genus(code)} classical {is_classical(code)} f {knotoid_f(code).serialize()}")

# products concatenate codes; genus adds up and f multiplies on these samples
p = product(clasp, trefoil_type)
print("product:", serialize(p))
print("genus", carrier_genus(p), "=", carrier_genus(clasp), "+", carrier_genus(trefoil_type))
print("f(product) == f(a) * f(b):", knotoid_f(p) == knotoid_f(clasp) * knotoid_f(trefoil_type))

print("virtual closure of the clasp:", serialize(virtual_closure(clasp)))
