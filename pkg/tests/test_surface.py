import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotoids.gauss import all_codes, parse_code, parse_cyclic, product, random_code
from knotoids.surface import (
    boundary_components,
    carrier_genus,
    cyclic_carrier_genus,
    is_classical,
    ribbon_structure,
)
from oracles import genus_oracle, triples

EXAMPLES = [
    ("", 1, 0),
    ("O1+ U1+", 2, 0),
    ("O1+ O2+ U1+ U2+", 1, 1),
]


@pytest.mark.parametrize("text, b, g", EXAMPLES)
def test_examples(text, b, g):
    code = parse_code(text)
    assert boundary_components(code) == b
    assert carrier_genus(code) == g
    assert is_classical(code) == (g == 0)


def test_ribbon_counts():
    code = parse_code("O1+ U2- U1+ O2-")
    rs = ribbon_structure(code)
    assert (rs.disk_count, rs.band_count) == (4, 5)
    assert rs.euler_characteristic == 1 - code.n
    assert len(rs.rotations) == code.n + 2


def test_boundary_bounds_exhaustive():
    for n in range(4):
        for code in all_codes(n):
            b = boundary_components(code)
            assert 1 <= b <= n + 1
            assert (1 + n - b) % 2 == 0


def test_matches_oracle_exhaustive():
    for n in range(4):
        for code in all_codes(n):
            assert carrier_genus(code) == genus_oracle(triples(code)), code


def test_cyclic_genus():
    assert cyclic_carrier_genus(parse_cyclic("")) == 0
    assert cyclic_carrier_genus(parse_cyclic("O1+ U2+ O3+ U1+ O2+ U3+")) == 0
    assert cyclic_carrier_genus(parse_cyclic("O1+ O2+ U1+ U2+")) == 1


@settings(max_examples=300)
@given(st.integers(0, 10**6), st.integers(0, 8))
def test_matches_oracle_random(seed, n):
    code = random_code(n, random.Random(seed))
    assert carrier_genus(code) == genus_oracle(triples(code))


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_genus_additive_under_product(s1, s2):
    a = random_code(random.Random(s1).randint(0, 5), random.Random(s1))
    b = random_code(random.Random(s2).randint(0, 5), random.Random(s2))
    assert carrier_genus(product(a, b)) == carrier_genus(a) + carrier_genus(b)
