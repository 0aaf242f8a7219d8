"""Acceptance criteria 1-8, each at its stated tolerance.

Each test records one pass/fail line (printed in the terminal summary) and
then asserts. Runtime limits are reported next to the measured time.
"""

import itertools
import random
import subprocess
import sys
import time

from knotoids import fixture_path
from knotoids.gauss import all_codes, canonicalize, parse_code, parse_cyclic, product, random_code, serialize
from knotoids.invariants import f_polynomial, knotoid_f
from knotoids.laurent import LaurentPolynomial
from knotoids.moves import InsertionCaps, apply_move, enumerate_moves
from knotoids.planar import face_routes, from_classical_code, overpass_closure, read_pkd, underpass_closure
from knotoids.search import Distinct, Equivalent, SearchBudget, equivalent, explore, min_genus_bound, replay
from knotoids.surface import carrier_genus
from oracles import TREFOIL_CYCLIC, as_dict, f_oracle, genus_oracle, triples

FIG5 = str(fixture_path("fig5.pkd"))
ONE = LaurentPolynomial.constant(1)


def classical_codes(max_n):
    return [c for n in range(max_n + 1) for c in all_codes(n) if carrier_genus(c) == 0]


def random_classical(rng, n_min, n_max):
    while True:
        code = random_code(rng.randint(n_min, n_max), rng)
        if carrier_genus(code) == 0:
            return code


def test_1_move_soundness(report):
    start = time.perf_counter()
    rng = random.Random(2024)
    corpus = [c for n in range(4) for c in all_codes(n)]
    corpus += [random_code(rng.randint(0, 6), rng) for _ in range(200)]
    sites = failures = 0
    for code in corpus:
        f = knotoid_f(code)
        # every insertion position; one or two new crossings
        for site in enumerate_moves(code, caps=InsertionCaps(max_crossings=code.n + 2)):
            sites += 1
            if knotoid_f(apply_move(code, site)) != f:
                failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0
    report(1, "move soundness", ok, f"{len(corpus)} codes, {sites} sites, {failures} changed f, {elapsed:.0f}s of 120s")
    assert ok


def test_2_genus_oracle(report):
    start = time.perf_counter()
    rng = random.Random(7)
    corpus = [c for n in range(4) for c in all_codes(n)]
    corpus += [random_code(rng.randint(0, 8), rng) for _ in range(500)]
    mismatches = [c for c in corpus if carrier_genus(c) != genus_oracle(triples(c))]
    elapsed = time.perf_counter() - start
    ok = not mismatches
    report(2, "genus oracle", ok, f"{len(corpus)} codes, {len(mismatches)} mismatches, {elapsed:.0f}s of 60s")
    assert ok


def test_3_figure5(report):
    d = read_pkd(FIG5)
    trefoil = f_oracle(triples(parse_cyclic(TREFOIL_CYCLIC)))
    under = as_dict(f_polynomial(underpass_closure(d)))
    over = f_polynomial(overpass_closure(d))
    ok = under == trefoil and over == ONE
    report(3, "figure 5", ok, f"underpass f {under}, trefoil oracle {trefoil}, overpass f {over.serialize()}")
    assert ok


def test_4_route_independence(report):
    start = time.perf_counter()
    d = read_pkd(FIG5)
    routes = face_routes(d)
    closures = [underpass_closure(d, {"edges": r}) for r in routes]
    fig5_equal = len(routes) >= 3 and len({f_polynomial(c) for c in closures}) == 1
    connected = []
    for a, b in itertools.combinations(closures, 2):
        verdict = equivalent(a, b)
        connected.append(
            isinstance(verdict, Equivalent) and canonicalize(replay(a, verdict.path)) == canonicalize(b)
        )
    rng = random.Random(99)
    diagrams = []
    while len(diagrams) < 20:
        diag = from_classical_code(random_classical(rng, 3, 6))
        if len(face_routes(diag, limit=3)) >= 3:
            diagrams.append(diag)
    random_equal = 0
    for diag in diagrams:
        values = {f_polynomial(underpass_closure(diag, {"edges": r})) for r in face_routes(diag, limit=6)}
        random_equal += len(values) == 1
    elapsed = time.perf_counter() - start
    ok = fig5_equal and all(connected) and random_equal == 20
    report(
        4,
        "closure route independence",
        ok,
        f"fig5 {len(routes)} routes equal f={fig5_equal}, {sum(connected)}/{len(connected)} pairs joined by search, "
        f"{random_equal}/20 random diagrams route independent, {elapsed:.0f}s of 300s",
    )
    assert ok


def test_5_semigroup(report):
    rng = random.Random(5)
    empty = parse_code("")
    failures = 0
    for _ in range(100):
        a, b, c = (random_code(rng.randint(0, 4), rng) for _ in range(3))
        if not (product(empty, a) == a == product(a, empty)):
            failures += 1
        if product(product(a, b), c) != product(a, product(b, c)):
            failures += 1
    ok = failures == 0
    report(5, "semigroup laws", ok, f"100 triples, {failures} failures")
    assert ok


def test_6_classical_pairs(report):
    start = time.perf_counter()
    codes = classical_codes(3)
    f = {c: knotoid_f(c) for c in codes}
    wrong = distinct = same_f = 0
    for a, b in itertools.combinations(codes, 2):
        if f[a] == f[b]:
            same_f += 1
            continue
        verdict = equivalent(a, b)
        distinct += isinstance(verdict, Distinct)
        wrong += isinstance(verdict, Equivalent)
    # explored classes never mix values of f
    rng = random.Random(6)
    mixed = 0
    for code in rng.sample(codes, 60):
        reached = explore(code, SearchBudget(max_crossings=5, max_nodes=400, max_depth=4))
        mixed += any(knotoid_f(c) != f[code] for c in reached.codes)
    trefoil_type = equivalent(parse_code("O1+ U2+ U1+ O2+"), parse_code(""))
    # Open question, recorded only: does a genus-0 restricted search connect equal-f pairs?
    small = SearchBudget(max_crossings=5, max_nodes=3000, max_depth=4)
    restricted = SearchBudget(max_crossings=5, max_nodes=3000, max_depth=4, classical_only=True)
    sample = [(a, b) for a, b in itertools.combinations(codes[:40], 2) if f[a] == f[b]][:25]
    found_all = sum(isinstance(equivalent(a, b, small), Equivalent) for a, b in sample)
    found_g0 = sum(isinstance(equivalent(a, b, restricted), Equivalent) for a, b in sample)
    elapsed = time.perf_counter() - start
    ok = wrong == 0 and mixed == 0 and isinstance(trefoil_type, Distinct)
    report(
        6,
        "classical pairs",
        ok,
        f"{len(codes)} codes, {distinct} differing-f pairs all DISTINCT, {wrong} wrong, {mixed} mixed classes, "
        f"trefoil-type vs trivial {trefoil_type}; recorded: {found_all}/{len(sample)} equal-f pairs joined, "
        f"{found_g0}/{len(sample)} with genus-0 restriction; {elapsed:.0f}s of 300s",
    )
    assert ok


def test_7_min_genus(report):
    start = time.perf_counter()
    rng = random.Random(77)
    chain = [
        SearchBudget(max_crossings=3, max_nodes=100, max_depth=2),
        SearchBudget(max_crossings=3, max_nodes=400, max_depth=3),
        SearchBudget(max_crossings=4, max_nodes=400, max_depth=3),
        SearchBudget(max_crossings=4, max_nodes=1500, max_depth=4),
    ]
    monotone = 0
    for _ in range(50):
        code = random_code(rng.randint(1, 4), rng)
        bounds = [min_genus_bound(code, b)[0] for b in chain]
        monotone += bounds == sorted(bounds, reverse=True)
    classical = classical_codes(3) + [random_classical(rng, 4, 8) for _ in range(20)]
    zero = 0
    for code in classical:
        g, witness = min_genus_bound(code)
        zero += g == 0 and carrier_genus(witness) == 0
    genus1, witness = min_genus_bound(parse_code("O1+ O2+ U1+ U2+"))
    elapsed = time.perf_counter() - start
    ok = monotone == 50 and zero == len(classical) and genus1 == 1
    report(
        7,
        "minimal genus bound",
        ok,
        f"monotone {monotone}/50, zero on {zero}/{len(classical)} classical codes, "
        f"genus-1 code bound {genus1} (witness {serialize(witness)}), {elapsed:.0f}s of 300s",
    )
    assert ok


CLI_RUNS = [
    ["validate", "O1+ U2- U1+ O2-"],
    ["canon", "U7- O3+ O7- U3+"],
    ["product", "O1+ U2+ U1+ O2+", "U1- O1-"],
    ["closure", "--type", "under", FIG5],
    ["closure", "--type", "over", FIG5],
    ["genus", "O1+ O2+ U1+ U2+"],
    ["classical", "O1+ U1+"],
    ["bracket", "O1+ O2+ U1+ U2+"],
    ["f", "--type", "under", FIG5],
    ["moves", "O1+ U2+ U1+ O2+", "--max-crossings", "3"],
    ["apply", "O1+ U1+", "R1-@0#0"],
    ["equiv", "", "O1+ U1+", "--max-depth", "2"],
    ["equiv", "", "O1+ U2+ U1+ O2+"],
    ["min-genus", "O1+ O2+ U1+ U2+", "--max-crossings", "4", "--max-nodes", "2000"],
    ["validate", "O1+ U1-"],
]


def _cli(argv):
    proc = subprocess.run([sys.executable, "-m", "knotoids.cli", *argv], capture_output=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_8_determinism(report, tmp_path):
    start = time.perf_counter()
    budget = ["--max-crossings", "4", "--max-nodes", "500", "--max-depth", "4"]
    stores = []
    for k in range(2):
        path = tmp_path / f"tab{k}.tsv"
        status, _, err = _cli(["tabulate", "2", "--out", str(path), *budget])
        assert status == 0, err
        stores.append(path.read_bytes())
    same_store = stores[0] == stores[1]
    stable = sum(_cli(argv) == _cli(argv) for argv in CLI_RUNS)
    elapsed = time.perf_counter() - start
    ok = same_store and stable == len(CLI_RUNS)
    report(
        8,
        "determinism",
        ok,
        f"tabulate n-max 2 stores identical={same_store} ({len(stores[0])} bytes), "
        f"{stable}/{len(CLI_RUNS)} CLI invocations byte-stable, {elapsed:.0f}s",
    )
    assert ok
