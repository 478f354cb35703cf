"""End-to-end acceptance checks, one per release criterion.

Every check uses exact (zero-tolerance) equality; runtime budgets are
asserted where the criterion states one.  Each test prints a PASS line
(visible with ``pytest -s``) once its assertions hold.
"""

import random
import time
from fractions import Fraction

from redim import (
    TransportedSpace,
    build_phi,
    check_axioms,
    check_isomorphism,
    closed_to_halfopen,
    pair_unit,
    real_to_open_rational,
    standard_space,
    to_expansion,
    unpair_unit,
)
from redim import pairing as pairing_module
from redim.cli import main
from redim.sampling import friendly_tuple
from oracles import brute_interleave_prefix, nines_digits
from test_transport import shifted_phi

SPACES = ((3, 1), (2, 3), (1, 4))
ARITY_PAIRS = ((1, 2), (2, 1), (2, 3), (3, 1), (1, 4), (3, 2))


def _fresh_caches():
    to_expansion.cache_clear()
    pairing_module._pair_unit.cache_clear()
    pairing_module._unpair_unit.cache_clear()


def _best_time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        _fresh_caches()
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def test_criterion_1_canonical_expansion_fidelity():
    assert str(to_expansion(Fraction(1, 2))) == "0.4(9)"
    assert str(to_expansion(Fraction(1, 400))) == "0.0024(9)"
    t_half = _best_time(lambda: to_expansion(Fraction(1, 2)))
    t_400 = _best_time(lambda: to_expansion(Fraction(1, 400)))
    assert t_half < 0.001 and t_400 < 0.001
    print(f"criterion 1 (canonical expansion fidelity, {t_half*1e6:.0f}us/{t_400*1e6:.0f}us): PASS")


def test_criterion_2_pairing_oracle():
    half = Fraction(1, 2)

    def work():
        assert pair_unit(half, half) == Fraction(9, 20)
        assert unpair_unit(Fraction(9, 20)) == (half, half)

    elapsed = _best_time(work)
    # independent digit-prefix oracle: hand-rolled 40-digit interleave
    oracle = brute_interleave_prefix(nines_digits(half, 60), nines_digits(half, 60), 40)
    assert nines_digits(Fraction(9, 20), 40) == oracle
    assert elapsed < 0.010
    print(f"criterion 2 (pairing oracle, {elapsed*1e3:.2f}ms): PASS")


def test_criterion_3_bijection_round_trips():
    rng = random.Random(2024)
    start = time.perf_counter()
    cases = 0
    for n, k in ARITY_PAIRS:
        phi = build_phi(n, k)
        for _ in range(200):
            x = friendly_tuple(rng, n)
            v = friendly_tuple(rng, k)
            for coordinate in x + v:
                assert abs(coordinate.numerator) <= 10**6
                assert coordinate.denominator <= 10**6
            assert phi.backward(phi.forward(x)) == x
            assert phi.forward(phi.backward(v)) == v
            cases += 1
    elapsed = time.perf_counter() - start
    assert cases == 1200
    assert elapsed < 60.0
    print(f"criterion 3 (1200 exact round trips, {elapsed:.2f}s): PASS")


def test_criterion_4_eight_axioms():
    start = time.perf_counter()
    for n, k in SPACES:
        report = check_axioms(standard_space(n, k), trials=100, seed=42)
        assert len(report.checks) == 8
        for check in report.checks:
            assert check.passes == 100, (n, k, check.name)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    print(f"criterion 4 (8 axioms x 100 trials x 3 spaces, {elapsed:.2f}s): PASS")


def test_criterion_5_isomorphism():
    for n, k in SPACES:
        report = check_isomorphism(standard_space(n, k), trials=100, seed=42)
        for check in report.checks:
            assert check.passes == 100, (n, k, check.name)
    print("criterion 5 (linearity and round trips, 100/100 each space): PASS")


def test_criterion_6_dimension_witness():
    # R^3 with dimension 1: the one-element basis of R^1 pulls back
    space31 = standard_space(3, 1)
    basis1 = [(Fraction(1),)]
    images31 = space31.basis(basis1)
    assert len(images31) == 1
    rng = random.Random(77)
    from redim.sampling import terminating_vector

    for _ in range(100):
        x = space31.phi.backward(terminating_vector(rng, 1))
        coords = space31.coordinates(basis1, x)
        rebuilt = space31.zero()
        for coefficient, image in zip(coords, images31):
            rebuilt = space31.vadd(rebuilt, space31.smul(coefficient, image))
        assert rebuilt == x

    # R^2 with dimension 3: the standard basis of R^3 pulls back
    space23 = standard_space(2, 3)
    basis3 = [tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)]
    images23 = space23.basis(basis3)
    assert len(images23) == 3
    for _ in range(100):
        x = space23.phi.backward(terminating_vector(rng, 3))
        coords = space23.coordinates(basis3, x)
        rebuilt = space23.zero()
        for coefficient, image in zip(coords, images23):
            rebuilt = space23.vadd(rebuilt, space23.smul(coefficient, image))
        assert rebuilt == x
    print("criterion 6 (dimension witness: |basis| = k, reconstruction x100): PASS")


def test_criterion_7_mutation_sensitivity():
    broken = TransportedSpace(2, 1, shifted_phi(2, 1))
    axioms = check_axioms(broken, trials=100, seed=5)
    iso = check_isomorphism(broken, trials=100, seed=5)
    failures = [c for c in axioms.checks + iso.checks if not c.passed]
    assert failures, "a non-inverse bijection must break some check"
    print(f"criterion 7 (mutation sensitivity, {len(failures)} failing checks): PASS")


def test_criterion_8_interval_maps():
    shift = closed_to_halfopen()
    assert shift.forward(Fraction(0)) == Fraction(1, 2)
    assert shift.forward(Fraction(2, 3)) == Fraction(3, 4)
    assert shift.forward(Fraction(1, 3)) == Fraction(1, 3)
    squash = real_to_open_rational()
    rng = random.Random(88)
    for _ in range(500):
        x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert squash.backward(squash.forward(x)) == x
    print("criterion 8 (interval maps exact, 500 round trips): PASS")


def test_criterion_9_figure_data(tmp_path, capsys):
    target = tmp_path / "figure.csv"
    assert main(["figure", "--samples", "201", "--out", str(target)]) == 0
    rows = target.read_text().strip().splitlines()
    points = [tuple(map(float, row.split(","))) for row in rows]
    assert (0.5, 0.5) in points
    heights = [fx for _, fx in points]
    assert all(a < b for a, b in zip(heights, heights[1:]))
    assert all(0.0 < fx < 1.0 for fx in heights)
    print("criterion 9 (figure data: tangency row, monotone, bounded): PASS")
