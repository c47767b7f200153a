from fractions import Fraction
from itertools import permutations, product
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a1count.classes import PlaneClass, enumerate_y_classes, minimize
from a1count.torsion import (
    STANDARD,
    SurfaceConfig,
    TorsionPoint,
    base_points,
    coset_row,
    model_weights,
    ordered_counts,
    points_of_order,
    relation_holds,
    tp_order,
)

fracs = st.builds(Fraction, st.integers(-200, 200), st.integers(1, 60))
points = st.builds(TorsionPoint, fracs, fracs)


@settings(max_examples=1000, deadline=None)
@given(points, points, points, st.integers(-30, 30))
def test_group_laws(p, q, r, k):
    zero = TorsionPoint.zero()
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p + zero == p
    assert p + (-p) == zero
    assert p - q == p + (-q)
    assert (p + q) * k == p * k + q * k
    for c in (p.u, p.v):
        assert 0 <= c < 1


@settings(max_examples=500, deadline=None)
@given(points)
def test_order_formula(p):
    n = tp_order(p)
    assert (p * n).is_zero()
    assert all(not (p * m).is_zero() for m in range(1, n))
    assert n == lcm(p.u.denominator, p.v.denominator)


def test_order_examples():
    assert tp_order(TorsionPoint(0, 0)) == 1
    assert tp_order(TorsionPoint(Fraction(1, 9), 0)) == 9
    assert tp_order(TorsionPoint(Fraction(1, 12), Fraction(1, 6))) == 12


def test_reduction_mod_one():
    assert TorsionPoint(Fraction(5, 3), Fraction(-1, 3)) == TorsionPoint(Fraction(2, 3), Fraction(2, 3))


def test_standard_config():
    three = {p for p in points_of_order(3)} | {TorsionPoint.zero()}
    assert set(STANDARD.p) | set(STANDARD.q) == three
    assert len(set(STANDARD.p)) == 6
    assert sum(STANDARD.p, TorsionPoint.zero()).is_zero()
    assert set(STANDARD.q) == {TorsionPoint(0, Fraction(2, 3)), TorsionPoint(Fraction(1, 3), Fraction(2, 3)),
                               TorsionPoint(Fraction(2, 3), Fraction(2, 3))}


def test_bad_config_rejected():
    with pytest.raises(ValueError):
        SurfaceConfig(p=STANDARD.p[:5] + (STANDARD.q[0],), q=STANDARD.q, o_z=STANDARD.o_z)


def test_base_points():
    bp = base_points(4)
    assert bp["0"] == TorsionPoint(Fraction(1, 12), 0)
    assert bp["2/3"] == TorsionPoint(Fraction(1, 12), Fraction(1, 6))
    assert tp_order(base_points(5)["0"]) == 15
    for d in range(1, 8):
        for row, p in base_points(d).items():
            assert tp_order(p) == 3 * d
            assert coset_row(d, p) == row
    with pytest.raises(ValueError):
        base_points(0)


def test_relation_examples():
    for p in points_of_order(18):
        assert not relation_holds(6, p, (2,) * 6)
    assert relation_holds(5, STANDARD.o_z, (0,) * 6)


def _distinct_count(d, p, multiset):
    return sum(1 for a in set(permutations(multiset)) if relation_holds(d, p, a))


def test_relation_count_d4():
    assert _distinct_count(4, base_points(4)["0"], (0, 0, 1, 1, 1, 2)) == 7


# genus-0 then genus-1 rows, in enumeration order
D4_TABLES = {
    "0": ([1, 7, 7, 1, 7, 1], [1, 1, 1]),
    "2/3": ([3, 6, 6, 0, 6, 3], [0, 3, 0]),
}


@pytest.mark.parametrize("row", sorted(D4_TABLES))
def test_d4_tables(row):
    counts = ordered_counts(4, base_points(4)[row])
    g0 = [k for c, k in counts.items() if c.genus == 0]
    g1 = [k for c, k in counts.items() if c.genus == 1]
    assert (g0, g1) == D4_TABLES[row]
    assert sum(g0) == 24 and sum(g1) == 3
    assert sum(g0) * 1 + sum(g1) * 8 == 48


def test_ordered_counts_brute_force_d4():
    p = base_points(4)["0"]
    counts = ordered_counts(4, p)
    brute = {}
    for a in product(range(5), repeat=6):
        if (4 + sum(a)) % 3 or not relation_holds(4, p, a):
            continue
        c = PlaneClass((4 + sum(a)) // 3, tuple(sorted(a, reverse=True)))
        if c in counts:
            brute[c] = brute.get(c, 0) + 1
    assert brute == {c: k for c, k in counts.items() if k}


def test_wrong_order_rejected():
    with pytest.raises(ValueError):
        ordered_counts(4, TorsionPoint(Fraction(1, 9), 0))


@pytest.mark.parametrize("d", range(1, 8))
def test_model_totals_divisible_by_three(d):
    for p in base_points(d).values():
        totals = {}
        for c, k in ordered_counts(d, p).items():
            totals[minimize(c)] = totals.get(minimize(c), 0) + k
        assert all(k % 3 == 0 for k in totals.values())


@pytest.mark.parametrize("d", range(2, 8))
def test_weights_independent_of_representative(d):
    ref = model_weights(d, base_points(d)["0"])
    pts = [p for p in points_of_order(3 * d) if p not in STANDARD.p]
    assert len(pts) > 2
    for p in pts:
        assert model_weights(d, p) == ref


def test_candidates_cover_ordered_counts():
    for d in range(1, 8):
        cands = set(enumerate_y_classes(d))
        assert set(ordered_counts(d, base_points(d)["2/3"])) == cands
