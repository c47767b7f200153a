import pytest

from a1count.affine import AffineCount
from a1count.classes import PlaneClass
from a1count.pipeline import (
    CONDITIONAL_NOTE,
    RouteDisagreement,
    build_report,
    compute_n,
    cor43_breakdown,
    display_weights,
    engine_value,
    solve_x,
    torsion_route,
)

HEADLINE = {1: 1, 2: 1, 3: 3, 4: 16, 5: 113, 6: 948, 7: 8974}


@pytest.mark.parametrize("d", sorted(HEADLINE))
def test_compute_n(d):
    assert compute_n(d).value == HEADLINE[d]


@pytest.mark.parametrize("d", range(1, 6))
def test_dual_routes(d):
    _, _, total = torsion_route(d)
    assert total == engine_value(d) == HEADLINE[d]


def test_d6_routes_fix_x():
    _, _, total = torsion_route(6)
    assert total == 948
    assert engine_value(6) == AffineCount(-6342, 81)
    assert solve_x() == 90
    assert engine_value(6).subs(90) == total


def test_d4_breakdown():
    r = compute_n(4)
    assert r.weights == {PlaneClass(2, (1, 1)): 8, PlaneClass(3, (1,) * 5): 1}
    assert list(r.model_values.values()) == [1, 8]


def test_d5_breakdown():
    r = compute_n(5)
    assert list(r.weights.values()) == [16, 8, 1]
    assert list(r.model_values.values()) == [1, 7, 41]


def test_d7_breakdown_and_note():
    r = compute_n(7)
    assert list(r.weights.values()) == [16, 40, 40, 16, 1, 8, 1]
    assert list(r.model_values.values()) == [1, 5, 26, 116, 129, 493, 1789]
    assert r.engine is None
    assert r.note == CONDITIONAL_NOTE
    assert compute_n(7, symbolic=True).value == AffineCount(9604, -7)


def test_display_weights():
    assert list(display_weights(5).values()) == [16, 8, 1]
    assert list(display_weights(6).values()) == [21, 27, 9, 3]
    assert list(display_weights(7).values()) == [16, 40, 40, 16, 1, 8, 1]


def test_honest_d6_weights():
    w = torsion_route(6)[0]
    assert w[PlaneClass(2, ())] == 3 and w[PlaneClass(3, (2, 1))] == 18


def test_cor43():
    assert cor43_breakdown() == {"smooth": 16, "nodal": 10, "tacnodal": 2, "triple-contact": 1, "triple point": 1}


def test_bad_degree():
    for d in (0, 8):
        with pytest.raises(ValueError):
            compute_n(d)


def test_solve_x_requires_integrality(monkeypatch):
    import a1count.pipeline as p
    monkeypatch.setattr(p, "engine_value", lambda d, s=None: AffineCount(-6342, 80))
    with pytest.raises(ArithmeticError):
        p.solve_x()
    monkeypatch.setattr(p, "engine_value", lambda d, s=None: AffineCount(900))
    with pytest.raises(ArithmeticError):
        p.solve_x()


def test_route_disagreement(monkeypatch):
    import a1count.pipeline as p
    monkeypatch.setattr(p, "engine_value", lambda d, s=None: AffineCount(17))
    with pytest.raises(RouteDisagreement):
        p.compute_n(4, symbolic=True)


def test_report():
    rep = build_report()
    assert rep.n == HEADLINE
    assert rep.x == 90
    assert rep.consequences == {"n(6;2^8,1;)": 90, "n(6;2^5,1;)": 1789, "n(6;2^8;)": 66}
    assert rep.ok
