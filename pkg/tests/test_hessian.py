"""Hessian checks against hand-derived closed forms for the n = 8 chart
x_0 = 1, x_9 = -h(x), h = 1 + x_1 + ... + x_8, F = S5 + beta*S2*S3."""
from fractions import Fraction
import random

import pytest

from quintic_nodes.exactnum import ExactMatrix, NumberField, Poly, det_exact
from quintic_nodes.hessian import (
    NODE,
    NOT_NODE,
    ChartPoint,
    chart_hessian,
    chart_reduce,
    hessian_at,
    hessian_det_at,
    verify_orbit_nodes,
)
from quintic_nodes.pencil import PencilParam, SymPoint


def lam_of(beta):
    return (1 + Fraction(beta)) / 2


def f_i_formula(y, i, beta):
    h = 1 + sum(y)
    s3 = sum(v ** 3 for v in y)
    s2 = sum(v ** 2 for v in y)
    x = y[i]
    k = (1 + beta) / Fraction(6)
    return x ** 4 - h ** 4 - k * (2 * (x + h) + 3 * (x * x - h * h) + 2 * s3 * (x + h) + 3 * s2 * (x * x - h * h)
                                 - 2 * x * h ** 3 + 3 * x * x * h * h - 5 * h ** 4)


def f_ii_formula(y, i, beta):
    h = 1 + sum(y)
    s3 = sum(v ** 3 for v in y)
    s2 = sum(v ** 2 for v in y)
    x = y[i]
    k = (1 + beta) / Fraction(6)
    return 4 * x ** 3 - 4 * h ** 3 - k * (4 + 6 * x - 6 * h + 12 * x ** 3 + 12 * x * x * h + 4 * s3 - 6 * x * h * h
                                          + 6 * (x - h) * s2 - 22 * h ** 3)


def f_ij_formula(y, i, j, beta):
    h = 1 + sum(y)
    s3 = sum(v ** 3 for v in y)
    s2 = sum(v ** 2 for v in y)
    xi, xj = y[i], y[j]
    k = (1 + beta) / Fraction(6)
    return -4 * h ** 3 - k * (2 - 6 * h + 6 * xi * xj * (xi + xj) + 6 * h * (xi * xi + xj * xj)
                              - 6 * h * h * (xi + xj) + 2 * s3 - 6 * h * s2 - 20 * h ** 3)


def chart_full(y):
    return [Fraction(1)] + list(y) + [-(1 + sum(y))]


def test_second_partials_match_closed_forms():
    rng = random.Random(5)
    for _ in range(20):
        y = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)]
        beta = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        H = chart_hessian(chart_full(y), 0, lam_of(beta))
        for i in range(8):
            assert H[i][i] == f_ii_formula(y, i, beta)
            for j in range(8):
                if i != j:
                    assert H[i][j] == f_ij_formula(y, i, j, beta)


def test_hessian_symmetric():
    rng = random.Random(11)
    for n in (3, 5, 8):
        for _ in range(5):
            xs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n + 1)]
            full = [Fraction(1)] + xs[1:] + [-(1 + sum(xs[1:]))]
            assert ExactMatrix.of(chart_hessian(full, 0, Fraction(rng.randint(-5, 5), 3))).is_symmetric()


def test_gradient_vanishes_at_singular_points():
    # (1^8, -4, -4) at (100 : -49) and (1^5, (-1)^5) at any beta
    y = [Fraction(1)] * 7 + [Fraction(-4)]
    beta = Fraction(-49, 100)
    assert all(f_i_formula(y, i, beta) == 0 for i in range(8))
    assert any(f_i_formula(y, i, Fraction(0)) != 0 for i in range(8))
    y = [1, 1, 1, 1, -1, -1, -1, -1]
    assert all(f_i_formula([Fraction(v) for v in y], i, Fraction(3, 7)) == 0 for i in range(8))


def test_126_orbit_determinant_identity():
    y = [Fraction(v) for v in (1, 1, 1, 1, -1, -1, -1, -1)]
    for k in range(9):
        beta = Fraction(k - 4, 3)
        assert det_exact(chart_hessian(chart_full(y), 0, lam_of(beta))) == (6 + 10 * beta) ** 8
    assert det_exact(chart_hessian(chart_full(y), 0, lam_of(Fraction(-3, 5)))) == 0


def test_126_orbit_entries_at_beta_minus_half():
    y = [Fraction(v) for v in (1, 1, 1, 1, -1, -1, -1, -1)]
    H = chart_hessian(chart_full(y), 0, lam_of(Fraction(-1, 2)))
    assert [H[i][i] for i in range(8)] == [0, 0, 0, 0, 2, 2, 2, 2]
    assert all(H[i][j] == 1 for i in range(8) for j in range(8) if i != j)
    assert det_exact(H) == 1


def test_3150_family_determinant_identity():
    for k in range(2, 22):
        c = Fraction(k, 3)
        beta = Fraction(-3) / (c * c + 4)
        y = [Fraction(v) for v in (1, 1, 1, -1, -1, -1)] + [c, -c]
        d = det_exact(chart_hessian(chart_full(y), 0, lam_of(beta)))
        assert d * (c * c + 4) ** 2 == 2 ** 8 * 9 * c * c * (c * c - 1) ** 8


@pytest.mark.parametrize("c", [Fraction(0), Fraction(1), Fraction(-1)])
def test_3150_family_degenerations(c):
    beta = Fraction(-3) / (c * c + 4)
    y = [Fraction(v) for v in (1, 1, 1, -1, -1, -1)] + [c, -c]
    assert det_exact(chart_hessian(chart_full(y), 0, lam_of(beta))) == 0


def test_chart_reduce_examples():
    cp = chart_reduce(SymPoint([1, -1], [5, 5]))
    assert cp.chart_index == 0
    assert list(cp.coords) == [1, 1, 1, 1, -1, -1, -1, -1]
    cp = chart_reduce(SymPoint([2, -3], [6, 4]))
    assert list(cp.coords) == [1] * 5 + [Fraction(-3, 2)] * 3
    cp = chart_reduce(SymPoint([0, 1, -1, 3, ], [4, 2, 2, 1], check=False))
    assert cp.chart_index == 4
    full = cp.homogeneous()
    assert full[4] == 1 and sum(full) == 0


def test_chart_independence_on_126_orbit():
    full = [Fraction(1)] * 5 + [Fraction(-1)] * 5
    for lam in (Fraction(1, 3), Fraction(2, 7), lam_of(Fraction(-3, 5))):
        statuses = set()
        for chart in range(9):
            scaled = [v / full[chart] for v in full]
            statuses.add(bool(det_exact(chart_hessian(scaled, chart, lam))))
        assert len(statuses) == 1


def test_hessian_at_rejects_alpha_zero():
    cp = chart_reduce(SymPoint([1, -1], [5, 5]))
    with pytest.raises(ValueError):
        hessian_at(8, cp, PencilParam(0, 1))


def test_verify_orbit_nodes_examples():
    eta = SymPoint([1, -1], [5, 5])
    assert verify_orbit_nodes(eta, PencilParam(3, -1)) == NODE
    assert verify_orbit_nodes(eta, PencilParam(5, -3)) == NOT_NODE
    K = NumberField(Poly((7, 4, 1)))
    b = K.gen
    pt = SymPoint([K.one, b, -4 - b, K(3)], [5, 2, 2, 1])
    assert verify_orbit_nodes(pt, PencilParam(3, -1)) == NODE
    # (1^4, (-1)^4, 0, 0) at (4 : -3) is the c = 0 degeneration
    assert verify_orbit_nodes(SymPoint([1, -1, 0], [4, 4, 2]), PencilParam(4, -3)) == NOT_NODE


def test_field_determinant_certifies_all_conjugates():
    K = NumberField(Poly((7, 4, 1)))
    b = K.gen
    full = SymPoint([K.one, b, -4 - b, K(3)], [5, 2, 2, 1]).arrangement()
    d = hessian_det_at(full, Fraction(1, 3))
    assert d and d.norm() != 0


def test_chartpoint_roundtrip():
    cp = ChartPoint(3, 1, (Fraction(2), Fraction(-1), Fraction(5)))
    full = cp.homogeneous()
    assert full[1] == 1 and sum(full) == 0 and len(full) == 5
