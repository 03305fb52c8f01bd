from fractions import Fraction
import random

import pytest
from sympy.utilities.iterables import multiset_permutations

from quintic_nodes.census import (
    census,
    enumerate_patterns,
    lam_key,
    line_count,
    orbit_length,
    solve_pattern,
)
from quintic_nodes.census.orbits import scalar_symmetry
from quintic_nodes.census.solve import block_permutations
from quintic_nodes.exactnum import QQ, FieldElement
from quintic_nodes.hessian import NODE, NOT_NODE
from quintic_nodes.pencil import PencilParam, SymPoint, evaluate_F, root_quartic, power_sums, verify_singular
from quintic_nodes.report import canonical_json, census_payload, document


def partitions_brute(total, parts):
    out = set()

    def rec(rem, acc):
        if rem == 0:
            out.add(tuple(sorted(acc, reverse=True)))
            return
        if len(acc) == parts:
            return
        for p in range(1, rem + 1):
            rec(rem - p, acc + [p])

    rec(total, [])
    return out


def test_patterns_n8():
    pats = enumerate_patterns(8)
    assert len(pats) == 23
    assert pats[0] == (10,) and pats[-1] == (3, 3, 2, 2)


@pytest.mark.parametrize("n,count", [(2, 5), (3, 6)])
def test_pattern_counts(n, count):
    pats = enumerate_patterns(n)
    assert len(pats) == count
    assert set(pats) == partitions_brute(n + 2, 4)


@pytest.mark.parametrize("n", range(2, 13))
def test_patterns_match_brute_force(n):
    pats = enumerate_patterns(n)
    assert len(pats) == len(set(pats))
    assert set(pats) == partitions_brute(n + 2, 4)
    assert pats == sorted(pats, reverse=True)


# --- single patterns -------------------------------------------------------------


def test_nine_one_isolated():
    sol = solve_pattern(8, (9, 1))
    [iso] = sol.isolated
    assert PencilParam.from_lambda(iso.lam) == PencilParam(75, 7)
    assert iso.lam == QQ(Fraction(41, 75))
    assert SymPoint(iso.values, iso.pattern).scaled(-9).values == (QQ(1), QQ(-9))


def test_five_five_generic_point():
    sol = solve_pattern(8, (5, 5))
    [iso] = sol.isolated
    assert iso.lam is None


def test_four_four_one_one_constraint(census8):
    fam = next(o for o in census8.generic_orbits if o.pattern == (4, 4, 1, 1))
    pa, pb = fam.constraint
    # beta*c^2 + (3*alpha + 4*beta)
    assert (pa.coeffs, pb.coeffs) == ((3,), (4, 0, 1))


def test_five_two_two_one_values():
    sol = solve_pattern(8, (5, 2, 2, 1))
    [iso] = sol.isolated
    assert PencilParam.from_lambda(iso.lam) == PencilParam(3, -1)
    v = [x / iso.values[0] for x in iso.values]
    b = v[1]
    assert not (b * b + 4 * b + 7)
    assert v[2] == -4 - b
    assert v[3] == QQ(3)


def test_seven_one_one_one_lines():
    sol = solve_pattern(8, (7, 1, 1, 1))
    [fam] = sol.continuous
    assert PencilParam.from_lambda(fam.lam) == PencilParam(1, 0)
    assert line_count(fam) == 120


def test_six_three_one_zero_branch():
    # a zero coordinate only survives in (1^6, (-2)^3, 0) at the exceptional (3 : -2)
    sol = solve_pattern(8, (6, 3, 1))
    zero_sols = [i for i in sol.isolated if any(not v for v in i.values)]
    assert all(PencilParam.from_lambda(i.lam) == PencilParam(3, -2) for i in zero_sols)


def test_solve_rejects_bad_pattern():
    with pytest.raises(ValueError):
        solve_pattern(8, (5, 4))


# --- orbit lengths ----------------------------------------------------------------


def brute_orbit(values, pattern):
    """Distinct projective points among all arrangements of the value multiset."""
    multiset = []
    for k, m in enumerate(pattern):
        multiset += [k] * m
    seen = set()
    for perm in multiset_permutations(multiset):
        vals = [values[k] for k in perm]
        lead = next(v for v in vals if v)
        seen.add(tuple(v / lead for v in vals))
    return len(seen)


def test_orbit_length_examples():
    assert orbit_length((5, 5), (QQ(1), QQ(-1))) == 126
    assert orbit_length((9, 1), (QQ(1), QQ(-9))) == 10


def test_orbit_lengths_brute_force_n8(census8):
    checked = 0
    for s in census8.params:
        for o in s.orbits:
            assert orbit_length(o.pattern, o.values) == brute_orbit(o.values, o.pattern)
            checked += 1
    for o in census8.generic_orbits:
        vals = o.values
        if o.kind == "generic-family":
            vals = tuple(QQ(v(Fraction(5, 2))) for v in vals)
        assert o.orbit_length == brute_orbit(vals, o.pattern)
    assert checked == 20


def test_equal_block_orbit_n6():
    sol = solve_pattern(6, (2, 2, 2, 2))
    [iso] = sol.isolated
    assert iso.count == 6 and iso.lam is None
    assert orbit_length(iso.pattern, iso.values) == brute_orbit(iso.values, iso.pattern) == 630
    assert scalar_symmetry(iso.pattern, iso.values) == 4


# --- invariants over the census output --------------------------------------------


def _points_at(report):
    """(point, param) for every zero-dimensional orbit representative."""
    rng = random.Random(7)
    out = []
    for s in report.params:
        for o in s.orbits:
            out.append((SymPoint(o.values, o.pattern), s.param))
    exc = {lam_key(p.lam) for p in report.exceptional_params}
    for o in report.generic_orbits:
        if o.kind == "generic-point":
            for k in range(10):
                p = PencilParam(rng.randint(1, 9), rng.randint(-9, 9))
                if lam_key(p.lam) not in exc:
                    out.append((SymPoint(o.values, o.pattern), p))
        else:
            fam = o.source
            tries = 0
            while tries < 10:
                s0 = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
                av = fam.curve.a(s0)
                vals = [QQ(v(s0)) for v in o.values]
                if not av or len(set(vals)) < len(vals) or not any(vals):
                    continue
                lam = -fam.curve.b(s0) / av
                if lam_key(lam) in exc:
                    continue
                out.append((SymPoint(vals, o.pattern), PencilParam.from_lambda(lam)))
                tries += 1
    return out


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_singular_on_hypersurface_and_root_quartic(census_of, n):
    report = census_of(n)
    pts = _points_at(report)
    assert pts
    for pt, p in pts:
        assert verify_singular(pt, p)
        assert not evaluate_F(pt, p)
        q = root_quartic(n, p.lam, power_sums(pt))
        assert all(not q(v) for v in pt.values)


def _equivalent(o1, o2) -> bool:
    """Same projective orbit: some block permutation matches up to a scalar."""
    if o1.pattern != o2.pattern:
        return False
    v, w = o1.values, o2.values
    if isinstance(v[0], FieldElement) and isinstance(w[0], FieldElement) and v[0].field != w[0].field:
        return False
    for pi in block_permutations(o1.pattern):
        wp = [w[pi[k]] for k in range(len(w))]
        t = next(k for k, x in enumerate(v) if x)
        if all(not (wp[r] * v[t] - v[r] * wp[t]) for r in range(len(v))):
            return True
    return False


@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_no_double_counting(census_of, n):
    for s in census_of(n).params:
        for i, a in enumerate(s.orbits):
            for b in s.orbits[:i]:
                assert not _equivalent(a, b)


def test_exceptional_set_n8(census8):
    assert census8.exceptional_params == [PencilParam(*ab) for ab in [(1, 0), (2, -1), (3, -2), (4, -3), (5, -3)]]
    assert census8.best_param not in census8.exceptional_params


def test_line_families_n8(census8):
    lines = {}
    for s in census8.params:
        for c in s.continuous:
            lines[str(s.param)] = (c.points, c.dimension)
    assert lines == {"(1 : 0)": (120, 1), "(2 : -1)": (3150, 1), "(3 : -2)": (2800, 1)}


def test_best_count_invariant(census8):
    best = census8.best
    generic = sum(o.points for o in census8.generic_orbits if o.node_at(best.lam) == NODE)
    additional = sum(o.points for o in best.orbits if o.node_status == NODE)
    assert census8.best_node_count == generic + additional == 23436


def test_exceptional_degenerations_not_nodes(census8):
    s = census8.summary_for(PencilParam(4, -3))
    assert [o.node_status for o in s.orbits] == [NOT_NODE]
    assert s.orbits[0].points == 1575
    eta = next(o for o in census8.generic_orbits if o.pattern == (5, 5))
    assert eta.node_at(PencilParam(5, -3).lam) == NOT_NODE


def test_census_n6_planes():
    r = census(6)
    s = r.summary_for(PencilParam(2, -1))
    assert s.exceptional
    planes = [c for c in s.continuous if c.pattern == (2, 2, 2, 2)]
    assert planes and planes[0].dimension == 2 and planes[0].points == 105


def test_census_deterministic(census8):
    again = census(8)
    a = canonical_json(document("census", {"n": 8}, census_payload(census8)))
    b = canonical_json(document("census", {"n": 8}, census_payload(again)))
    assert a == b


def test_census_parallel_matches(census8, monkeypatch):
    monkeypatch.setenv("QUINTIC_NODES_WORKERS", "2")
    par = census(8)
    assert canonical_json(document("c", {}, census_payload(par))) == \
        canonical_json(document("c", {}, census_payload(census8)))
