"""Per-dimension census: all singular orbits, exceptional parameters and the
parameter with the most ordinary nodes."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from ..exactnum import QQ, FieldElement, NumberField, Poly, interpolate, poly_resultant
from ..hessian import NODE, NOT_NODE, chart_hessian, hessian_det_at
from ..exactnum import det_exact
from ..pencil import PencilParam, SymPoint
from .orbits import curve_orbit_length, line_count, orbit_length, points_per_solution
from .solve import (
    ContinuousFamily,
    GenericCurve,
    IsolatedSolution,
    PatternSolution,
    _roots_over_fields,
    enumerate_patterns,
    solve_pattern,
)

WORKERS_ENV = "QUINTIC_NODES_WORKERS"


def lam_key(lam) -> tuple:
    """Galois class of a parameter: the minimal polynomial of lambda."""
    if not isinstance(lam, FieldElement):
        lam = QQ(lam)
    return lam.minpoly().coeffs


def _strip_factor(p: Poly, q: Poly) -> Poly:
    """Remove every power of q from p."""
    while p.degree > 0:
        quo, rem = divmod(p, q)
        if rem:
            break
        p = quo
    return p


# ---------------------------------------------------------------------------
# generic objects: present for every parameter


@dataclass
class GenericPoint:
    """A solution singular for every parameter (e.g. (1^5, (-1)^5) in P^8)."""

    sol: IsolatedSolution
    n: int

    @cached_property
    def point(self) -> SymPoint:
        return SymPoint(self.sol.values, self.sol.pattern)

    @property
    def orbit_length(self) -> int:
        return orbit_length(self.sol.pattern, self.sol.values)

    @property
    def points(self) -> int:
        return self.sol.count * points_per_solution(self.sol.pattern)

    @cached_property
    def bad_poly(self) -> Poly:
        """Polynomial in lambda vanishing where some conjugate is not a node:
        the norm of the Hessian determinant."""
        deg = self.n * self.sol.field.degree
        full = self.point.arrangement()
        xs = [Fraction(k) for k in range(deg + 1)]
        ys = []
        for x in xs:
            d = hessian_det_at(full, x)
            ys.append(d.norm() if isinstance(d, FieldElement) else Fraction(d))
        return interpolate(xs, ys)

    def node_at(self, lam) -> bool:
        return bool(self.bad_poly(lam))


@dataclass
class GenericFamily:
    """A curve of solutions a(s)*lambda + b(s) = 0."""

    curve: GenericCurve
    n: int

    @property
    def pattern(self):
        return self.curve.pattern

    @property
    def degree(self) -> int:
        return max(self.curve.a.degree, self.curve.b.degree)

    @property
    def points(self) -> int:
        return self.degree * points_per_solution(self.pattern)

    @property
    def orbit_length(self) -> int:
        return curve_orbit_length(self.curve)

    @property
    def constraint(self) -> tuple[Poly, Poly]:
        """(p_alpha, p_beta) with p_alpha(c)*alpha + p_beta(c)*beta = 0,
        scaled to primitive integer coefficients."""
        a, b = self.curve.a, self.curve.b
        # a*lam + b = 0 with lam = (alpha+beta)/(2 alpha)
        pa, pb = a + 2 * b, a
        both = Poly(list(pa.coeffs) + list(pb.coeffs))
        c, _ = both.content_primitive()
        pa, pb = pa / c, pb / c
        return pa, pb

    def _lam_of(self, s):
        a, b = self.curve.a, self.curve.b
        av = a(s)
        if not av:
            return None
        return -b(s) / av

    @cached_property
    def exceptional_lams(self) -> list[FieldElement]:
        """Parameters where the solutions escape to infinity, coincide or
        make two values collide."""
        a, b = self.curve.a, self.curve.b
        d = self.degree
        out = []
        ad, bd = a.coeff(d), b.coeff(d)
        if ad:
            out.append(QQ(-bd / ad))
        vals = self.curve.values
        for p in range(len(vals)):
            for q in range(p):
                diff = vals[p] - vals[q]
                if diff.degree == 1:
                    s0 = QQ(-diff.coeff(0) / diff.coeff(1))
                    lam = self._lam_of(s0)
                    if lam is not None:
                        out.append(lam)
        wr = a * b.derivative() - a.derivative() * b
        if wr:
            for K, root, _ in _roots_over_fields(wr):
                lam = self._lam_of(root)
                if lam is not None:
                    out.append(lam)
        return out

    def _det_sample(self, s: Fraction) -> Fraction:
        c = self.curve
        av = c.a(s)
        lam = -c.b(s) / av
        vals = [v(s) for v in c.values]
        # chart block first so its coordinate (value 1) is the chart
        order = [c.chart_block] + [k for k in range(len(vals)) if k != c.chart_block]
        full = []
        for k in order:
            full.extend([vals[k]] * c.pattern[k])
        return av ** self.n * det_exact(chart_hessian(full, 0, lam))

    @cached_property
    def det_poly(self) -> Poly:
        """a(s)^n * det Hess along the curve, a polynomial in s."""
        bound = self.n * (3 + self.degree)
        xs, ys = [], []
        k = 0
        while len(xs) <= bound:
            s = Fraction(k)
            k += 1
            if not self.curve.a(s):
                continue
            xs.append(s)
            ys.append(self._det_sample(s))
        return interpolate(xs, ys)

    @cached_property
    def bad_poly(self) -> Poly:
        """Res_s(a*lam + b, det_poly) as a polynomial in lam."""
        D = self.det_poly
        if not D:
            return Poly()
        if D.degree == 0:
            return Poly((1,))
        a, b = self.curve.a, self.curve.b
        d = self.degree
        xs, ys = [], []
        k = 0
        while len(xs) <= D.degree:
            lam = Fraction(k)
            k += 1
            if not (a.coeff(d) * lam + b.coeff(d)):
                continue
            xs.append(lam)
            ys.append(poly_resultant(a * lam + b, D))
        return interpolate(xs, ys)

    def node_at(self, lam) -> bool:
        return bool(self.bad_poly(lam))

    def orbits_at_generic(self) -> int:
        return self.points // self.orbit_length


# ---------------------------------------------------------------------------
# report types


@dataclass
class SingularOrbit:
    kind: str  # isolated | generic-point | generic-family | continuous-family
    pattern: tuple
    values: tuple
    field: NumberField
    param: PencilParam | None
    points: int  # singular points (lines, planes) per parameter value
    orbit_length: int | None
    dimension: int
    node_status: str
    constraint: tuple | None = None
    lam_minpoly: Poly | None = None
    bad_params: list = field(default_factory=list)
    source: object = field(default=None, repr=False, compare=False)

    def node_at(self, lam) -> str:
        """Node status of a generic orbit at a given lambda."""
        src = self.source
        if src is None:
            raise ValueError("only generic orbits can be evaluated at other parameters")
        if isinstance(src, GenericFamily):
            key = lam_key(lam)
            if any(lam_key(x) == key for x in src.exceptional_lams):
                return NOT_NODE
        return NODE if src.node_at(lam) else NOT_NODE

    @property
    def orbit_count(self) -> int:
        if not self.orbit_length:
            return 1
        return self.points // self.orbit_length


@dataclass
class ParamSummary:
    param: PencilParam
    lam: FieldElement
    exceptional: bool
    orbits: list[SingularOrbit]  # additional isolated orbits
    continuous: list[SingularOrbit]
    generic_nodes: int = 0
    generic_ok: bool = True

    @property
    def additional_nodes(self) -> int:
        return sum(o.points for o in self.orbits if o.node_status == NODE)

    @property
    def all_nodes(self) -> bool:
        return self.generic_ok and not self.continuous and all(o.node_status == NODE for o in self.orbits)

    @property
    def total_nodes(self) -> int:
        return self.generic_nodes + self.additional_nodes


@dataclass
class CensusReport:
    n: int
    patterns: list
    generic_orbits: list[SingularOrbit]
    params: list[ParamSummary]
    exceptional_params: list[PencilParam]
    best_param: PencilParam | None
    best_node_count: int
    collapsed: int
    warnings: list[str] = field(default_factory=list)

    @property
    def best(self) -> ParamSummary | None:
        for p in self.params:
            if p.param == self.best_param:
                return p
        return None

    @property
    def additional_orbits(self) -> dict:
        return {p.param: p.orbits for p in self.params if p.orbits}

    def generic_status(self, lam) -> list[tuple[SingularOrbit, str]]:
        return [(o, o.node_at(lam)) for o in self.generic_orbits]

    def summary_for(self, param: PencilParam) -> ParamSummary | None:
        key = lam_key(param.lam)
        for p in self.params:
            if lam_key(p.lam) == key:
                return p
        return None


def _solve_all(n: int, patterns: list, workers: int) -> list[PatternSolution]:
    if workers > 1 and len(patterns) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(solve_pattern, [n] * len(patterns), patterns))
    return [solve_pattern(n, p) for p in patterns]


def _isolated_orbit(sol: IsolatedSolution, n: int) -> SingularOrbit:
    lam = sol.lam
    mp = lam.minpoly()
    per_param = sol.count // mp.degree
    pt = SymPoint(sol.values, sol.pattern)
    param = PencilParam.from_lambda(lam)
    det = hessian_det_at(pt.arrangement(), lam)
    return SingularOrbit(
        kind="isolated",
        pattern=sol.pattern,
        values=sol.values,
        field=sol.field,
        param=param,
        points=per_param * points_per_solution(sol.pattern),
        orbit_length=orbit_length(sol.pattern, sol.values),
        dimension=0,
        node_status=NODE if det else NOT_NODE,
        lam_minpoly=mp,
    )


def _continuous_orbit(fam: ContinuousFamily) -> SingularOrbit:
    return SingularOrbit(
        kind="continuous-family",
        pattern=fam.pattern,
        values=fam.basis,
        field=QQ,
        param=PencilParam.from_lambda(fam.lam),
        points=line_count(fam),
        orbit_length=None,
        dimension=fam.dimension,
        node_status=NOT_NODE,
        lam_minpoly=QQ(fam.lam).minpoly(),
    )


def _bad_params(poly: Poly, exc_polys: list[Poly]) -> list[Poly]:
    """Factors of ``poly`` outside the exceptional set (as squarefree parts)."""
    from ..exactnum import squarefree_decomposition

    if not poly:
        return [Poly()]
    rest = poly
    for q in exc_polys:
        rest = _strip_factor(rest, q)
    if rest.degree <= 0:
        return []
    return [f for f, _ in squarefree_decomposition(rest)]


def census(n: int, workers: int | None = None) -> CensusReport:
    if n < 2:
        raise ValueError("n must be at least 2")
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    patterns = enumerate_patterns(n)
    solutions = _solve_all(n, patterns, workers)

    generic_points: list[GenericPoint] = []
    families: list[GenericFamily] = []
    isolated: list[SingularOrbit] = []
    continuous: list[SingularOrbit] = []
    collapsed = 0
    for sol in solutions:
        collapsed += sol.collapsed
        for iso in sol.isolated:
            if iso.lam is None:
                generic_points.append(GenericPoint(iso, n))
            else:
                isolated.append(_isolated_orbit(iso, n))
        families.extend(GenericFamily(c, n) for c in sol.curves)
        continuous.extend(_continuous_orbit(f) for f in sol.continuous)

    # exceptional parameters, keyed by the minimal polynomial of lambda
    exc: dict[tuple, FieldElement] = {}
    for c in continuous:
        lam = c.param.lam
        exc.setdefault(lam_key(lam), lam)
    for fam in families:
        for lam in fam.exceptional_lams:
            exc.setdefault(lam_key(lam), lam)
    exc_polys = [Poly(k) for k in exc]

    generic_orbits: list[SingularOrbit] = []
    for gp in generic_points:
        generic_orbits.append(SingularOrbit(
            kind="generic-point", pattern=gp.sol.pattern, values=gp.sol.values, field=gp.sol.field,
            param=None, points=gp.points, orbit_length=gp.orbit_length, dimension=0,
            node_status=NODE, bad_params=_bad_params(gp.bad_poly, exc_polys), source=gp,
        ))
    for fam in families:
        generic_orbits.append(SingularOrbit(
            kind="generic-family", pattern=fam.pattern, values=fam.curve.values, field=QQ,
            param=None, points=fam.points, orbit_length=fam.orbit_length, dimension=0,
            node_status=NODE, constraint=fam.constraint,
            bad_params=_bad_params(fam.bad_poly, exc_polys), source=fam,
        ))
    for o in generic_orbits:
        if o.bad_params:
            o.node_status = NOT_NODE
    generic_orbits.sort(key=lambda o: (-o.points, o.pattern))

    # group everything by parameter class
    groups: dict[tuple, dict] = {}

    def group(lam):
        key = lam_key(lam)
        if key not in groups:
            groups[key] = {"lam": lam, "orbits": [], "continuous": []}
        return groups[key]

    for o in isolated:
        group(o.param.lam)["orbits"].append(o)
    for c in continuous:
        group(c.param.lam)["continuous"].append(c)
    for key, lam in exc.items():
        group(lam)

    summaries = []
    for key, g in groups.items():
        lam = g["lam"]
        is_exc = key in exc
        summ = ParamSummary(
            param=PencilParam.from_lambda(lam), lam=lam, exceptional=is_exc,
            orbits=sorted(g["orbits"], key=lambda o: (-o.points, o.pattern)),
            continuous=sorted(g["continuous"], key=lambda o: (-o.points, o.pattern)),
        )
        if not is_exc:
            statuses = [(o, o.node_at(lam)) for o in generic_orbits]
            summ.generic_nodes = sum(o.points for o, st in statuses if st == NODE)
            summ.generic_ok = all(st == NODE for _, st in statuses)
        else:
            summ.generic_ok = False
        summaries.append(summ)
    summaries.sort(key=lambda s: (-s.orbits[0].points if s.orbits else 0, s.param.sort_key()))

    candidates = [s for s in summaries if not s.exceptional and s.all_nodes]
    warnings: list[str] = []
    if candidates:
        best = min(candidates, key=lambda s: (-s.total_nodes, s.param.sort_key()))
        best_param, best_count = best.param, best.total_nodes
    else:
        best_param, best_count = _generic_only_best(generic_orbits, groups, summaries)
        warnings.append("no additional orbit yields a nodal member; best parameter carries generic nodes only")

    return CensusReport(
        n=n,
        patterns=patterns,
        generic_orbits=generic_orbits,
        params=summaries,
        exceptional_params=sorted((PencilParam.from_lambda(l) for l in exc.values()), key=lambda p: p.sort_key()),
        best_param=best_param,
        best_node_count=best_count,
        collapsed=collapsed,
        warnings=warnings,
    )


def _generic_only_best(generic_orbits, groups, summaries):
    """Smallest rational parameter (1 : k) carrying only nodal generic orbits."""
    for k in range(0, 1000):
        for beta in ((k,) if k == 0 else (k, -k)):
            p = PencilParam(1, beta)
            lam = p.lam
            if lam_key(lam) in groups:
                continue
            if all(o.node_at(lam) == NODE for o in generic_orbits):
                total = sum(o.points for o in generic_orbits)
                summaries.append(ParamSummary(p, lam, False, [], [], total, True))
                return p, total
    raise RuntimeError("no nodal parameter found")
