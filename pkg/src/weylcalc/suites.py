"""Named verification suites: parameter grids, case checks, and the runner.

A case check returns one or more :class:`IdentityReport`; the case passes when
every report has the expected outcome.  Suites flagged ``asserted=False`` are
diagnostics: they are always run and reported but never fail a run.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .algebra import (
    ZERO,
    NormalForm,
    nf_anticommutator,
    nf_commutator,
    nf_monomial,
    nf_mul,
    nf_substitute_c,
    x_pow,
    y_pow,
    X,
    Y,
)
from .exact import PolyCoeff
from .expr import nf_to_obj
from .free import (
    FreeSeries,
    bch_linear_oracle,
    bch_z1_anticommutator_form,
    bch_z1_commutator_form,
    fs_exp,
    fs_mul,
    lie_series_rhs,
    mendas_rhs,
)
from .identities import (
    APPENDIX_V,
    IdentityReport,
    bd_anticommutator,
    bd_commutator,
    bd_engine_anticommutator,
    bd_engine_commutator,
    bd_engine_product,
    bd_parity_parts,
    bd_product,
    bd_shift,
    commutator_anti_bernoulli,
    commutator_anti_euler,
    commutator_xy_form,
    commutator_yx_form,
    compare,
    engine_commutator,
    moment_bracket,
    moment_bracket_anti,
    moment_bracket_engine,
    v_system_solve,
)
from .ordering import (
    DISPLACEMENT_LIMIT,
    SYMMETRIZATION_LIMIT,
    S,
    T,
    born_jordan,
    born_jordan_x_form,
    displacement_series_oracle,
    s_convert,
    s_convert_compose,
    s_ordered_ground,
    weyl_T,
    weyl_symmetrization_oracle,
)
from .special import euler_zero

__all__ = [
    "Suite",
    "SUITES",
    "IDENTITY_NAMES",
    "CaseResult",
    "SuiteResult",
    "VerificationRun",
    "run_suite",
    "run_suites",
    "report_json",
    "series_to_obj",
    "jacobi_triple",
]

Params = tuple


@dataclass(frozen=True)
class Suite:
    name: str
    asserted: bool
    uses_free_cutoff: bool
    grid: Callable[[int], list[Params]]
    check: Callable[[Params], Sequence[IdentityReport]]
    expect_equal: bool = True
    description: str = ""


# -- grids and checks -------------------------------------------------------------

def _pairs(lo: int, hi: int) -> list[Params]:
    return [(n, m) for n in range(lo, hi + 1) for m in range(lo, hi + 1)]


def _main_euler(p):
    n, m = p
    return [compare("main-euler", p, commutator_anti_euler(n, m), engine_commutator(n, m))]


def _main_bernoulli(p):
    n, m = p
    return [
        compare("main-bernoulli", p, commutator_anti_bernoulli(n, m), engine_commutator(n, m)),
        compare("main-bernoulli", p, commutator_anti_bernoulli(n, m), commutator_anti_euler(n, m)),
    ]


def _xy_vs_yx(p):
    n, m = p
    engine = engine_commutator(n, m)
    return [
        compare("xy-vs-yx", p, commutator_xy_form(n, m), engine),
        compare("xy-vs-yx", p, commutator_yx_form(n, m), engine),
    ]


@lru_cache(maxsize=8)
def _vsys(size: int):
    return v_system_solve(size)


def _v_grid(mx: int) -> list[Params]:
    return [(k, mx) for k in range(1, mx + 1)]


def _v_system(p):
    k, size = p
    sys_ = _vsys(size)
    scalar = NormalForm.scalar
    reports = [
        compare("v-system", p, scalar(sys_.solution[k - 1]), scalar(-euler_zero(k))),
        compare("v-system", p, scalar(sys_.residuals()[k - 1]), ZERO),
        compare("v-system", p, scalar(sys_.diagonal()[k - 1]), scalar(2)),
    ]
    if k <= len(APPENDIX_V):
        reports.append(compare("v-system", p, scalar(sys_.solution[k - 1]), scalar(APPENDIX_V[k - 1])))
    return reports


def _quads(mx: int) -> list[Params]:
    r = range(mx + 1)
    return [(m, n, a, b) for m in r for n in r for a in r for b in r]


def _bd_product(p):
    odd, even = bd_parity_parts(*p)
    return [
        compare("bd-product", p, bd_product(*p), bd_engine_product(*p)),
        compare("bd-product", p, odd, bd_engine_commutator(*p)),
        compare("bd-product", p, even, bd_engine_anticommutator(*p)),
    ]


def _bd_commutator(p):
    return [compare("bd-commutator", p, bd_commutator(*p), bd_engine_commutator(*p))]


def _bd_anticommutator(p):
    return [compare("bd-anticommutator", p, bd_anticommutator(*p), bd_engine_anticommutator(*p))]


def _shift_grid(mx: int) -> list[Params]:
    return [(m, k, side) for m in range(mx + 1) for k in range(mx + 1) for side in (0, 1)]


def _bd_shift(p):
    m, k, side = p
    return [bd_shift(m, k, "x" if side == 0 else "y")]


def jacobi_triple(index: int) -> tuple[NormalForm, NormalForm, NormalForm]:
    """Deterministic pseudo-random triple of small normal forms."""
    rng = random.Random(1_000_003 * index + 17)

    def one() -> NormalForm:
        out = ZERO
        for _ in range(rng.randint(1, 3)):
            coeff = PolyCoeff({(rng.randint(0, 1), rng.randint(0, 1), 0): Fraction(rng.randint(-4, 4), rng.randint(1, 3))})
            out = out + nf_monomial(rng.randint(0, 3), rng.randint(0, 3), coeff)
        return out

    return one(), one(), one()


def _jacobi_grid(mx: int) -> list[Params]:
    return [(i,) for i in range(100 * mx)]


def _jacobi(p):
    a, b, c = jacobi_triple(p[0])
    lhs = (
        nf_commutator(a, nf_commutator(b, c))
        + nf_commutator(b, nf_commutator(c, a))
        + nf_commutator(c, nf_commutator(a, b))
    )
    return [compare("jacobi", p, lhs, ZERO)]


def anti_jacobi_witness() -> NormalForm:
    """{{X,Y},X} + {X,{Y,X}} + {Y,{X,X}} in the engine."""
    ac = nf_anticommutator
    return ac(ac(X, Y), X) + ac(X, ac(Y, X)) + ac(Y, ac(X, X))


def _anti_jacobi(p):
    return [compare("anti-jacobi-witness", p, anti_jacobi_witness(), ZERO)]


def _depths(mx: int) -> list[Params]:
    return [(d,) for d in range(1, mx + 1)]


def _conj_lhs(depth: int, right_sign: int) -> FreeSeries:
    cut = depth + 1
    x = FreeSeries.gen("X", cut)
    return fs_mul(fs_mul(fs_exp(x), FreeSeries.gen("Y", cut)), fs_exp(x * right_sign))


def _lie_series(p):
    (d,) = p
    return [compare("lie-series", p, _conj_lhs(d, -1), lie_series_rhs(d))]


def _mendas(p):
    (d,) = p
    rhs = mendas_rhs(d)
    x = FreeSeries.gen("X", d + 1)
    return [
        compare("mendas", p, _conj_lhs(d, 1), rhs),
        compare("mendas", p, _conj_lhs(d, -1), fs_mul(rhs, fs_exp(x * -2))),
    ]


def _bch_z1(p):
    (d,) = p
    return [compare("bch-z1", p, bch_linear_oracle(d), bch_z1_commutator_form(d))]


def _bch_anti(p):
    (d,) = p
    return [compare("bch-z1-anti-diagnostic", p, bch_z1_anticommutator_form(d), bch_linear_oracle(d))]


def _s_ground_grid(mx: int) -> list[Params]:
    cap = min(mx, DISPLACEMENT_LIMIT // 2)
    cases = [(n, m) for n in range(cap + 1) for m in range(cap + 1)]
    for anchor in (1, 0, -1):
        cases += [(n, m, anchor) for n in range(mx + 1) for m in range(mx + 1)]
    return sorted(cases)


def _s_ground(p):
    if len(p) == 2:
        n, m = p
        return [compare("s-order-ground", p, s_ordered_ground(n, m), displacement_series_oracle(n, m))]
    n, m, anchor = p
    got = s_ordered_ground(n, m, anchor)
    if anchor == 1:
        want = nf_monomial(n, m)
    elif anchor == -1:
        want = nf_substitute_c(nf_mul(x_pow(m), y_pow(n)), 1)
    else:
        want = nf_substitute_c(weyl_T(n, m), 1)
    return [compare("s-order-ground", p, got, want)]


def _terms_nf(rows) -> NormalForm:
    # a plain container for comparing (coeff, dag, ann) lists
    out = ZERO
    for coeff, a, b in rows:
        out = out + nf_monomial(a, b, coeff)
    return out


def _s_intertwine(p):
    n, m = p
    # the third order parameter borrows the symbol c, which is otherwise fixed to 1 here
    u = PolyCoeff.symbol("c")
    return [
        compare("s-order-intertwine", p, _terms_nf(s_convert_compose(n, m, S, T, u)), _terms_nf(s_convert(n, m, S, u))),
        compare("s-order-intertwine", p, _terms_nf(s_convert(n, m, S, S)), nf_monomial(n, m)),
    ]


def _symm_grid(mx: int) -> list[Params]:
    top = min(mx, SYMMETRIZATION_LIMIT)
    return [(m, n) for m in range(top + 1) for n in range(top + 1) if m + n <= top]


def _weyl_vs_symm(p):
    m, n = p
    return [compare("weyl-vs-symmetrization", p, weyl_T(m, n), weyl_symmetrization_oracle(m, n))]


def _bj_grid(mx: int) -> list[Params]:
    cases = [(m, n) for m in range(mx + 1) for n in range(mx + 1)]
    cases += [(m, n, 1) for m, n in list(cases) if min(m, n) <= 1]
    return sorted(cases)


def _born_jordan(p):
    m, n = p[:2]
    if len(p) == 2:
        return [compare("born-jordan", p, born_jordan(m, n), born_jordan_x_form(m, n))]
    return [compare("born-jordan", p, born_jordan(m, n), weyl_T(m, n))]


def _triples(mx: int) -> list[Params]:
    r = range(1, mx + 1)
    return [(n, k, l) for n in r for k in r for l in r]


def _moment(p):
    engine = moment_bracket_engine(*p)
    return [
        compare("moment-bracket", p, moment_bracket(*p), engine),
        compare("moment-bracket", p, moment_bracket_anti(*p), engine),
    ]


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("main-euler", True, False, lambda mx: _pairs(1, mx), _main_euler),
        Suite("main-bernoulli", True, False, lambda mx: _pairs(1, mx), _main_bernoulli),
        Suite("xy-vs-yx", True, False, lambda mx: _pairs(1, mx), _xy_vs_yx),
        Suite("v-system", True, False, _v_grid, _v_system),
        Suite("bd-product", True, False, _quads, _bd_product),
        Suite("bd-commutator", False, False, _quads, _bd_commutator),
        Suite("bd-anticommutator", False, False, _quads, _bd_anticommutator),
        Suite("bd-shift", True, False, _shift_grid, _bd_shift),
        Suite("jacobi", True, False, _jacobi_grid, _jacobi),
        Suite("anti-jacobi-witness", True, False, lambda mx: [()], _anti_jacobi, expect_equal=False),
        Suite("lie-series", True, True, _depths, _lie_series),
        Suite("mendas", True, True, _depths, _mendas),
        Suite("bch-z1", True, True, _depths, _bch_z1),
        Suite("bch-z1-anti-diagnostic", False, True, _depths, _bch_anti),
        Suite("s-order-ground", True, False, _s_ground_grid, _s_ground),
        Suite("s-order-intertwine", True, False, lambda mx: _pairs(0, mx), _s_intertwine),
        Suite("weyl-vs-symmetrization", True, False, _symm_grid, _weyl_vs_symm),
        Suite("born-jordan", True, False, _bj_grid, _born_jordan),
        Suite("moment-bracket", True, False, _triples, _moment),
    ]
}
IDENTITY_NAMES = tuple(SUITES)


# -- running --------------------------------------------------------------------

def series_to_obj(A: FreeSeries) -> dict:
    terms = [
        {"word": w, "re": f"{v.re.numerator}/{v.re.denominator}", "im": f"{v.im.numerator}/{v.im.denominator}"}
        for w, v in sorted(A.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]
    return {"basis": "free", "cutoff": A.cutoff, "terms": terms}


def _to_obj(x) -> dict:
    if isinstance(x, FreeSeries):
        return series_to_obj(x)
    return nf_to_obj(x)


@dataclass(frozen=True)
class CaseResult:
    params: tuple
    passed: bool
    discrepancy: dict | None


def _run_case(name: str, params: Params) -> CaseResult:
    suite = SUITES[name]
    reports = suite.check(params)
    for r in reports:
        if r.equal != suite.expect_equal:
            return CaseResult(tuple(params), False, _to_obj(r.discrepancy))
    return CaseResult(tuple(params), True, None)


def _run_case_packed(args):
    return _run_case(*args)


@dataclass
class SuiteResult:
    name: str
    asserted: bool
    bound: int
    cases: list[CaseResult]

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "asserted": self.asserted,
            "cases": len(self.cases),
            "failures": [{"params": list(c.params), "discrepancy": c.discrepancy} for c in self.failures],
        }


@dataclass
class VerificationRun:
    suites: list[SuiteResult]
    max_degree: int
    free_cutoff: int
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> int:
        return sum(1 for s in self.suites if s.asserted and s.ok)

    @property
    def failed(self) -> int:
        return sum(1 for s in self.suites if s.asserted and not s.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_obj(self) -> dict:
        return {"suites": [s.to_obj() for s in sorted(self.suites, key=lambda s: s.name)]}


def report_json(run: VerificationRun) -> str:
    """Deterministic JSON report (no timings)."""
    return json.dumps(run.to_obj(), indent=2, sort_keys=False) + "\n"


def run_suite(name: str, bound: int, jobs: int = 1, pool: ProcessPoolExecutor | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    suite = SUITES[name]
    grid = sorted(suite.grid(bound))
    if pool is not None and len(grid) > 1:
        chunk = max(1, len(grid) // (4 * jobs))
        cases = list(pool.map(_run_case_packed, [(name, p) for p in grid], chunksize=chunk))
    else:
        cases = [_run_case(name, p) for p in grid]
    return SuiteResult(name, suite.asserted, bound, cases)


def run_suites(names: Sequence[str], max_degree: int = 6, free_cutoff: int = 6, jobs: int = 1) -> VerificationRun:
    start = time.perf_counter()
    results = []
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for name in names:
            bound = free_cutoff if SUITES[name].uses_free_cutoff else max_degree
            results.append(run_suite(name, bound, jobs, pool))
    finally:
        if pool is not None:
            pool.shutdown()
    return VerificationRun(results, max_degree, free_cutoff, time.perf_counter() - start)
