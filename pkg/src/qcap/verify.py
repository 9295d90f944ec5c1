"""Registry of named identity checks and the report they produce.

A check expands both sides of one or more identities and hands each pair to
:meth:`Context.compare`.  Failures are recorded, never raised: the result
carries the minimal discrepant ``(q_exp, t_exp)`` over all comparisons.

Checks do not share computed series with each other, so a discrepancy is
always attributable to the check that reports it.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import __version__
from .partitions import (
    ALL_CONFIGS,
    GapConfig,
    brute_force_series,
    count_c2star,
    count_cm,
    count_dj,
    count_series,
    enumerate_partitions,
    is_level3_gap,
    is_level3_multiplicity,
    partition_number,
)
from .qdiff import (
    M,
    build_F_H,
    combined_recurrence_rhs,
    delta_index,
    delta_seq,
    ell_sum_stages,
    euler_z_product,
    finite_C_table,
    gamma_seq,
    initial_values,
    lemma_eval,
    limit_chain,
    qdiff_residual,
    theorem_rhs,
)
from .series import Monomial, QSeries, pochhammer_finite, pochhammer_infinite, qbinomial
from .theta import (
    ThetaSpec,
    cauchy_even_sides,
    euler_sides,
    false_theta,
    ramanujan_sides,
    rogers_sides,
    theta_product,
    theta_sum,
)

SCHEMA_VERSION = 1

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class UnknownCheckError(KeyError):
    pass


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Discrepancy:
    q_exp: int
    t_exp: int
    lhs_coeff: int
    rhs_coeff: int
    where: str = ""

    def to_dict(self) -> dict:
        return {"q_exp": self.q_exp, "t_exp": self.t_exp,
                "lhs_coeff": str(self.lhs_coeff), "rhs_coeff": str(self.rhs_coeff),
                "where": self.where}

    @classmethod
    def from_dict(cls, d: dict) -> Discrepancy:
        return cls(int(d["q_exp"]), int(d["t_exp"]), int(d["lhs_coeff"]),
                   int(d["rhs_coeff"]), d.get("where", ""))


@dataclass
class CheckResult:
    name: str
    params: dict
    status: str
    discrepancy: Discrepancy | None = None
    elapsed: float = 0.0
    comparisons: int = 0
    message: str = ""

    def __post_init__(self):
        if self.status == FAIL and self.discrepancy is None and not self.message:
            raise ValueError("a failed check needs a discrepancy or a message")
        if self.status == PASS and self.discrepancy is not None:
            raise ValueError("a passing check cannot carry a discrepancy")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": _jsonable(self.params),
            "status": self.status,
            "discrepancy": None if self.discrepancy is None else self.discrepancy.to_dict(),
            "elapsed": self.elapsed,
            "comparisons": self.comparisons,
            "message": self.message,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CheckResult:
        disc = d.get("discrepancy")
        return cls(d["name"], d["params"], d["status"],
                   None if disc is None else Discrepancy.from_dict(disc),
                   float(d.get("elapsed", 0.0)), int(d.get("comparisons", 0)),
                   d.get("message", ""))


@dataclass
class Report:
    checks: list[CheckResult]
    config: dict = field(default_factory=dict)
    engine_version: str = __version__

    @property
    def summary(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            out[c.status] += 1
        out["total"] = len(self.checks)
        return out

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_dict(self, timing: bool = True) -> dict:
        checks = [c.to_dict() for c in self.checks]
        if not timing:
            for c in checks:
                c.pop("elapsed")
        return {
            "schema_version": SCHEMA_VERSION,
            "engine_version": self.engine_version,
            "config": _jsonable(self.config),
            "summary": self.summary,
            "checks": checks,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls([CheckResult.from_dict(c) for c in d["checks"]], d.get("config", {}),
                   d.get("engine_version", __version__))


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fault):
        return asdict(x)
    return x


# ---------------------------------------------------------------------------
# comparison context and fault injection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fault:
    """Add ``delta`` to one coefficient of one side of every comparison in ``check``."""

    check: str
    q_exp: int
    t_exp: int = 0
    delta: int = 1
    side: str = "lhs"


def _perturb(s: QSeries, f: Fault) -> QSeries:
    if f.q_exp >= s.order:
        return s
    return s + QSeries.from_terms([(f.delta, f.t_exp, f.q_exp)], s.order, min(s.lo, f.q_exp))


class Context:
    def __init__(self, name: str, faults: tuple[Fault, ...] = ()):
        self.name = name
        self.faults = [f for f in faults if f.check == name]
        self.failures: list[Discrepancy] = []
        self.count = 0

    def compare(self, where: str, lhs: QSeries, rhs: QSeries) -> bool:
        for f in self.faults:
            if f.side == "lhs":
                lhs = _perturb(lhs, f)
            else:
                rhs = _perturb(rhs, f)
        self.count += 1
        diff = lhs.first_difference(rhs)
        if diff is None:
            return True
        self.failures.append(Discrepancy(*diff, where=where))
        return False

    def worst(self) -> Discrepancy | None:
        if not self.failures:
            return None
        return min(self.failures, key=lambda d: (d.q_exp, d.t_exp))


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

# Every identity the engine certifies; each must be covered by some check.
IDENTITIES = (
    "gap-condition-forms",
    "c2star-count-relation",
    "c2star-series-relation",
    "c2-equals-d1",
    "c2star-equals-d2",
    "c2-product",
    "c2star-product",
    "c2-refined-product",
    "c2star-refined-product",
    "jacobi-triple-product",
    "main-c1-c3",
    "false-theta-split",
    "qbinomial-limit",
    "euler-reciprocal",
    "euler-product",
    "cauchy-even-sum",
    "lost-notebook",
    "rogers-false-theta",
    "alpha-beta-evaluation",
    "finite-double-sum",
    "finite-recurrences",
    "initial-values",
    "combined-recurrence",
    "gamma-definition",
    "gamma-recurrence",
    "gamma-initial",
    "F-definition",
    "H-definition",
    "F-qdifference",
    "H-qdifference",
    "delta-recurrence",
    "delta-closed-even",
    "delta-closed-odd",
    "F-even-series",
    "F-odd-series",
    "C0-limit",
    "C0-lost-notebook",
    "C0-rogers",
    "C0-final",
    "C1-limit",
    "C1-lost-notebook",
    "C1-rogers",
    "C1-final",
    "theta-reindexing",
)


@dataclass(frozen=True)
class Check:
    name: str
    label: str
    description: str
    identities: tuple[str, ...]
    defaults: dict
    func: Callable[..., None]
    min_order: int = 1


REGISTRY: dict[str, Check] = {}


def register(name: str, label: str, description: str, identities: tuple[str, ...],
             min_order: int = 1, **defaults):
    unknown = set(identities) - set(IDENTITIES)
    if unknown:
        raise ValueError(f"unknown identity keys {sorted(unknown)}")

    def deco(func):
        REGISTRY[name] = Check(name, label, description, identities, defaults, func, min_order)
        return func
    return deco


def _configs(raw) -> list[GapConfig]:
    return [GapConfig(int(a), int(b)) for a, b in raw]


ALL_AB = [[c.alpha, c.beta] for c in ALL_CONFIGS]


def _rand_unit(rng: random.Random, t_range: int, q_lo: int, q_hi: int) -> Monomial:
    return Monomial(rng.choice((1, -1)), rng.randint(-t_range, t_range), rng.randint(q_lo, q_hi))


def _refined_c2_product(order: int, z: Monomial) -> QSeries:
    return theta_sum(ThetaSpec(z, 6), order) * pochhammer_infinite(M(1, 0, 3), 3, order).inv()


@register("gap-equivalence", "gap condition, two formulations",
          "difference form and part-multiplicity form agree on every partition",
          ("gap-condition-forms",), n_max=40)
def _gap_equivalence(ctx: Context, n_max: int):
    order = n_max + 1
    every, agree = [], []
    for n in range(order):
        total = same = 0
        for lam in enumerate_partitions(n):
            total += 1
            same += is_level3_gap(lam) == is_level3_multiplicity(lam)
        every.append(total)
        agree.append(same)
    ctx.compare("all partitions vs agreeing partitions", count_series(every), count_series(agree))
    ctx.compare("listing vs pentagonal recurrence", count_series(every),
                count_series([partition_number(n) for n in range(order)]))


@register("capparelli-c2-d1", "c2(n) = d1(n)",
          "gap partitions with parts >= 2 vs distinct parts not +-1 mod 6",
          ("c2-equals-d1",), order=61)
def _c2_d1(ctx: Context, order: int):
    ctx.compare("c2 vs d1", count_series([count_cm(2, n) for n in range(order)]),
                count_series([count_dj(1, n) for n in range(order)]))


@register("capparelli-c2star-d2", "c2*(n) = d2(n)",
          "gap partitions without 2 vs distinct parts not +-2 mod 6, and c2* = c1 - c2 + c3",
          ("c2star-equals-d2", "c2star-count-relation"), order=61)
def _c2star_d2(ctx: Context, order: int):
    star = count_series([count_c2star(n) for n in range(order)])
    ctx.compare("c2* vs d2", star, count_series([count_dj(2, n) for n in range(order)]))
    ctx.compare("c2* vs c1 - c2 + c3", star,
                count_series([count_cm(1, n) - count_cm(2, n) + count_cm(3, n)
                              for n in range(order)]))


@register("product-c2", "C2(q) product", "sum c2(n) q^n = (-q^2,-q^3,-q^4,-q^6; q^6)_inf",
          ("c2-product",), order=60)
def _product_c2(ctx: Context, order: int):
    prod = QSeries.one(order)
    for e in (2, 3, 4, 6):
        prod = prod * pochhammer_infinite(M(-1, 0, e), 6, order)
    ctx.compare("counts vs product", count_series([count_cm(2, n) for n in range(order)]), prod)


@register("product-c2star", "C2*(q) product", "sum c2*(n) q^n = (-q,-q^3,-q^5,-q^6; q^6)_inf",
          ("c2star-product",), order=60)
def _product_c2star(ctx: Context, order: int):
    prod = QSeries.one(order)
    for e in (1, 3, 5, 6):
        prod = prod * pochhammer_infinite(M(-1, 0, e), 6, order)
    ctx.compare("counts vs product", count_series([count_c2star(n) for n in range(order)]), prod)


@register("refined-c2", "C2(t;q) theta quotient", "C2(t;q) = theta(t q^4; q^6)/(q^3;q^3)_inf",
          ("c2-refined-product",), order=50)
def _refined_c2(ctx: Context, order: int):
    ctx.compare("enumeration vs theta quotient", brute_force_series(GapConfig(0, 1), None, order),
                _refined_c2_product(order, M(1, 1, 4)))


@register("refined-c2star", "C2*(t;q) theta quotient",
          "C2*(t;q) = theta(t q; q^6)/(q^3;q^3)_inf and C2* = C1 - C2 + C3 refined",
          ("c2star-refined-product", "c2star-series-relation"), order=50)
def _refined_c2star(ctx: Context, order: int):
    star = brute_force_series(GapConfig(1, 0), None, order)
    ctx.compare("enumeration vs theta quotient", star, _refined_c2_product(order, M(1, 1, 1)))
    c1, c2, c3 = (brute_force_series(GapConfig(a, b), None, order) for a, b in ((1, 1), (0, 1), (0, 0)))
    ctx.compare("C2* vs C1 - C2 + C3", star, c1 - c2 + c3)
    ctx.compare("C2*(q) vs C1(q) - C2(q) + C3(q) at t=1",
                count_series(star.at_t1()), count_series((c1 - c2 + c3).at_t1()))


@register("jtp", "triple product", "theta(z;q) bilateral sum equals its triple product",
          ("jacobi-triple-product",), order=200, samples=20, seed=0)
def _jtp(ctx: Context, order: int, samples: int, seed: int):
    fixed = [(M(1, 1, 4), 6), (M(-1, 2, 2), 6), (M(1, 1, 1), 6), (M(1, 0, 1), 2)]
    rng = random.Random(seed)
    for _ in range(samples):
        m = rng.randint(1, 6)
        fixed.append((_rand_unit(rng, 3, 0, m), m))
    for z, m in fixed:
        spec = ThetaSpec(z, m)
        ctx.compare(f"theta({z}; q^{m})", theta_sum(spec, order), theta_product(spec, order))


@register("euler1", "Euler reciprocal", "1/(x;q)_inf = sum x^n/(q;q)_n",
          ("euler-reciprocal",), order=100, samples=5, seed=1)
def _euler1(ctx: Context, order: int, samples: int, seed: int):
    lhs, rhs = euler_sides(1, M(1, 0, 1), 1, order)
    ctx.compare("x = q", lhs, rhs)
    ctx.compare("x = q vs p(n)", lhs, count_series([partition_number(n) for n in range(order)]))
    rng = random.Random(seed)
    for _ in range(samples):
        x, m = _rand_unit(rng, 3, 1, 4), rng.randint(1, 4)
        ctx.compare(f"x = {x}, q^{m}", *euler_sides(1, x, m, order))


@register("euler2", "Euler product", "(x;q)_inf = sum (-1)^n x^n q^(n(n-1)/2)/(q;q)_n",
          ("euler-product",), order=100, samples=5, seed=2)
def _euler2(ctx: Context, order: int, samples: int, seed: int):
    x = M(-1, 1, 3)
    lhs, rhs = euler_sides(2, x, 3, order)
    ctx.compare("x = -t q^3, q^3", lhs, rhs)
    ctx.compare("product vs pochhammer", lhs, pochhammer_infinite(x, 3, order))
    rng = random.Random(seed)
    for _ in range(samples):
        x, m = _rand_unit(rng, 3, 0, 4), rng.randint(1, 4)
        ctx.compare(f"x = {x}, q^{m}", *euler_sides(2, x, m, order))


@register("cauchy-even", "even-index Cauchy sum",
          "sum_{n even} q^(n(n-1)/2)/(q;q)_n = 1/(q;q^2)_inf = (-q;q)_inf",
          ("cauchy-even-sum",), order=100)
def _cauchy_even(ctx: Context, order: int):
    for m in (1, 3):
        even, recip, prod = cauchy_even_sides(m, order)
        ctx.compare(f"even sum vs reciprocal, q^{m}", even, recip)
        ctx.compare(f"reciprocal vs product, q^{m}", recip, prod)


@register("ramanujan-lost", "Lost Notebook identity",
          "sum q^n/((-aq)_n(-bq)_n) vs its two-sum evaluation",
          ("lost-notebook",), order=60, samples=10, seed=3)
def _ramanujan(ctx: Context, order: int, samples: int, seed: int):
    cases = [(M(1, 1, 4), M(1, -1, 2), 6), (M(1, -1, -1), M(1, 1, 1), 6), (M(1, 0, 1), M(1, 0, 1), 1)]
    rng = random.Random(seed)
    for _ in range(samples):
        m = rng.randint(1, 6)
        cases.append((_rand_unit(rng, 2, 1 - m, 3), _rand_unit(rng, 2, 1 - m, 3), m))
    for a, b, m in cases:
        ctx.compare(f"a = {a}, b = {b}, q^{m}", *ramanujan_sides(a, b, m, order))


@register("rogers-false", "Rogers false theta identity",
          "sum (-1)^n y^2n q^(n(n+1)/2)/(yq)_n vs sum (-1)^n y^3n q^(n(3n+1)/2)(1 - y^2 q^(2n+1))",
          ("rogers-false-theta",), order=60, samples=5, seed=4)
def _rogers(ctx: Context, order: int, samples: int, seed: int):
    cases = [(M(-1, -1, -4), 6), (M(-1, 1, 1), 6)]
    rng = random.Random(seed)
    for _ in range(samples):
        m = rng.randint(1, 6)
        cases.append((_rand_unit(rng, 2, 1 - m, 3), m))
    for y, m in cases:
        ctx.compare(f"y = {y}, q^{m}", *rogers_sides(y, m, order))


@register("qbinomial-limit", "q-binomial limit",
          "[n choose m] -> 1/(q;q)_m for large n, plus symmetry and Pascal",
          ("qbinomial-limit",), order=60)
def _qbinom_limit(ctx: Context, order: int):
    for modulus in (1, 3):
        for m in range(9):
            n = order // modulus + m + 1
            ctx.compare(f"[{n} {m}] at q^{modulus}", qbinomial(n, m, modulus, order),
                        pochhammer_finite(M(1, 0, modulus), modulus, m, order).inv())
    for n in range(1, 12):
        for m in range(1, n):
            lhs = qbinomial(n, m, 1, order)
            rhs = qbinomial(n - 1, m, 1, order) + qbinomial(n - 1, m - 1, 1, order).shift(M(1, 0, n - m))
            ctx.compare(f"Pascal [{n} {m}]", lhs, rhs)
            ctx.compare(f"symmetry [{n} {m}]", lhs, qbinomial(n, n - m, 1, order))


@register("recurrence-cnrec", "finite recurrences",
          "C_M from the three-line recurrence equals enumeration with parts <= M",
          ("finite-recurrences", "initial-values"), order=40, m_max=30, configs=ALL_AB)
def _cnrec(ctx: Context, order: int, m_max: int, configs):
    for cfg in _configs(configs):
        table = finite_C_table(cfg, m_max, order)
        init = initial_values(cfg, order)
        ctx.compare(f"C_-2 = beta {cfg.label}", init[-2], QSeries.constant(cfg.beta, order))
        for Mx in range(0, m_max + 1):
            ctx.compare(f"C_{Mx} {cfg.label}", table[Mx], brute_force_series(cfg, Mx, order))


@register("recurrence-combined", "combined recurrence",
          "C_{3n+1} from the single combined recurrence, n >= 2",
          ("combined-recurrence",), order=40, n_max=10, configs=ALL_AB)
def _combined(ctx: Context, order: int, n_max: int, configs):
    for cfg in _configs(configs):
        table = finite_C_table(cfg, 3 * n_max + 1, order)
        for n in range(2, n_max + 1):
            ctx.compare(f"n = {n} {cfg.label}", table[3 * n + 1], combined_recurrence_rhs(table, n))


@register("gamma-rec", "gamma recurrence",
          "gamma_n (q^3;q^3)_n = C_{3n-2}, with the stated initial values",
          ("gamma-definition", "gamma-recurrence", "gamma-initial"),
          order=40, n_max=12, configs=ALL_AB)
def _gamma(ctx: Context, order: int, n_max: int, configs):
    for cfg in _configs(configs):
        g = gamma_seq(cfg, n_max, order)
        table = finite_C_table(cfg, max(3 * n_max - 2, 4), order)
        ctx.compare(f"gamma_0 {cfg.label}", g[0], QSeries.constant(cfg.beta, order))
        for n in range(1, n_max + 1):
            ctx.compare(f"gamma_{n} {cfg.label}",
                        g[n] * pochhammer_finite(M(1, 0, 3), 3, n, order), table[3 * n - 2])


@register("delta-rec-vs-closed", "delta recurrence vs closed forms",
          "delta_n from the two-step recurrence equals the even/odd closed forms; F = (-z;q^3)_inf H",
          ("delta-recurrence", "delta-closed-even", "delta-closed-odd", "H-definition",
           "F-definition"), order=40, n_max=16, z_degree=8, configs=ALL_AB)
def _delta(ctx: Context, order: int, n_max: int, z_degree: int, configs):
    for cfg in _configs(configs):
        seq = delta_seq(cfg, n_max, order)
        for k in range(n_max + 1):
            ctx.compare(f"delta_{k} {cfg.label}", seq[k], delta_index(cfg, k, order))
        F, H = build_F_H(cfg, z_degree, order, check=False)
        EH = euler_z_product(z_degree, order) * H
        for n in range(z_degree + 1):
            ctx.compare(f"[z^{n}] F vs (-z;q^3)H {cfg.label}", F[n], EH[n])


def _residual_check(ctx: Context, which: str, order: int, z_degree: int, configs):
    for cfg in _configs(configs):
        res = qdiff_residual(which, cfg, z_degree, order)
        for n in range(0, max(z_degree - 1, 0)):
            ctx.compare(f"[z^{n}] {which} residual {cfg.label}", res[n], QSeries.zero(order))


@register("fqdiff-residual", "F q-difference equation",
          "(1-z)F(z) minus its q-shifted right side vanishes", ("F-qdifference",),
          order=40, z_degree=8, configs=ALL_AB)
def _fqdiff(ctx: Context, order: int, z_degree: int, configs):
    _residual_check(ctx, "F", order, z_degree, configs)


@register("hqdiff-residual", "H q-difference equation",
          "(1-z^2)H(z) minus its q-shifted right side, with the inhomogeneous sum, vanishes",
          ("H-qdifference",), order=40, z_degree=8, configs=ALL_AB)
def _hqdiff(ctx: Context, order: int, z_degree: int, configs):
    _residual_check(ctx, "H", order, z_degree, configs)


@register("lemma-finite", "finite double sum",
          "explicit double sum for C_{3n-2} equals the recurrence and enumeration",
          ("finite-double-sum", "F-even-series", "F-odd-series"), order=40, n_max=10, configs=ALL_AB)
def _lemma(ctx: Context, order: int, n_max: int, configs):
    for cfg in _configs(configs):
        table = finite_C_table(cfg, max(3 * n_max - 2, 4), order)
        for n in range(0, n_max + 1):
            val = lemma_eval(cfg, n, order)
            ctx.compare(f"n = {n} vs recurrence {cfg.label}", val, table[3 * n - 2])
            if n >= 1:
                ctx.compare(f"n = {n} vs enumeration {cfg.label}", val,
                            brute_force_series(cfg, 3 * n - 2, order))


def _limit_side(ctx: Context, parity: int, order: int, configs):
    stages = ell_sum_stages(parity, order)
    first_name, first = stages[0]
    for name, stage in stages[1:]:
        ctx.compare(f"l-sum {first_name} vs {name}", first, stage)
    for cfg in _configs(configs):
        ch = limit_chain(cfg, order)
        raw, final = (ch.C0_raw, ch.C0_final) if parity == 0 else (ch.C1_raw, ch.C1_final)
        ctx.compare(f"raw vs final {cfg.label}", raw, final)


@register("limit-c0", "even-part limit", "even-n limit through Lost Notebook and Rogers",
          ("C0-limit", "C0-lost-notebook", "C0-rogers", "C0-final"), min_order=4,
          order=50, configs=ALL_AB)
def _limit_c0(ctx: Context, order: int, configs):
    _limit_side(ctx, 0, order, configs)


@register("limit-c1", "odd-part limit", "odd-n limit through Lost Notebook and Rogers",
          ("C1-limit", "C1-lost-notebook", "C1-rogers", "C1-final"), min_order=4,
          order=50, configs=ALL_AB)
def _limit_c1(ctx: Context, order: int, configs):
    _limit_side(ctx, 1, order, configs)


@register("theorem-mainab", "(alpha, beta) evaluation, all four (alpha, beta)",
          "enumerated C^{alpha,beta}(t;q) equals the theta / false-theta evaluation",
          ("alpha-beta-evaluation",), min_order=4, order=50, configs=ALL_AB)
def _mainab(ctx: Context, order: int, configs):
    for cfg in _configs(configs):
        rhs = theorem_rhs(cfg, order)
        ctx.compare(f"enumeration vs evaluation {cfg.label}", brute_force_series(cfg, None, order), rhs)
        ch = limit_chain(cfg, order)
        ctx.compare(f"C0 + C1 vs evaluation {cfg.label}", ch.C0_final + ch.C1_final, rhs)
        n = max(20, order // 3 + 3)
        ctx.compare(f"finite n = {n} stabilizes {cfg.label}", lemma_eval(cfg, n, order), rhs)


@register("theorem-main", "C1 and C3 via false theta functions",
          "both lines for C1(t;q) and C3(t;q), plus the t = 1 count specializations",
          ("main-c1-c3",), min_order=1, order=50)
def _main(ctx: Context, order: int):
    neg_q3 = pochhammer_infinite(M(-1, 0, 3), 3, order)
    th = theta_sum(ThetaSpec(M(-1, 2, 2), 6), order)
    c2 = _refined_c2_product(order, M(1, 1, 4))
    c2s = _refined_c2_product(order, M(1, 1, 1))
    T1, T2 = false_theta(1, "character", order), false_theta(2, "character", order)
    c1 = brute_force_series(GapConfig(1, 1), None, order)
    c3 = brute_force_series(GapConfig(0, 0), None, order)
    ctx.compare("C1(t;q)", c1, neg_q3 * th + c2 * (1 - T1) + c2s * (1 - T2))
    ctx.compare("C3(t;q)", c3, -(neg_q3 * th) + c2 * T1 + c2s * T2)
    for cfg, dj in ((GapConfig(0, 1), 1), (GapConfig(1, 0), 2)):
        ctx.compare(f"{cfg.label} at t = 1 vs d{dj}", count_series(theorem_rhs(cfg, order).at_t1()),
                    count_series([count_dj(dj, n) for n in range(order)]))


@register("false-theta-forms", "false theta split forms",
          "character-twisted and residue-split forms of Theta_1, Theta_2 agree",
          ("false-theta-split",), order=200)
def _false_theta(ctx: Context, order: int):
    for which in (1, 2):
        ctx.compare(f"Theta_{which}", false_theta(which, "character", order),
                    false_theta(which, "split", order))


def _alt_sum(order: int, ks) -> QSeries:
    return QSeries.from_terms([(1 - 2 * (k % 2), -2 * k, 3 * k * k + k) for k in ks], order)


@register("theta-assembly", "theta assembly",
          "bilateral (-1)^k t^-2k q^(3k^2+k) sum is theta(-t^2 q^2; q^6); 1 - beta folding",
          ("theta-reindexing",), order=100, configs=ALL_AB)
def _assembly(ctx: Context, order: int, configs):
    k = 0
    while 3 * k * k - k < order:
        k += 1
    bilateral = _alt_sum(order, range(-k - 1, k + 2))
    ctx.compare("bilateral sum vs theta", bilateral, theta_sum(ThetaSpec(M(-1, 2, 2), 6), order))
    T2 = false_theta(2, "character", order)
    tail, j = [], 0
    while (3 * j + 1) ** 2 < order:
        tail += [(1, 3 * j + 1, (3 * j + 1) ** 2), (-1, 3 * j + 3, (3 * j + 3) ** 2)]
        j += 1
    tail_s = QSeries.from_terms(tail, order)
    for cfg in _configs(configs):
        d = cfg.defect
        ctx.compare(f"1 - beta folding {cfg.label}", T2 * d + cfg.alpha, tail_s * (-d) + (1 - cfg.beta))


@register("reindexing", "negative-index reindexing",
          "sum_{k>=0} (-1)^k t^(2k+2) q^(3k^2+5k+2) = -sum_{k<=-1} (-1)^k t^-2k q^(3k^2+k)",
          ("theta-reindexing",), order=100)
def _reindexing(ctx: Context, order: int):
    terms, k = [], 0
    while 3 * k * k + 5 * k + 2 < order:
        terms.append(((-1) ** k, 2 * k + 2, 3 * k * k + 5 * k + 2))
        k += 1
    ctx.compare("k >= 0 vs k <= -1", QSeries.from_terms(terms, order),
                -_alt_sum(order, range(-k - 2, 0)))


# ---------------------------------------------------------------------------
# running
# ---------------------------------------------------------------------------

@dataclass
class RunConfig:
    order: int | None = None
    z_degree: int | None = None
    configs: list | None = None
    names: list[str] | None = None
    workers: int = 1
    faults: tuple[Fault, ...] = ()

    def overrides_for(self, check: Check) -> dict:
        out = {}
        if self.order is not None and "order" in check.defaults:
            out["order"] = self.order
        if self.z_degree is not None and "z_degree" in check.defaults:
            out["z_degree"] = self.z_degree
        if self.configs is not None and "configs" in check.defaults:
            out["configs"] = self.configs
        return out

    def echo(self) -> dict:
        return {"order": self.order, "z_degree": self.z_degree, "configs": self.configs,
                "names": self.names, "workers": self.workers,
                "faults": [asdict(f) for f in self.faults]}


def _validate(check: Check, overrides: dict) -> dict:
    params = dict(check.defaults)
    for key, val in overrides.items():
        if key not in check.defaults:
            raise ValueError(f"check {check.name!r} has no parameter {key!r}")
        default = check.defaults[key]
        if isinstance(default, int):
            if isinstance(val, bool) or not isinstance(val, int):
                raise TypeError(f"parameter {key!r} must be an int, got {type(val).__name__}")
            if key != "order" and val < 0:
                raise ValueError(f"parameter {key!r} must be nonnegative, got {val}")
        elif key == "configs":
            try:
                _configs(val)
            except (TypeError, ValueError) as exc:
                raise TypeError(f"configs must be pairs of 0/1: {exc}") from None
            val = [[int(a), int(b)] for a, b in val]
        params[key] = val
    return params


def run_check(name: str, overrides: dict | None = None,
              faults: tuple[Fault, ...] = ()) -> CheckResult:
    try:
        check = REGISTRY[name]
    except KeyError:
        raise UnknownCheckError(f"unknown check {name!r}; valid names: {', '.join(sorted(REGISTRY))}") from None
    params = _validate(check, overrides or {})
    if params.get("order", check.min_order) < check.min_order:
        return CheckResult(name, params, SKIPPED, message="degenerate window")
    if params.get("z_degree", 3) < 3:
        return CheckResult(name, params, SKIPPED, message="z-degree below 3")
    ctx = Context(name, tuple(faults))
    start = time.perf_counter()
    try:
        check.func(ctx, **params)
    except Exception as exc:  # failure is data
        return CheckResult(name, params, FAIL, ctx.worst(), time.perf_counter() - start,
                           ctx.count, f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    worst = ctx.worst()
    return CheckResult(name, params, FAIL if worst else PASS, worst, elapsed, ctx.count)


def _run_one(args):
    name, overrides, faults = args
    return run_check(name, overrides, faults)


def run_all(config: RunConfig | None = None) -> Report:
    config = config or RunConfig()
    names = sorted(config.names) if config.names else sorted(REGISTRY)
    for n in names:
        if n not in REGISTRY:
            raise UnknownCheckError(f"unknown check {n!r}")
    jobs = [(n, config.overrides_for(REGISTRY[n]), tuple(config.faults)) for n in names]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    return Report(results, config.echo())


def list_checks() -> list[dict[str, Any]]:
    return [{"name": c.name, "description": c.description, "label": c.label,
             "identities": list(c.identities)}
            for c in sorted(REGISTRY.values(), key=lambda c: c.name)]
