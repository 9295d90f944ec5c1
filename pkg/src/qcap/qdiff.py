"""Finite recurrences, q-difference equations and the limit evaluation.

The truncated generating functions C_M (parts at most M) satisfy a
three-line recurrence.  Renormalized as gamma_n = C_{3n-2}/(q^3;q^3)_n they
assemble into F(z) = sum gamma_n z^n, and H(z) = F(z)/(-z;q^3)_inf has
coefficients delta_n with an explicit two-step recurrence and closed form.
Letting n go to infinity in the closed form produces the theta/false-theta
evaluation of the full generating function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import GapConfig
from .series import Monomial, QSeries, ZPoly, pochhammer_finite, pochhammer_infinite, qbinomial
from .theta import ThetaSpec, false_theta, ramanujan_sides, rogers_sides, theta_sum


def M(coeff: int, t_exp: int = 0, q_exp: int = 0) -> Monomial:
    return Monomial(coeff, t_exp, q_exp)


def _poly(terms, order: int, lo: int = 0) -> QSeries:
    return QSeries.from_terms(terms, order, lo)


def _q3_inv_fact(n: int, order: int) -> QSeries:
    """1/(q^3;q^3)_n."""
    return QSeries.one(order).div_pochhammer(M(1, 0, 3), 3, n)


# ---------------------------------------------------------------------------
# finite generating functions
# ---------------------------------------------------------------------------

def initial_values(cfg: GapConfig, order: int) -> dict[int, QSeries]:
    a, b = cfg.alpha, cfg.beta
    c1 = [(1, 0, 0), (a, 1, 1)]
    c2 = c1 + [(b, -1, 2)]
    c3 = c2 + [(1, 0, 3)]
    c4 = c3 + [(1, 1, 4), (b, 0, 6)]
    return {
        -2: _poly([(b, 0, 0)], order),
        0: QSeries.one(order),
        1: _poly(c1, order),
        2: _poly(c2, order),
        3: _poly(c3, order),
        4: _poly(c4, order),
    }


def finite_C_table(cfg: GapConfig, M_max: int, order: int) -> dict[int, QSeries]:
    """C_M for M in {-2, 0, 1, ..., M_max} via the three-line recurrence."""
    C = initial_values(cfg, order)
    n = 2
    while 3 * n - 1 <= M_max:
        C[3 * n - 1] = C[3 * n - 2] + C[3 * n - 5].shift(M(1, -1, 3 * n - 1))
        C[3 * n] = C[3 * n - 1] + C[3 * n - 3].shift(M(1, 0, 3 * n))
        C[3 * n + 1] = (C[3 * n] + C[3 * n - 3].shift(M(1, 1, 3 * n + 1))
                        + C[3 * n - 5].shift(M(1, 0, 6 * n)))
        n += 1
    return {k: v.truncate(order) for k, v in C.items() if k <= max(M_max, 4)}


def finite_C(cfg: GapConfig, M_: int, order: int) -> QSeries:
    """C^{alpha,beta}_M: level 3 gap partitions with parts at most M."""
    if M_ < -2 or M_ == -1:
        raise ValueError(f"C_M is defined for M = -2 and M >= 0, got {M_}")
    return finite_C_table(cfg, M_, order)[M_]


def combined_recurrence_rhs(C: dict[int, QSeries], n: int) -> QSeries:
    """(1+q^3n) C_{3n-2} + (t^-1 q^(3n-1) + t q^(3n+1) + q^6n) C_{3n-5} + q^(6n-3)(1-q^(3n-3)) C_{3n-8}."""
    order = C[3 * n - 2].order
    p1 = _poly([(1, 0, 0), (1, 0, 3 * n)], order)
    p2 = _poly([(1, -1, 3 * n - 1), (1, 1, 3 * n + 1), (1, 0, 6 * n)], order)
    p3 = _poly([(1, 0, 6 * n - 3), (-1, 0, 9 * n - 6)], order)
    return p1 * C[3 * n - 2] + p2 * C[3 * n - 5] + p3 * C[3 * n - 8]


def combined_recurrence_check(cfg: GapConfig, n: int, order: int,
                              values: dict[int, QSeries] | None = None) -> bool:
    if n < 2:
        raise ValueError("the combined recurrence is used for n >= 2")
    C = values if values is not None else finite_C_table(cfg, 3 * n + 1, order)
    return C[3 * n + 1] == combined_recurrence_rhs(C, n)


# ---------------------------------------------------------------------------
# gamma and delta
# ---------------------------------------------------------------------------

def gamma_seq(cfg: GapConfig, n_max: int, order: int) -> list[QSeries]:
    """gamma_0 .. gamma_{n_max} from the renormalized recurrence."""
    C = initial_values(cfg, order)
    one_minus = lambda k: _poly([(1, 0, 0), (-1, 0, k)], order)  # noqa: E731
    g = [
        C[-2],
        C[1] * one_minus(3).inv(),
        C[4] * (one_minus(3) * one_minus(6)).inv(),
    ]
    for n in range(3, n_max + 1):
        rhs = (one_minus(6 * n - 6) * g[n - 1]
               + _poly([(1, -1, 3 * n - 4), (1, 1, 3 * n - 2), (1, 0, 6 * n - 6)], order) * g[n - 2]
               + g[n - 3].shift(M(1, 0, 6 * n - 9)))
        g.append(rhs * (one_minus(3 * n) * one_minus(3 * n - 3)).inv())
    return [s.truncate(order) for s in g[: n_max + 1]]


def delta_seq(cfg: GapConfig, n_max: int, order: int) -> list[QSeries]:
    """delta_0 .. delta_{n_max} from the two-step recurrence."""
    d = cfg.defect
    out = [
        _poly([(cfg.beta, 0, 0)], order),
        _poly([(1 - cfg.beta, 0, 0), (cfg.alpha, 1, 1)], order).div_binomial(M(-1, 0, 3)),
    ]
    for n in range(2, n_max + 1):
        step = (out[n - 2].times_binomial(M(1, -1, 3 * n - 4))
                .times_binomial(M(1, 1, 3 * n - 2))
                .div_binomial(M(-1, 0, 3 * n - 3))
                .div_binomial(M(-1, 0, 3 * n)))
        inhom = _q3_inv_fact(n, order).shift(M(d * (-1) ** n, 1, 3 * n - 2))
        out.append(step + inhom)
    return out[: n_max + 1]


_PAIR = {
    0: (M(-1, -1, 2), M(-1, 1, 4)),   # (-t^-1 q^2, -t q^4; q^6)
    1: (M(-1, -1, 5), M(-1, 1, 7)),   # (-t^-1 q^5, -t q^7; q^6)
}


def pair_pochhammer(parity: int, r: int | None, order: int) -> QSeries:
    """The paired q^6-Pochhammer product of the given parity, length r (None = infinite)."""
    x, y = _PAIR[parity]
    if r is None:
        return pochhammer_infinite(x, 6, order) * pochhammer_infinite(y, 6, order)
    return pochhammer_finite(x, 6, r, order) * pochhammer_finite(y, 6, r, order)


def ell_sums(parity: int, r_max: int | None, order: int) -> list[QSeries]:
    """Partial sums S_0..S_r of sum_{l>=1} q^(6l-2 or 6l+1) / (pair)_l.

    With ``r_max=None`` the list runs until further terms vanish in the window.
    """
    x, y = _PAIR[parity]
    shift = -2 if parity == 0 else 1
    partial = [QSeries.zero(order)]
    denom_inv = QSeries.one(order)
    ell = 1
    while (r_max is None or ell <= r_max):
        e = 6 * ell + shift
        if r_max is None and e >= order:
            break
        denom_inv = (denom_inv.div_binomial(M(-x.coeff, x.t_exp, x.q_exp + 6 * (ell - 1)))
                     .div_binomial(M(-y.coeff, y.t_exp, y.q_exp + 6 * (ell - 1))))
        partial.append(partial[-1] + denom_inv.shift(M(1, 0, e)))
        ell += 1
    return partial


def _bracket(cfg: GapConfig, parity: int, S: QSeries) -> QSeries:
    """beta + d t S  (even)  or  1 - beta + alpha t q - d t S  (odd)."""
    d = cfg.defect
    order = S.order
    if parity == 0:
        return _poly([(cfg.beta, 0, 0)], order) + S.shift(M(d, 1, 0))
    return _poly([(1 - cfg.beta, 0, 0), (cfg.alpha, 1, 1)], order) - S.shift(M(d, 1, 0))


def delta_closed(cfg: GapConfig, n: int, order: int, odd: bool = False) -> QSeries:
    """delta_{2n} (or delta_{2n+1}) from the explicit product/sum formula."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    parity = int(odd)
    S = ell_sums(parity, n, order)[n]
    lead = pair_pochhammer(parity, n, order).div_pochhammer(M(1, 0, 3), 3, 2 * n + parity)
    return lead * _bracket(cfg, parity, S)


def delta_index(cfg: GapConfig, k: int, order: int) -> QSeries:
    """delta_k from the closed form, for any k >= 0."""
    return delta_closed(cfg, k // 2, order, odd=bool(k % 2))


# ---------------------------------------------------------------------------
# F, H and the q-difference equations
# ---------------------------------------------------------------------------

def euler_z_product(degree: int, order: int) -> ZPoly:
    """(-z; q^3)_inf = sum_n z^n q^(3n(n-1)/2)/(q^3;q^3)_n, as a ZPoly."""
    return ZPoly([_q3_inv_fact(n, order).shift(M(1, 0, 3 * n * (n - 1) // 2)).truncate(order)
                  for n in range(degree + 1)], degree)


def build_F_H(cfg: GapConfig, degree: int, order: int, check: bool = True) -> tuple[ZPoly, ZPoly]:
    """F from the gamma recurrence, H from the delta recurrence.

    With ``check`` the two are tied together through F = (-z;q^3)_inf H.
    """
    if degree < 3:
        raise ValueError("z-degree must be at least 3")
    F = ZPoly(gamma_seq(cfg, degree, order), degree)
    H = ZPoly(delta_seq(cfg, degree, order), degree)
    if check:
        diff = F.first_difference(euler_z_product(degree, order) * H)
        if diff is not None:
            raise ArithmeticError(f"F and (-z;q^3)_inf H disagree at (z, q, t) = {diff[:3]}")
    return F, H


def qdiff_residual(which: str, cfg: GapConfig, degree: int, order: int,
                   series: ZPoly | None = None) -> ZPoly:
    """q^3 * (left side - right side) of the F or H q-difference equation."""
    if series is None:
        F, H = build_F_H(cfg, degree, order, check=False)
        series = F if which == "F" else H
    D, N = series.degree, series.order
    d = cfg.defect

    def zp(terms: dict) -> ZPoly:
        return ZPoly.from_terms({k: _poly(v, N) for k, v in terms.items()}, D, N)

    shift3 = zp({0: [(1, 0, 0), (1, 0, 3)], 2: [(1, -1, 5), (1, 1, 7)]})
    if which == "F":
        lhs = zp({0: [(1, 0, 3)], 1: [(-1, 0, 3)]}) * series
        shift6 = zp({0: [(-1, 0, 0)], 1: [(-1, 0, 3)], 2: [(1, 0, 9)], 3: [(1, 0, 12)]})
        inhom = zp({2: [(d, 1, 7)]})
    elif which == "H":
        lhs = zp({0: [(1, 0, 3)], 2: [(-1, 0, 3)]}) * series
        shift6 = zp({0: [(-1, 0, 0)], 2: [(1, 0, 9)]})
        inhom = ZPoly.from_terms(
            {n + 2: _q3_inv_fact(n, N).shift(M(d * (-1) ** n, 1, 3 * n + 7)).truncate(N)
             for n in range(max(D - 1, 0))}, D, N)
    else:
        raise ValueError("which must be 'F' or 'H'")
    rhs = shift3 * series.scale_z(3) + shift6 * series.scale_z(6) + inhom
    return lhs - rhs


# ---------------------------------------------------------------------------
# the finite double-sum evaluation
# ---------------------------------------------------------------------------

def lemma_eval(cfg: GapConfig, n: int, order: int) -> QSeries:
    """C_{3n-2} from the explicit double sum over j with q^3-binomials."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = QSeries.zero(order)
    sums = {p: ell_sums(p, n, order) for p in (0, 1)}
    for parity, top in ((0, n), (1, n - 1)):
        for j in range(top, -1, -2):
            r = (top - j) // 2
            term = (qbinomial(n, j, 3, order).shift(M(1, 0, 3 * j * (j - 1) // 2)).truncate(order)
                    * pair_pochhammer(parity, r, order)
                    * _bracket(cfg, parity, sums[parity][r]))
            total = total + term
    return total


# ---------------------------------------------------------------------------
# the infinite limit
# ---------------------------------------------------------------------------

def theorem_rhs(cfg: GapConfig, order: int) -> QSeries:
    """Theta / false-theta evaluation of the full (alpha, beta) generating function."""
    d = cfg.defect
    q3_inf_inv = pochhammer_infinite(M(1, 0, 3), 3, order).inv()
    neg_q3 = pochhammer_infinite(M(-1, 0, 3), 3, order)
    th_a = theta_sum(ThetaSpec(M(1, 1, 4), 6), order)
    th_b = theta_sum(ThetaSpec(M(1, 1, 1), 6), order)
    th_c = theta_sum(ThetaSpec(M(-1, 2, 2), 6), order)
    T1 = false_theta(1, "character", order)
    T2 = false_theta(2, "character", order)
    return ((neg_q3 * th_c) * (-d)
            + th_a * q3_inf_inv * (T1 * d + cfg.beta)
            + th_b * q3_inf_inv * (T2 * d + cfg.alpha))


def _alt_theta_half(order: int, upper: bool) -> QSeries:
    """sum_{k>=0} (-1)^k t^-2k q^(3k^2+k)  or  sum_{k>=0} (-1)^k t^(2k+2) q^(3k^2+5k+2)."""
    terms, k = [], 0
    while True:
        e = 3 * k * k + 5 * k + 2 if upper else 3 * k * k + k
        if e >= order:
            break
        terms.append(((-1) ** k, 2 * k + 2 if upper else -2 * k, e))
        k += 1
    return _poly(terms, order)


def _theta2_tail(order: int) -> QSeries:
    """sum_{k>=0} (t^(3k+1) q^((3k+1)^2) - t^(3k+3) q^((3k+3)^2))."""
    terms, k = [], 0
    while (3 * k + 1) ** 2 < order:
        terms += [(1, 3 * k + 1, (3 * k + 1) ** 2), (-1, 3 * k + 3, (3 * k + 3) ** 2)]
        k += 1
    return _poly(terms, order)


@dataclass(frozen=True)
class LimitChain:
    C0_raw: QSeries
    C0_final: QSeries
    C1_raw: QSeries
    C1_final: QSeries
    theorem_rhs: QSeries


def limit_chain(cfg: GapConfig, order: int) -> LimitChain:
    if order < 4:
        raise ValueError("limit chain needs order >= 4")
    d = cfg.defect
    neg_q3 = pochhammer_infinite(M(-1, 0, 3), 3, order)
    P0 = pair_pochhammer(0, None, order)
    P1 = pair_pochhammer(1, None, order)
    S0 = ell_sums(0, None, order)[-1]
    S1 = ell_sums(1, None, order)[-1]
    C0_raw = P0 * neg_q3 * _bracket(cfg, 0, S0)
    C1_raw = P1 * neg_q3 * _bracket(cfg, 1, S1)

    theta1 = false_theta(1, "split", order)
    C0_final = neg_q3 * (_alt_theta_half(order, False) * (-d) + P0 * (theta1 * d + cfg.beta))
    P1b = pochhammer_infinite(M(-1, 1, 1), 6, order) * pochhammer_infinite(M(-1, -1, 5), 6, order)
    C1_final = neg_q3 * (_alt_theta_half(order, True) * d
                         + P1b * (_theta2_tail(order) * (-d) + (1 - cfg.beta)))
    return LimitChain(C0_raw, C0_final, C1_raw, C1_final, theorem_rhs(cfg, order))


def ell_sum_stages(parity: int, order: int) -> list[tuple[str, QSeries]]:
    """Successive rewritings of the infinite l-sum, each a QSeries to ``order``.

    Parity 0 passes through the Lost Notebook identity at a = t q^4,
    b = t^-1 q^2 and Rogers' identity at y = -t^-1 q^-4; parity 1 through
    a = t^-1 q^-1, b = t q and y = -t q.  Consecutive stages must agree.
    """
    N = order
    W = N + 8  # headroom for the q^-4 prefactor and the t^2 q^2 rescaling
    stages = [("direct", ell_sums(parity, None, N)[-1])]
    if parity == 0:
        pre = QSeries.one(W).div_binomial(M(1, -1, 2)).div_binomial(M(1, 1, 4))
        shifted_lhs, ram_rhs = ramanujan_sides(M(1, 1, 4), M(1, -1, 2), 6, W)
        stages.append(("index shift", (pre * shifted_lhs).shift(M(1, 0, 4))))
        stages.append(("lost notebook", (pre * ram_rhs).shift(M(1, 0, 4))))
        # t^-1 sum R_k - t^-1 sum A_k / (pair)_inf
        R = QSeries.zero(W)
        A = QSeries.zero(W)
        k = 0
        while 3 * k * k + k < W:
            mono = M((-1) ** k, -2 * k, 3 * k * k + k)
            R = R + QSeries.one(W).div_pochhammer(M(-1, -1, 2), 6, k + 1).shift(mono)
            A = A + mono.series(W)
            k += 1
        Pinf_inv = pair_pochhammer(0, None, W).inv()

        def assemble(Rs):
            return (Rs - A * Pinf_inv).shift(M(1, -1, 0))

        stages.append(("collected", assemble(R)))
        # R = -t^2 q^2 (-1 + rogers sum at y = -t^-1 q^-4)
        rog_lhs, rog_rhs = rogers_sides(M(-1, -1, -4), 6, W)
        stages.append(("rogers lhs", assemble((rog_lhs - 1).shift(M(-1, 2, 2)))))
        stages.append(("rogers rhs", assemble((rog_rhs - 1).shift(M(-1, 2, 2)))))
        stages.append(("false theta", assemble(false_theta(1, "split", W))))
    else:
        lhs, ram_rhs = ramanujan_sides(M(1, -1, -1), M(1, 1, 1), 6, W)
        stages.append(("index shift", (lhs - 1).shift(M(1, 0, 1))))
        stages.append(("lost notebook", (ram_rhs - 1).shift(M(1, 0, 1))))
        R = QSeries.zero(W)
        A = QSeries.zero(W)
        k = 0
        while 3 * k * k + 5 * k < W:
            mono = M((-1) ** k, 2 * k, 3 * k * k + 5 * k)
            R = R + QSeries.one(W).div_pochhammer(M(-1, 1, 7), 6, k).shift(mono)
            A = A + mono.series(W)
            k += 1
        Pinf_inv = pair_pochhammer(1, None, W).inv()
        one_tq = _poly([(1, 0, 0), (1, 1, 1)], W)

        def assemble(Rs):
            return (_poly([(-1, 0, 1)], W) + (one_tq * Rs).shift(M(1, 0, 1))
                    - (A * Pinf_inv).shift(M(1, 1, 2)))

        stages.append(("collected", assemble(R)))
        rog_lhs, rog_rhs = rogers_sides(M(-1, 1, 1), 6, W)
        stages.append(("rogers lhs", assemble(rog_lhs)))
        stages.append(("rogers rhs", assemble(rog_rhs)))
        explicit, k = [], 0
        while 9 * k * k + 6 * k < W:
            explicit += [(1, 3 * k, 9 * k * k + 6 * k), (-1, 3 * k + 2, 9 * k * k + 18 * k + 8)]
            k += 1
        stages.append(("closed sum", assemble(_poly(explicit, W))))
    return [(name, s.truncate(N)) for name, s in stages]
