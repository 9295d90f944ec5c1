"""Theta functions, false theta functions and classical q-series identities.

Each ``*_sides`` function expands both sides of an identity independently
and returns them for the caller to compare; nothing here asserts equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .series import (
    Monomial,
    QSeries,
    WindowError,
    pochhammer_finite,
    pochhammer_infinite,
    pochhammer_product,
)


@dataclass(frozen=True)
class ThetaSpec:
    """theta(z; q^modulus) with z = z_arg a signed monomial."""

    z_arg: Monomial
    modulus: int = 1


def _quadratic_range(a2: int, b: int, c: int, order: int) -> range:
    """Integers k with (a2*k^2 + b*k)/2 + c < order, for a2 > 0."""
    # a2 k^2 + b k + 2(c - order) < 0
    disc = b * b - 8 * a2 * (c - order)
    if disc < 0:
        return range(0)
    r = isqrt(disc)
    lo = (-b - r) // (2 * a2) - 1
    hi = (-b + r) // (2 * a2) + 1
    while (a2 * lo * lo + b * lo) // 2 + c >= order and lo <= hi:
        lo += 1
    while (a2 * hi * hi + b * hi) // 2 + c >= order and hi >= lo:
        hi -= 1
    return range(lo, hi + 1)


def _theta_terms(spec: ThetaSpec, order: int):
    z, m = spec.z_arg, spec.modulus
    if m < 1:
        raise WindowError("modulus must be positive")
    if not z.is_unit:
        raise ValueError("theta argument needs a +-1 coefficient")
    # exponent of z^k q^(m k(k-1)/2) is (m k^2 + (2b - m) k) / 2
    for k in _quadratic_range(m, 2 * z.q_exp - m, 0, order):
        zk = z ** k
        yield zk.coeff, zk.t_exp, zk.q_exp + m * k * (k - 1) // 2


def theta_sum(spec: ThetaSpec, order: int) -> QSeries:
    """Bilateral sum over k of z^k q^(m k(k-1)/2) with explicit k-range."""
    terms = list(_theta_terms(spec, order))
    lo = min([0] + [qe for _, _, qe in terms])
    return QSeries.from_terms(terms, order, lo)


def theta_product(spec: ThetaSpec, order: int) -> QSeries:
    """(-z, -q^m/z, q^m; q^m)_inf."""
    z, m = spec.z_arg, spec.modulus
    if not z.is_unit:
        raise ValueError("theta argument needs a +-1 coefficient")
    other = (-z.inverse()) * Monomial(1, 0, m)
    pad = max(0, -z.q_exp) + max(0, -other.q_exp)
    work = order + pad
    out = (pochhammer_infinite(-z, m, work)
           * pochhammer_infinite(other, m, work)
           * pochhammer_infinite(Monomial(1, 0, m), m, work))
    return out.truncate(order)


def chi3(m: int) -> int:
    """Legendre symbol ((m+1)/3): 1, -1, 0 for m = 0, 1, 2 mod 3."""
    return (1, -1, 0)[m % 3]


def false_theta(which: int, form: str, order: int) -> QSeries:
    """Theta_1 = sum chi3(k) t^-k q^(k(k+1)),  Theta_2 = sum chi3(k) t^k q^(k^2).

    ``form="character"`` sums the definition; ``form="split"`` sums over the
    two residue classes k = 3j, 3j+1 that chi3 supports.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    if order < 1:
        raise WindowError("order must be >= 1")
    terms = []
    if form == "character":
        k = 0
        while True:
            e = k * (k + 1) if which == 1 else k * k
            if e >= order:
                break
            c = chi3(k)
            if c:
                terms.append((c, -k if which == 1 else k, e))
            k += 1
    elif form == "split":
        j = 0
        while True:
            if which == 1:
                pos = (1, -3 * j, 3 * j * (3 * j + 1))
                neg = (-1, -(3 * j + 1), (3 * j + 1) * (3 * j + 2))
            else:
                pos = (1, 3 * j, 9 * j * j)
                neg = (-1, 3 * j + 1, (3 * j + 1) ** 2)
            if pos[2] >= order:
                break
            terms.extend([pos, neg])
            j += 1
    else:
        raise ValueError(f"unknown form {form!r}")
    return QSeries.from_terms(terms, order)


def _sum_series(parts: list[QSeries], lo: int, order: int) -> QSeries:
    acc = QSeries.zero(order, lo)
    for p in parts:
        acc = acc + p
    return acc


def euler_sides(variant: int, x: Monomial, modulus: int, order: int) -> tuple[QSeries, QSeries]:
    """Variant 1: 1/(x;Q)_inf vs sum x^n/(Q;Q)_n.
    Variant 2: (x;Q)_inf vs sum (-1)^n x^n Q^(n(n-1)/2)/(Q;Q)_n.  Here Q = q^modulus.
    """
    m = modulus
    qm = Monomial(1, 0, m)
    if variant == 1:
        if x.q_exp < 1:
            raise ValueError("variant 1 needs x with positive q-exponent")
        lhs = pochhammer_infinite(x, m, order).inv()
        parts, n = [], 0
        while n * x.q_exp < order:
            parts.append(pochhammer_finite(qm, m, n, order).inv().shift(x ** n))
            n += 1
    elif variant == 2:
        if x.q_exp < 0:
            raise ValueError("variant 2 needs x with nonnegative q-exponent")
        lhs = pochhammer_infinite(x, m, order)
        parts, n = [], 0
        while n * x.q_exp + m * n * (n - 1) // 2 < order:
            mono = ((-x) ** n) * Monomial(1, 0, m * n * (n - 1) // 2)
            parts.append(pochhammer_finite(qm, m, n, order).inv().shift(mono))
            n += 1
    else:
        raise ValueError("variant must be 1 or 2")
    return lhs, _sum_series(parts, 0, order)


def cauchy_even_sides(modulus: int, order: int) -> tuple[QSeries, QSeries, QSeries]:
    """sum_{n even} Q^(n(n-1)/2)/(Q;Q)_n,  1/(Q;Q^2)_inf,  (-Q;Q)_inf."""
    m = modulus
    qm = Monomial(1, 0, m)
    parts, n = [], 0
    while m * n * (n - 1) // 2 < order:
        parts.append(pochhammer_finite(qm, m, n, order).inv()
                     .shift(Monomial(1, 0, m * n * (n - 1) // 2)))
        n += 2
    even_sum = _sum_series(parts, 0, order)
    recip = pochhammer_infinite(qm, 2 * m, order).inv()
    prod = pochhammer_infinite(-qm, m, order)
    return even_sum, recip, prod


def _live_indices(expo, order: int) -> list[int]:
    """n >= 0 with expo(n) < order, for expo eventually increasing."""
    out, n = [], 0
    while True:
        e = expo(n)
        if e < order:
            out.append(n)
        elif expo(n + 1) > e:
            return out
        n += 1


def ramanujan_sides(a: Monomial, b: Monomial, modulus: int, order: int) -> tuple[QSeries, QSeries]:
    """Both sides of the Lost Notebook identity

        sum Q^n / ((-aQ;Q)_n (-bQ;Q)_n)
          = (1 + 1/a) sum (-1)^n Q^(n(n+1)/2) (b/a)^n / (-bQ;Q)_n
            - (1/a) sum (-1)^n Q^(n(n+1)/2) (b/a)^n / (-aQ, -bQ; Q)_inf

    with Q = q^modulus.  The right side may carry negative q-exponents.
    """
    m = modulus
    if not a.is_unit:
        raise ValueError("a must have a +-1 coefficient")
    aq = -(a * Monomial(1, 0, m))
    bq = -(b * Monomial(1, 0, m))
    if aq.q_exp < 1 or bq.q_exp < 1:
        raise ValueError("aQ and bQ need positive q-exponents")
    ainv = a.inverse()
    ratio = b * ainv

    def sum_term(n):
        return Monomial((-1) ** n, 0, m * n * (n + 1) // 2) * (ratio ** n)

    pre_lo = min(0, ainv.q_exp)
    ns = _live_indices(lambda n: sum_term(n).q_exp, order - pre_lo)
    low = min([0] + [sum_term(n).q_exp for n in ns])
    work = order - low - pre_lo
    big = 2 * work + m

    lhs_parts, n = [], 0
    while m * n < order:
        den = pochhammer_product([aq, bq], m, order, n)
        lhs_parts.append(den.inv().shift(Monomial(1, 0, m * n)))
        n += 1
    lhs = _sum_series(lhs_parts, 0, order)

    s1 = _sum_series([pochhammer_finite(bq, m, n, work - low).inv().shift(sum_term(n))
                      for n in ns], low, work)
    s2 = QSeries.from_terms([(t.coeff, t.t_exp, t.q_exp) for t in map(sum_term, ns)], big, low)
    inf_den = pochhammer_product([aq, bq], m, work - low).inv()
    prefactor = QSeries.from_terms([(1, 0, 0), (ainv.coeff, ainv.t_exp, ainv.q_exp)], big, pre_lo)
    rhs = prefactor * s1 - (s2 * inf_den).shift(ainv)
    return lhs, rhs.truncate(order)


def rogers_sides(y: Monomial, modulus: int, order: int) -> tuple[QSeries, QSeries]:
    """sum (-1)^n y^2n Q^(n(n+1)/2)/(yQ;Q)_n  vs  sum (-1)^n y^3n Q^(n(3n+1)/2)(1 - y^2 Q^(2n+1))."""
    m = modulus
    if not y.is_unit:
        raise ValueError("y must have a +-1 coefficient")
    yq = y * Monomial(1, 0, m)
    if yq.q_exp < 1:
        raise ValueError("yQ needs a positive q-exponent")

    def lterm(n):
        return Monomial((-1) ** n, 0, m * n * (n + 1) // 2) * (y ** (2 * n))

    def rterms(n):
        head = Monomial((-1) ** n, 0, m * n * (3 * n + 1) // 2) * (y ** (3 * n))
        return head, -(head * (y ** 2) * Monomial(1, 0, m * (2 * n + 1)))

    lns = _live_indices(lambda n: lterm(n).q_exp, order)
    low = min([0] + [lterm(n).q_exp for n in lns])
    lhs = _sum_series([pochhammer_finite(yq, m, n, order - low).inv().shift(lterm(n))
                       for n in lns], low, order)

    rns = _live_indices(lambda n: min(x.q_exp for x in rterms(n)), order)
    flat = [x for n in rns for x in rterms(n)]
    rlow = min([0] + [x.q_exp for x in flat])
    rhs = QSeries.from_terms([(x.coeff, x.t_exp, x.q_exp) for x in flat], order, rlow)
    return lhs, rhs
