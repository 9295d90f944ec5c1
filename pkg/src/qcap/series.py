"""Exact truncated series in q whose coefficients are Laurent polynomials in t.

A :class:`QSeries` knows its coefficients exactly on the window
``[lo, order)``.  Everything below ``lo`` is an exact zero; nothing at or
above ``order`` is known.  Products follow the usual rule

    [lo1, N1) x [lo2, N2) -> [lo1 + lo2, min(lo1 + N2, lo2 + N1))

so a factor with a negative ``lo`` costs precision at the top of the window.
Callers that pass through negative exponents over-allocate their orders.

All values are immutable once built.  Internally each q-coefficient is a plain
``dict`` mapping t-exponents to nonzero ints; :class:`TLaurent` wraps such a
dict for public consumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union


class WindowError(ValueError):
    """Raised when an operation would leave an empty or invalid window."""


# --------------------------------------------------------------------------
# raw kernels on {t_exp: coeff} dicts
# --------------------------------------------------------------------------

def _add_into(acc: dict, d: Mapping[int, int], sign: int = 1) -> None:
    for e, c in d.items():
        v = acc.get(e, 0) + sign * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


def _mul_into(acc: dict, a: Mapping[int, int], b: Mapping[int, int]) -> None:
    # leaves zeros in acc; callers clean up with _clean
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = ea + eb
            acc[k] = acc.get(k, 0) + ca * cb


def _clean(d: dict) -> dict:
    return {e: c for e, c in d.items() if c}


def _shift_t(d: Mapping[int, int], coeff: int, t_exp: int) -> dict:
    return {e + t_exp: c * coeff for e, c in d.items()}


# --------------------------------------------------------------------------
# Monomial and TLaurent
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    """``coeff * t**t_exp * q**q_exp``; the zero monomial is canonical."""

    coeff: int = 1
    t_exp: int = 0
    q_exp: int = 0

    def __post_init__(self):
        if type(self.coeff) is not int:
            raise TypeError(f"coefficients must be int, got {self.coeff!r}")
        if self.coeff == 0 and (self.t_exp or self.q_exp):
            object.__setattr__(self, "t_exp", 0)
            object.__setattr__(self, "q_exp", 0)

    def __neg__(self) -> Monomial:
        return Monomial(-self.coeff, self.t_exp, self.q_exp)

    def __mul__(self, other: Monomial | int) -> Monomial:
        if isinstance(other, int):
            return Monomial(self.coeff * other, self.t_exp, self.q_exp)
        return Monomial(self.coeff * other.coeff, self.t_exp + other.t_exp,
                        self.q_exp + other.q_exp)

    __rmul__ = __mul__

    @property
    def is_unit(self) -> bool:
        return self.coeff in (1, -1)

    def inverse(self) -> Monomial:
        if not self.is_unit:
            raise ArithmeticError(f"{self} is not invertible over the integers")
        return Monomial(self.coeff, -self.t_exp, -self.q_exp)

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            return self.inverse() ** (-k)
        return Monomial(self.coeff ** k, self.t_exp * k, self.q_exp * k)

    def series(self, order: int, lo: int | None = None) -> QSeries:
        """This monomial as a QSeries on ``[lo, order)``."""
        if lo is None:
            lo = min(0, self.q_exp)
        return QSeries.from_terms([(self.coeff, self.t_exp, self.q_exp)], order, lo)

    def __str__(self):
        return format_term(self.coeff, self.t_exp, self.q_exp)


class TLaurent:
    """Laurent polynomial in t with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms} if terms else {}
        self._terms = {int(e): int(c) for e, c in terms.items() if c}

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TLaurent(other)
        if not isinstance(other, TLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _as_tl(other)
        acc = dict(self._terms)
        _add_into(acc, other._terms)
        return TLaurent(acc)

    __radd__ = __add__

    def __neg__(self):
        return TLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_tl(other))

    def __rsub__(self, other):
        return _as_tl(other) - self

    def __mul__(self, other):
        other = _as_tl(other)
        acc: dict = {}
        _mul_into(acc, self._terms, other._terms)
        return TLaurent(acc)

    __rmul__ = __mul__

    def at_one(self) -> int:
        """Specialize t = 1."""
        return sum(self._terms.values())

    def degrees(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        return min(self._terms), max(self._terms)

    def __repr__(self):
        return f"TLaurent({dict(self.items())})"


def _as_tl(x) -> TLaurent:
    if isinstance(x, TLaurent):
        return x
    if isinstance(x, int):
        return TLaurent(x)
    if isinstance(x, Mapping):
        return TLaurent(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to TLaurent")


def format_term(coeff: int, t_exp: int, q_exp: int) -> str:
    """Render ``coeff t^a q^b`` compactly, e.g. ``-2 t^-1 q^3``."""
    factors = []
    if t_exp:
        factors.append("t" if t_exp == 1 else f"t^{t_exp}")
    if q_exp:
        factors.append("q" if q_exp == 1 else f"q^{q_exp}")
    if not factors:
        return str(coeff)
    body = " ".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff} {body}"


# --------------------------------------------------------------------------
# QSeries
# --------------------------------------------------------------------------

Coeff = Union[TLaurent, Mapping[int, int], int]
Scalar = Union[int, Monomial, TLaurent]


class QSeries:
    """Truncated Laurent series in q over Z[t, 1/t], exact on ``[lo, order)``."""

    __slots__ = ("lo", "order", "_c")

    def __init__(self, coeffs: Sequence[Coeff] = (), lo: int = 0, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = lo + len(coeffs)
        if order <= lo:
            raise WindowError(f"empty window [{lo}, {order})")
        n = order - lo
        if len(coeffs) > n:
            coeffs = coeffs[:n]
        raw = []
        for c in coeffs:
            if isinstance(c, TLaurent):
                raw.append(c._terms)
            elif isinstance(c, int):
                raw.append({0: c} if c else {})
            else:
                raw.append(_clean(dict(c)))
        raw.extend({} for _ in range(n - len(raw)))
        self.lo = lo
        self.order = order
        self._c = raw

    @classmethod
    def _raw(cls, raw: list, lo: int, order: int) -> QSeries:
        # trusted constructor: raw dicts already clean and of correct length
        s = cls.__new__(cls)
        s.lo, s.order, s._c = lo, order, raw
        return s

    # ---- constructors --------------------------------------------------
    @classmethod
    def zero(cls, order: int, lo: int = 0) -> QSeries:
        if order <= lo:
            raise WindowError(f"empty window [{lo}, {order})")
        return cls._raw([{} for _ in range(order - lo)], lo, order)

    @classmethod
    def one(cls, order: int, lo: int = 0) -> QSeries:
        return cls.constant(1, order, lo)

    @classmethod
    def constant(cls, c: Coeff, order: int, lo: int = 0) -> QSeries:
        s = cls.zero(order, lo)
        if lo <= 0 < order:
            s._c[-lo] = dict(_as_tl(c)._terms)
        return s

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]], order: int, lo: int = 0) -> QSeries:
        """Build from ``(coeff, t_exp, q_exp)`` triples; terms at or above order are dropped."""
        s = cls.zero(order, lo)
        for c, te, qe in terms:
            if type(c) is not int:
                raise TypeError(f"coefficients must be int, got {c!r}")
            if qe >= order or not c:
                continue
            if qe < lo:
                raise WindowError(f"term q^{qe} lies below window start {lo}")
            _add_into(s._c[qe - lo], {te: c})
        return s

    # ---- access ----------------------------------------------------------
    def __getitem__(self, n: int) -> TLaurent:
        if n >= self.order:
            raise WindowError(f"q^{n} is beyond the known window (order {self.order})")
        if n < self.lo:
            return TLaurent()
        return TLaurent(self._c[n - self.lo])

    def coeff(self, q_exp: int, t_exp: int = 0) -> int:
        return self[q_exp][t_exp]

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(q_exp, t_exp, coeff)`` in ascending (q, t) order."""
        for i, d in enumerate(self._c):
            for e in sorted(d):
                yield self.lo + i, e, d[e]

    def is_zero(self) -> bool:
        return not any(self._c)

    def valuation(self) -> int | None:
        """Lowest q-exponent carrying a nonzero coefficient."""
        for i, d in enumerate(self._c):
            if d:
                return self.lo + i
        return None

    def at_t1(self) -> list[int]:
        """Coefficients at t = 1, indexed from ``lo``."""
        return [sum(d.values()) for d in self._c]

    def __repr__(self):
        shown = list(self.terms())[:8]
        body = " + ".join(format_term(c, te, qe) for qe, te, c in shown) or "0"
        if len(shown) == 8:
            body += " + ..."
        return f"QSeries({body}; [{self.lo}, {self.order}))"

    # ---- windows -------------------------------------------------------
    def rewindow(self, lo: int, order: int) -> QSeries:
        """Same series viewed on ``[lo, order)``.

        Lowering ``lo`` pads exact zeros.  Raising it is only allowed when
        the dropped coefficients vanish.
        """
        if order > self.order:
            raise WindowError(f"cannot extend order {self.order} to {order}")
        if order <= lo:
            raise WindowError(f"empty window [{lo}, {order})")
        if lo > self.lo and any(self._c[: min(lo, order) - self.lo]):
            raise WindowError(f"nonzero coefficients below new start {lo}")
        raw = []
        for n in range(lo, order):
            i = n - self.lo
            raw.append(self._c[i] if 0 <= i < len(self._c) else {})
        return QSeries._raw(raw, lo, order)

    def truncate(self, order: int) -> QSeries:
        return self.rewindow(self.lo, min(order, self.order))

    # ---- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, Monomial):
            lo = min(self.lo, other.q_exp)
            return other.series(max(self.order, lo + 1), lo)
        if isinstance(other, (int, TLaurent)):
            return QSeries.constant(other, self.order, min(self.lo, 0))
        return NotImplemented

    def __add__(self, other) -> QSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        lo = min(self.lo, other.lo)
        order = min(self.order, other.order)
        if order <= lo:
            raise WindowError(f"empty window [{lo}, {order})")
        raw = []
        for n in range(lo, order):
            acc = {}
            i, j = n - self.lo, n - other.lo
            if i >= 0:
                acc.update(self._c[i])
            if j >= 0:
                _add_into(acc, other._c[j])
            raw.append(acc)
        return QSeries._raw(raw, lo, order)

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries._raw([{e: -c for e, c in d.items()} for d in self._c], self.lo, self.order)

    def __sub__(self, other) -> QSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if isinstance(other, int):
            if other == 0:
                return QSeries.zero(self.order, self.lo)
            return QSeries._raw([{e: c * other for e, c in d.items()} for d in self._c],
                                self.lo, self.order)
        if isinstance(other, Monomial):
            return self.shift(other)
        if isinstance(other, TLaurent):
            return self * QSeries.constant(other, self.order, self.lo)
        if not isinstance(other, QSeries):
            return NotImplemented
        lo = self.lo + other.lo
        order = min(self.lo + other.order, other.lo + self.order)
        if order <= lo:
            raise WindowError(f"empty product window [{lo}, {order})")
        n = order - lo
        acc = [dict() for _ in range(n)]
        b = other._c
        for i, ai in enumerate(self._c[:n]):
            if not ai:
                continue
            for j in range(min(len(b), n - i)):
                bj = b[j]
                if bj:
                    _mul_into(acc[i + j], ai, bj)
        return QSeries._raw([_clean(d) for d in acc], lo, order)

    __rmul__ = __mul__

    def shift(self, m: Monomial) -> QSeries:
        """Multiply by a monomial.

        A nonnegative q-exponent keeps the window; a negative one moves it down.
        """
        if m.coeff == 0:
            return QSeries.zero(self.order, self.lo)
        k = m.q_exp
        if k >= 0:
            n = len(self._c)
            raw = [{} for _ in range(min(k, n))]
            raw += [_shift_t(d, m.coeff, m.t_exp) for d in self._c[: max(n - k, 0)]]
            return QSeries._raw(raw, self.lo, self.order)
        raw = [_shift_t(d, m.coeff, m.t_exp) for d in self._c]
        return QSeries._raw(raw, self.lo + k, self.order + k)

    def times_binomial(self, m: Monomial) -> QSeries:
        """``self * (1 + m)``, keeping the window when ``m`` has q-exponent >= 0."""
        k = m.q_exp
        if k < 0:
            return self + self.shift(m)
        raw = [dict(d) for d in self._c]
        for i in range(len(raw) - k):
            d = self._c[i]
            if d:
                _add_into(raw[i + k], _shift_t(d, m.coeff, m.t_exp))
        return QSeries._raw(raw, self.lo, self.order)

    def div_binomial(self, m: Monomial) -> QSeries:
        """``self / (1 + m)`` for ``m`` with positive q-exponent."""
        k = m.q_exp
        if k < 1:
            raise ArithmeticError("1 + m is only inverted here for positive q-exponent")
        out = []
        for i, d in enumerate(self._c):
            y = dict(d)
            if i >= k and out[i - k]:
                _add_into(y, _shift_t(out[i - k], m.coeff, m.t_exp), -1)
            out.append(y)
        return QSeries._raw(out, self.lo, self.order)

    def div_pochhammer(self, a: Monomial, modulus: int, n: int) -> QSeries:
        """``self / (a; q^modulus)_n``; every factor must have positive q-exponent."""
        out = self
        for j in range(n):
            e = a.q_exp + modulus * j
            if e >= self.order - self.lo:
                break
            out = out.div_binomial(Monomial(-a.coeff, a.t_exp, e))
        return out

    def __pow__(self, k: int) -> QSeries:
        if k < 0:
            return self.inv() ** (-k)
        out = QSeries.one(self.order, min(self.lo, 0))
        for _ in range(k):
            out = out * self
        return out

    def inv(self) -> QSeries:
        """Multiplicative inverse; the lowest nonzero term must be ``+-t^e q^v``."""
        v = self.valuation()
        if v is None:
            raise ArithmeticError("cannot invert the zero series")
        lead = self._c[v - self.lo]
        if len(lead) != 1 or next(iter(lead.values())) not in (1, -1):
            raise ArithmeticError(f"leading coefficient {TLaurent(lead)!r} is not a unit monomial")
        (e0, s0), = lead.items()
        a = self._c[v - self.lo:]
        n = self.order - v
        lo, order = -v, self.order - 2 * v
        if order <= lo:
            raise WindowError(f"empty inverse window [{lo}, {order})")
        x = [_shift_t({0: 1}, s0, -e0)]
        for k in range(1, n):
            acc: dict = {}
            for i in range(1, k + 1):
                if a[i] and x[k - i]:
                    _mul_into(acc, a[i], x[k - i])
            x.append(_shift_t(_clean(acc), -s0, -e0))
        return QSeries._raw(x, lo, order)

    def substitute_q(self, k: int, order: int | None = None) -> QSeries:
        """Replace q by q**k."""
        if k < 1:
            raise ValueError("substitution exponent must be >= 1")
        lo, top = k * self.lo, k * self.order
        raw = [{} for _ in range(top - lo)]
        for i, d in enumerate(self._c):
            raw[k * i] = dict(d)
        out = QSeries._raw(raw, lo, top)
        return out if order is None else out.truncate(order)

    def map_t(self, f) -> QSeries:
        """Apply ``f(t_exp) -> t_exp`` to every term (e.g. t -> 1/t)."""
        raw = []
        for d in self._c:
            acc: dict = {}
            for e, c in d.items():
                _add_into(acc, {f(e): c})
            raw.append(acc)
        return QSeries._raw(raw, self.lo, self.order)

    # ---- comparison ----------------------------------------------------
    def first_difference(self, other: QSeries) -> tuple[int, int, int, int] | None:
        """Minimal ``(q_exp, t_exp, self_coeff, other_coeff)`` where the two differ.

        Compared on ``[min lo, min order)``; coefficients below a series' own
        ``lo`` count as zero.
        """
        lo = min(self.lo, other.lo)
        order = min(self.order, other.order)
        for n in range(lo, order):
            i, j = n - self.lo, n - other.lo
            a = self._c[i] if i >= 0 else {}
            b = other._c[j] if j >= 0 else {}
            if a != b:
                e = min(x for x in set(a) | set(b) if a.get(x, 0) != b.get(x, 0))
                return n, e, a.get(e, 0), b.get(e, 0)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, TLaurent, Monomial)):
            other = self._coerce(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]


# functional aliases ---------------------------------------------------------

def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_inv(a: QSeries) -> QSeries:
    return a.inv()


def qs_substitute_q(a: QSeries, k: int, order: int | None = None) -> QSeries:
    return a.substitute_q(k, order)


# --------------------------------------------------------------------------
# q-Pochhammer symbols and q-binomials
# --------------------------------------------------------------------------

def pochhammer_finite(a: Monomial, modulus: int, n: int, order: int) -> QSeries:
    """``(a; q^modulus)_n = prod_{j<n} (1 - a q^(modulus*j))`` on ``[lo, order)``.

    Factors with negative q-exponent are allowed; the working window is
    padded so the result is still exact below ``order``.
    """
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    if modulus < 1:
        raise ValueError("modulus must be positive")
    exps = [a.q_exp + modulus * j for j in range(n)]
    neg = -sum(e for e in exps if e < 0)
    s = QSeries.one(order + neg)
    for e in exps:
        if e >= s.order:
            break
        s = s.times_binomial(Monomial(-a.coeff, a.t_exp, e))
    return s if neg == 0 else s.truncate(order)


def pochhammer_infinite(a: Monomial, modulus: int, order: int) -> QSeries:
    """``(a; q^modulus)_inf``, multiplying factors until they are 1 in the window."""
    if modulus < 1:
        raise WindowError("factor exponents must grow: modulus must be positive")
    if a.coeff == 0:
        return QSeries.one(order)
    n = 0
    while a.q_exp + modulus * n < order:
        n += 1
    return pochhammer_finite(a, modulus, n, order)


def pochhammer_product(monos: Iterable[Monomial], modulus: int, order: int,
                       n: int | None = None) -> QSeries:
    """``(a1, ..., ar; q^modulus)_n``; ``n=None`` means the infinite product."""
    out = QSeries.one(order)
    for m in monos:
        f = (pochhammer_infinite(m, modulus, order) if n is None
             else pochhammer_finite(m, modulus, n, order))
        out = out * f
    return out


@lru_cache(maxsize=None)
def _qfactorial_poly(n: int, modulus: int) -> tuple[int, ...]:
    """Integer coefficients of ``(q^m; q^m)_n`` as a polynomial in q."""
    p = [1]
    for j in range(1, n + 1):
        k = modulus * j
        nxt = p + [0] * k
        for i, c in enumerate(p):
            nxt[i + k] -= c
        p = nxt
    return tuple(p)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Exact quotient of integer polynomials with ``den[0] = +-1``."""
    if den[0] not in (1, -1):
        raise ArithmeticError("divisor must have unit constant term")
    dq = len(num) - len(den)
    if dq < 0:
        raise ArithmeticError("divisor has larger degree than dividend")
    quo = []
    for k in range(dq + 1):
        v = num[k] - sum(den[i] * quo[k - i] for i in range(1, min(k, len(den) - 1) + 1))
        quo.append(v * den[0])
    if _poly_mul(quo, den) != list(num):
        raise ArithmeticError("polynomial division is not exact")
    return quo


@lru_cache(maxsize=None)
def qbinomial_poly(n: int, m: int, modulus: int = 1) -> tuple[int, ...]:
    """Gaussian polynomial ``[n choose m]`` at q -> q^modulus, as coefficients."""
    if not 0 <= m <= n:
        raise ValueError(f"q-binomial needs 0 <= m <= n, got n={n}, m={m}")
    den = _poly_mul(_qfactorial_poly(m, modulus), _qfactorial_poly(n - m, modulus))
    return tuple(_poly_divexact(_qfactorial_poly(n, modulus), den))


def qbinomial(n: int, m: int, modulus: int, order: int) -> QSeries:
    return QSeries(qbinomial_poly(n, m, modulus)[:order], 0, order)


# --------------------------------------------------------------------------
# ZPoly
# --------------------------------------------------------------------------

class ZPoly:
    """Polynomial in z with QSeries coefficients, known up to z-degree ``degree``.

    All components share one q-window.
    """

    __slots__ = ("zcoeffs", "degree")

    def __init__(self, zcoeffs: Sequence[QSeries], degree: int | None = None):
        zcoeffs = list(zcoeffs)
        if not zcoeffs:
            raise ValueError("ZPoly needs at least one coefficient")
        if degree is None:
            degree = len(zcoeffs) - 1
        lo = min(s.lo for s in zcoeffs)
        order = min(s.order for s in zcoeffs)
        zcoeffs = [s.rewindow(lo, order) for s in zcoeffs[: degree + 1]]
        while len(zcoeffs) <= degree:
            zcoeffs.append(QSeries.zero(order, lo))
        self.zcoeffs = tuple(zcoeffs)
        self.degree = degree

    @property
    def lo(self) -> int:
        return self.zcoeffs[0].lo

    @property
    def order(self) -> int:
        return self.zcoeffs[0].order

    @classmethod
    def from_terms(cls, terms: Mapping[int, QSeries | Scalar], degree: int,
                   order: int, lo: int = 0) -> ZPoly:
        """Exact polynomial ``sum_n terms[n] z^n`` viewed to z-degree ``degree``."""
        out = []
        for n in range(degree + 1):
            c = terms.get(n, 0)
            if isinstance(c, QSeries):
                out.append(c)
            else:
                out.append(QSeries.zero(order, lo) + c)
        return cls(out, degree)

    def __getitem__(self, n: int) -> QSeries:
        return self.zcoeffs[n]

    def _binop(self, other: ZPoly, sign: int) -> ZPoly:
        d = min(self.degree, other.degree)
        return ZPoly([a + b * sign for a, b in zip(self.zcoeffs[: d + 1], other.zcoeffs[: d + 1])], d)

    def __add__(self, other: ZPoly) -> ZPoly:
        return self._binop(other, 1)

    def __sub__(self, other: ZPoly) -> ZPoly:
        return self._binop(other, -1)

    def __neg__(self) -> ZPoly:
        return ZPoly([-a for a in self.zcoeffs], self.degree)

    def __mul__(self, other) -> ZPoly:
        if not isinstance(other, ZPoly):
            return ZPoly([a * other for a in self.zcoeffs], self.degree)
        d = min(self.degree, other.degree)
        out = []
        for n in range(d + 1):
            acc = None
            for i in range(n + 1):
                term = self.zcoeffs[i] * other.zcoeffs[n - i]
                acc = term if acc is None else acc + term
            out.append(acc)
        return ZPoly(out, d)

    __rmul__ = __mul__

    def scale_z(self, m: int) -> ZPoly:
        """Substitute z -> z q^m."""
        return ZPoly([s.shift(Monomial(1, 0, m * n)) for n, s in enumerate(self.zcoeffs)],
                     self.degree)

    def first_difference(self, other: ZPoly, max_degree: int | None = None):
        """Minimal ``(z_deg, q_exp, t_exp, a, b)`` where the two polynomials differ."""
        d = min(self.degree, other.degree)
        if max_degree is not None:
            d = min(d, max_degree)
        for n in range(d + 1):
            diff = self.zcoeffs[n].first_difference(other.zcoeffs[n])
            if diff is not None:
                return (n, *diff)
        return None

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"ZPoly(degree={self.degree}, window=[{self.lo}, {self.order}))"


def zpoly_scale_z(p: ZPoly, m: int) -> ZPoly:
    return p.scale_z(m)
