"""Brute-force partition oracles for the level 3 gap condition.

Everything here works by listing partitions directly, so it serves as the
independent side of every generating-function check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .series import QSeries


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def nu(self, j: int) -> int:
        """Number of parts congruent to j mod 3."""
        return sum(1 for p in self.parts if p % 3 == j % 3)

    def psi(self, j: int) -> int:
        return int(j in self.parts)

    @property
    def t_statistic(self) -> int:
        return self.nu(1) - self.nu(2)


@dataclass(frozen=True)
class GapConfig:
    """Whether parts 1 (alpha) and 2 (beta) are permitted.

    (1,1) gives C1, (0,1) gives C2, (1,0) gives C2*, (0,0) gives C3.
    """

    alpha: int = 1
    beta: int = 1

    def __post_init__(self):
        if self.alpha not in (0, 1) or self.beta not in (0, 1):
            raise ValueError(f"alpha and beta must be 0 or 1, got {self.alpha}, {self.beta}")

    def weight(self, lam: Partition) -> int:
        return (1 - (1 - self.alpha) * lam.psi(1)) * (1 - (1 - self.beta) * lam.psi(2))

    @property
    def defect(self) -> int:
        """``1 - alpha - beta``: the coefficient of the false-theta terms."""
        return 1 - self.alpha - self.beta

    @property
    def label(self) -> str:
        return {(1, 1): "C1", (0, 1): "C2", (1, 0): "C2star", (0, 0): "C3"}[(self.alpha, self.beta)]


ALL_CONFIGS = (GapConfig(1, 1), GapConfig(0, 1), GapConfig(1, 0), GapConfig(0, 0))


def _gap_ok(a: int, b: int) -> bool:
    """Adjacent parts a >= b satisfy the level 3 gap rule."""
    d = a - b
    return d >= 2 and (d > 3 or (a + b) % 3 == 0)


def is_level3_gap(lam: Partition) -> bool:
    p = lam.parts
    return all(_gap_ok(a, b) for a, b in zip(p, p[1:]))


def is_level3_multiplicity(lam: Partition) -> bool:
    p = lam.parts
    if len(set(p)) != len(p):
        return False
    if not p:
        return True
    psi = set(p)

    def s(*js):
        return sum(1 for j in js if j in psi)

    for j in range(1, p[0] // 3 + 2):
        if s(3 * j + 2, 3 * j, 3 * j - 1) > 1:
            return False
        if s(3 * j + 1, 3 * j, 3 * j - 2) > 1:
            return False
        if s(3 * j - 1, 3 * j - 2) > 1:
            return False
    return True


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Every partition of n (largest part <= max_part), in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None or max_part > n:
        max_part = n

    def rec(rem: int, cap: int, prefix: list):
        if rem == 0:
            yield Partition(tuple(prefix))
            return
        for p in range(min(rem, cap), 0, -1):
            prefix.append(p)
            yield from rec(rem - p, p, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def enumerate_gap_partitions(max_size: int, max_part: int | None = None,
                             min_part: int = 1) -> Iterator[Partition]:
    """Level 3 gap partitions of size < max_size, pruned by the pairwise rule."""
    top = max_size - 1 if max_part is None else min(max_part, max_size - 1)

    def rec(rem: int, prev: int | None, prefix: list):
        yield Partition(tuple(prefix))
        hi = rem if prev is None else min(rem, prev - 2)
        for p in range(hi, min_part - 1, -1):
            if prev is None or _gap_ok(prev, p):
                prefix.append(p)
                yield from rec(rem - p, p, prefix)
                prefix.pop()

    if max_size <= 0:
        return
    yield Partition(())
    for p in range(top, min_part - 1, -1):
        yield from rec(max_size - 1 - p, p, [p])


@lru_cache(maxsize=None)
def _gap_count(rem: int, prev: int, m: int) -> int:
    # gap partitions of rem, parts >= m, largest part compatible with prev (0 = none)
    if rem == 0:
        return 1
    hi = rem if prev == 0 else min(rem, prev - 2)
    return sum(_gap_count(rem - p, p, m) for p in range(m, hi + 1)
               if prev == 0 or _gap_ok(prev, p))


def count_cm(m: int, n: int) -> int:
    """Level 3 gap partitions of n with every part >= m."""
    if n < 0:
        return 0
    return _gap_count(n, 0, max(m, 1))


def count_c2star(n: int) -> int:
    """Level 3 gap partitions of n not containing 2, by direct listing."""
    return sum(1 for lam in enumerate_gap_partitions(n + 1)
               if lam.size == n and 2 not in lam.parts)


def count_dj(j: int, n: int) -> int:
    """Partitions of n into distinct parts none of which is +-j mod 6."""
    if j not in (1, 2):
        raise ValueError("j must be 1 or 2")
    if n < 0:
        return 0
    banned = {j % 6, (-j) % 6}
    ways = [1] + [0] * n
    for p in range(1, n + 1):
        if p % 6 in banned:
            continue
        for s in range(n, p - 1, -1):
            ways[s] += ways[s - p]
    return ways[n]


def partition_number(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence."""
    p = [1] + [0] * max(n, 0)
    for k in range(1, n + 1):
        total, i = 0, 1
        while True:
            g1 = i * (3 * i - 1) // 2
            if g1 > k:
                break
            sign = 1 if i % 2 else -1
            total += sign * p[k - g1]
            g2 = i * (3 * i + 1) // 2
            if g2 <= k:
                total += sign * p[k - g2]
            i += 1
        p[k] = total
    return p[n] if n >= 0 else 0


def brute_force_series(cfg: GapConfig, max_part: int | None, order: int) -> QSeries:
    """Sum of weight * t^(nu1 - nu2) q^|lambda| over gap partitions with parts <= max_part."""
    if order < 1:
        raise ValueError("order must be >= 1")
    terms = []
    for lam in enumerate_gap_partitions(order, max_part):
        if not is_level3_gap(lam):
            raise AssertionError(f"enumerator produced a non-gap partition {lam}")
        w = cfg.weight(lam)
        if w:
            terms.append((w, lam.t_statistic, lam.size))
    return QSeries.from_terms(terms, order)


def count_series(counts: list[int]) -> QSeries:
    """Univariate series from an integer sequence."""
    return QSeries(counts, 0, len(counts))
