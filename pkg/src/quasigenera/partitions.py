"""Integer partitions, cycle-index polynomials and partition weights.

A partition is stored by its multiplicity vector ``(m_1, m_2, ...)`` where
``m_j`` counts the parts equal to ``j``. Trailing zeros are stripped so that
equal partitions hash equally.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Union

from .arith import bernoulli

__all__ = [
    "Partition",
    "PhiKind",
    "PhiFunction",
    "cycle_index",
    "enumerate_partitions",
    "partition_count",
    "phi_eval",
    "z_lambda",
]


@dataclass(frozen=True, order=False)
class Partition:
    mult: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        m = tuple(int(x) for x in self.mult)
        if any(x < 0 for x in m):
            raise ValueError(f"negative multiplicity in {m}")
        while m and m[-1] == 0:
            m = m[:-1]
        object.__setattr__(self, "mult", m)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        parts = list(parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers, got {parts}")
        mult = [0] * (max(parts, default=0))
        for p in parts:
            mult[p - 1] += 1
        return cls(tuple(mult))

    @property
    def parts(self) -> tuple[int, ...]:
        """Parts in nonincreasing order."""
        out: list[int] = []
        for j in range(len(self.mult), 0, -1):
            out.extend([j] * self.mult[j - 1])
        return tuple(out)

    @property
    def weight(self) -> int:
        return sum(j * m for j, m in enumerate(self.mult, start=1))

    @property
    def length(self) -> int:
        return sum(self.mult)

    def multiplicity(self, j: int) -> int:
        return self.mult[j - 1] if 1 <= j <= len(self.mult) else 0

    def items(self) -> Iterator[tuple[int, int]]:
        """Pairs (j, m_j) with m_j > 0, j ascending."""
        for j, m in enumerate(self.mult, start=1):
            if m:
                yield j, m

    def __add__(self, other: Partition) -> Partition:
        """Union of parts (multiplicities add); this is monomial multiplication."""
        n = max(len(self.mult), len(other.mult))
        a = self.mult + (0,) * (n - len(self.mult))
        b = other.mult + (0,) * (n - len(other.mult))
        return Partition(tuple(x + y for x, y in zip(a, b)))

    def sort_key(self) -> tuple[int, ...]:
        """Key for reverse-lexicographic order: sort with ``reverse=True``."""
        return self.parts

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


def enumerate_partitions(k: int) -> list[Partition]:
    """All partitions of ``k`` in reverse-lexicographic order of their parts."""
    if k < 0:
        raise ValueError(f"cannot partition a negative integer {k}")
    return list(_partitions_cached(k))


@lru_cache(maxsize=None)
def _partitions_cached(k: int) -> tuple[Partition, ...]:
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition.from_parts(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(k, k, [])
    return tuple(out)


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """p(k) via Euler's pentagonal recurrence."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    total = 0
    i = 1
    while True:
        g1 = i * (3 * i - 1) // 2
        if g1 > k:
            break
        sign = 1 if i % 2 else -1
        total += sign * partition_count(k - g1)
        g2 = i * (3 * i + 1) // 2
        if g2 <= k:
            total += sign * partition_count(k - g2)
        i += 1
    return total


def z_lambda(lam: Partition) -> int:
    """Centralizer order 1^{m_1} m_1! 2^{m_2} m_2! ... ."""
    out = 1
    for j, m in lam.items():
        out *= j**m * math.factorial(m)
    return out


def cycle_index(k: int) -> dict[Partition, Fraction]:
    """Cycle index Z(S_k) as a map from cycle type to the coefficient of x_lambda.

    The coefficient of x_1^{m_1} x_2^{m_2} ... is 1/z_lambda.
    """
    return {lam: Fraction(1, z_lambda(lam)) for lam in enumerate_partitions(k)}


class PhiKind(str, enum.Enum):
    AHAT = "ahat"
    L = "l"
    U = "u"
    ABS_U = "absu"


# per-part factor a_j; phi(lambda) = prod_j a_j^{m_j} / m_j!
def _ahat_factor(j: int) -> Fraction:
    return Fraction(-1, math.factorial(2 * j))


def _l_factor(j: int) -> Fraction:
    return Fraction(4**j * (4**j - 2), math.factorial(2 * j))


def _u_factor(j: int) -> Fraction:
    return bernoulli(2 * j) / (2 * j * math.factorial(2 * j))


def _abs_u_factor(j: int) -> Fraction:
    return abs(_u_factor(j))


_PART_FACTORS: dict[PhiKind, Callable[[int], Fraction]] = {
    PhiKind.AHAT: _ahat_factor,
    PhiKind.L: _l_factor,
    PhiKind.U: _u_factor,
    PhiKind.ABS_U: _abs_u_factor,
}

PhiFunction = Callable[[Partition], Fraction]


def multiplicative_phi(part_factor: Callable[[int], Fraction]) -> PhiFunction:
    """Build phi(lambda) = prod_j part_factor(j)^{m_j} / m_j!.

    This is the library-level extension point for weights other than the
    built-in kinds.
    """

    def phi(lam: Partition) -> Fraction:
        out = Fraction(1)
        for j, m in lam.items():
            out *= part_factor(j) ** m / math.factorial(m)
        return out

    return phi


def phi_eval(kind: Union[PhiKind, str, PhiFunction], lam: Partition) -> Fraction:
    """Evaluate a partition weight at ``lam``.

    ``kind`` is a :class:`PhiKind` (or its string value) or any callable on
    partitions.
    """
    if callable(kind) and not isinstance(kind, (PhiKind, str)):
        return Fraction(kind(lam))
    factor = _PART_FACTORS[PhiKind(kind)]
    return multiplicative_phi(factor)(lam)
