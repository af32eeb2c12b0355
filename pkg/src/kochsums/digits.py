"""Digit sums, the Thue-Morse function, and exact root-of-unity terms.

The central object is the unit eta_p^a * eta_q^b (eta_m = exp(2*pi*i/m)),
kept as an exact exponent pair so that equality tests never touch floating
point.  The term of index n is u(n) = eta_p^{s_p(n)} * eta_q^n where s_p is
the base-p digit sum; for (p, q) = (2, 3) this is the signed Thue-Morse
power of j that drives the Koch-type curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError

__all__ = [
    "GroupElement",
    "digit_sum",
    "digit_sum_array",
    "thue_morse",
    "u_term",
    "euler_phi",
    "mult_order",
    "roots_of_unity",
]


@lru_cache(maxsize=64)
def roots_of_unity(m: int) -> tuple[complex, ...]:
    """The m-th roots of unity (exp(2*pi*i*k/m) for k < m).

    Built with explicit conjugate symmetry: the root for exponent m - k is
    the exact conjugate of the one for k, and exponents 0 and m/2 are the
    exact reals 1 and -1.  Sums that are real by symmetry then evaluate
    with a floating imaginary part of exactly zero.
    """
    if m < 1:
        raise DomainError(f"roots_of_unity needs m >= 1, got {m}")
    roots = [complex(1.0, 0.0)] * m
    for k in range(1, m // 2 + 1):
        theta = 2.0 * math.pi * k / m
        z = complex(math.cos(theta), math.sin(theta))
        if 2 * k == m:
            z = complex(-1.0, 0.0)
        roots[k] = z
        roots[m - k] = z.conjugate()
    return tuple(roots)


@dataclass(frozen=True, slots=True)
class GroupElement:
    """A unit eta_p^a * eta_q^b held as exponents modulo (p, q)."""

    a: int
    b: int
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise DomainError(f"GroupElement needs p, q >= 2, got ({self.p}, {self.q})")
        if not (0 <= self.a < self.p and 0 <= self.b < self.q):
            raise DomainError(
                f"exponents ({self.a}, {self.b}) out of range for (p, q) = ({self.p}, {self.q})"
            )

    @classmethod
    def one(cls, p: int, q: int) -> GroupElement:
        return cls(0, 0, p, q)

    def __mul__(self, other: GroupElement) -> GroupElement:
        if (self.p, self.q) != (other.p, other.q):
            raise DomainError("cannot multiply units with different (p, q)")
        return GroupElement((self.a + other.a) % self.p, (self.b + other.b) % self.q, self.p, self.q)

    def conjugate(self) -> GroupElement:
        """Complex conjugate: negate both exponents.

        For p = 2 the sign part is real, so this is exactly the swap of
        eta_q^b with eta_q^{q-b} (j with j^2 when q = 3).
        """
        return GroupElement((-self.a) % self.p, (-self.b) % self.q, self.p, self.q)

    def to_complex(self) -> complex:
        return roots_of_unity(self.p)[self.a] * roots_of_unity(self.q)[self.b]

    def __str__(self) -> str:
        if self.p != 2:
            return f"e({self.a}/{self.p})e({self.b}/{self.q})"
        sign = "-" if self.a else ""
        sym = "j" if self.q == 3 else "w"
        if self.b == 0:
            return sign + "1"
        if self.b == 1:
            return sign + sym
        return f"{sign}{sym}^{self.b}"


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n (arbitrary-precision n)."""
    if p < 2:
        raise DomainError(f"digit_sum needs base p >= 2, got {p}")
    if n < 0:
        raise DomainError(f"digit_sum needs n >= 0, got {n}")
    if p == 2:
        return n.bit_count()
    total = 0
    while n:
        n, r = divmod(n, p)
        total += r
    return total


def digit_sum_array(values: np.ndarray, p: int) -> np.ndarray:
    """Base-p digit sums of an int64 array, computed digit layer by layer."""
    if p < 2:
        raise DomainError(f"digit_sum_array needs base p >= 2, got {p}")
    t = np.array(values, dtype=np.int64, copy=True)
    if t.size and t.min() < 0:
        raise DomainError("digit_sum_array needs nonnegative values")
    s = np.zeros_like(t)
    while t.any():
        s += t % p
        t //= p
    return s


def thue_morse(n: int) -> int:
    """n-th Thue-Morse bit: the parity of the binary digit sum of n."""
    if n < 0:
        raise DomainError(f"thue_morse needs n >= 0, got {n}")
    return n.bit_count() & 1


def u_term(n: int, p: int, q: int) -> GroupElement:
    """The unit eta_p^{s_p(n)} * eta_q^n as an exact exponent pair."""
    if n < 0:
        raise DomainError(f"u_term needs n >= 0, got {n}")
    return GroupElement(digit_sum(n, p) % p, n % q, p, q)


def euler_phi(q: int) -> int:
    """Euler's totient of q."""
    if q < 1:
        raise DomainError(f"euler_phi needs q >= 1, got {q}")
    result = q
    m = q
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def mult_order(p: int, q: int) -> int | None:
    """Least L >= 1 with p^L = 1 (mod q), or None when gcd(p, q) != 1."""
    if p < 2 or q < 2:
        raise DomainError(f"mult_order needs p, q >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        return None
    acc = p % q
    order = 1
    while acc != 1:
        acc = (acc * p) % q
        order += 1
    return order
