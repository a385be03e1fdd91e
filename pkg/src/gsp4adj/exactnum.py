"""Exact scalars: rationals, the field Q(i, sqrt2), pi-monomials, and
the combinatorial primitives used by the constant engine.

Rationals are plain :class:`fractions.Fraction` objects; everything here is
immutable and hashable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

BigRational = Fraction
Scalar = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def fraction_str(x: Fraction) -> str:
    """Always ``num/den``, also for integers (``5/1``)."""
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Q(i, sqrt2)


# (sign, slot) of the product of basis elements 1, i, sqrt2, i*sqrt2
_MUL = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (1, 3), (2, 0), (2, 1)),
    ((1, 3), (-1, 2), (2, 1), (-2, 0)),
)


def _qg(c) -> "QuadGaussian":
    out = QuadGaussian.__new__(QuadGaussian)
    out.c = c
    return out


class QuadGaussian:
    """Element c0 + c1*i + c2*sqrt2 + c3*i*sqrt2 of Q(i, sqrt2)."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (as_fraction(c0), as_fraction(c1), as_fraction(c2), as_fraction(c3))

    @classmethod
    def coerce(cls, x) -> "QuadGaussian":
        if isinstance(x, QuadGaussian):
            return x
        return cls(as_fraction(x))

    @property
    def c0(self):
        return self.c[0]

    @property
    def c1(self):
        return self.c[1]

    @property
    def c2(self):
        return self.c[2]

    @property
    def c3(self):
        return self.c[3]

    def __add__(self, other):
        try:
            o = QuadGaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadGaussian(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return QuadGaussian(*(-a for a in self.c))

    def __sub__(self, other):
        try:
            o = QuadGaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadGaussian(*(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return QuadGaussian.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, QuadGaussian):
            oc = other.c
        elif isinstance(other, (int, Fraction)):
            if not other:
                return QuadGaussian()
            return _qg(tuple(a * other for a in self.c))
        else:
            try:
                oc = QuadGaussian.coerce(other).c
            except TypeError:
                return NotImplemented
        # basis 1, i, sqrt2, i*sqrt2; e_j e_k = _MUL[j][k] = (sign, slot)
        out = [0, 0, 0, 0]
        for j, a in enumerate(self.c):
            if a:
                row = _MUL[j]
                for k, b in enumerate(oc):
                    if b:
                        sign, slot = row[k]
                        out[slot] += sign * a * b
        return _qg(tuple(Fraction(x) for x in out))

    __rmul__ = __mul__

    def conj(self) -> "QuadGaussian":
        """Complex conjugation i -> -i (fixes sqrt2)."""
        c0, c1, c2, c3 = self.c
        return QuadGaussian(c0, -c1, c2, -c3)

    def sqrt2_conj(self) -> "QuadGaussian":
        c0, c1, c2, c3 = self.c
        return QuadGaussian(c0, c1, -c2, -c3)

    def inverse(self) -> "QuadGaussian":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2)")
        # x * sigma(x) lies in Q(i); then multiply by its complex conjugate.
        s = self.sqrt2_conj()
        u = self * s
        w = u.conj()
        n = (u * w).c[0]
        return s * w * QuadGaussian(1 / n)

    def __truediv__(self, other):
        try:
            o = QuadGaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadGaussian.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadGaussian(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = QuadGaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __repr__(self):
        return f"QuadGaussian({', '.join(str(a) for a in self.c)})"

    def __str__(self):
        names = ("", "i", "sqrt2", "i*sqrt2")
        parts = []
        for coeff, name in zip(self.c, names):
            if not coeff:
                continue
            if not name:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(name)
            elif coeff == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{coeff}*{name}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


I = QuadGaussian(0, 1)
SQRT2 = QuadGaussian(0, 0, 1)


# ---------------------------------------------------------------------------
# pi-monomials


@dataclass(frozen=True)
class PiQuantity:
    """Exact monomial ``coeff * pi**pi_exp``."""

    coeff: Fraction
    pi_exp: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_fraction(self.coeff))
        if not isinstance(self.pi_exp, int):
            raise TypeError("pi exponent must be an integer")

    def __mul__(self, other):
        if isinstance(other, PiQuantity):
            return PiQuantity(self.coeff * other.coeff, self.pi_exp + other.pi_exp)
        return PiQuantity(self.coeff * as_fraction(other), self.pi_exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiQuantity):
            return PiQuantity(self.coeff / other.coeff, self.pi_exp - other.pi_exp)
        return PiQuantity(self.coeff / as_fraction(other), self.pi_exp)

    def __pow__(self, n: int):
        return PiQuantity(self.coeff**n, self.pi_exp * n)

    def __add__(self, other):
        if not isinstance(other, PiQuantity):
            return NotImplemented
        if other.pi_exp != self.pi_exp:
            raise ValueError(
                f"cannot add pi^{self.pi_exp} and pi^{other.pi_exp} monomials"
            )
        return PiQuantity(self.coeff + other.coeff, self.pi_exp)

    def __neg__(self):
        return PiQuantity(-self.coeff, self.pi_exp)

    def __sub__(self, other):
        return self + (-other)

    def to_json(self) -> dict:
        return {"coeff": fraction_str(self.coeff), "pi_exp": self.pi_exp}

    @classmethod
    def from_json(cls, data: dict) -> "PiQuantity":
        return cls(as_fraction(data["coeff"]), int(data["pi_exp"]))

    def approx(self, digits: int = 30) -> str:
        import mpmath

        with mpmath.workdps(digits + 5):
            value = mpmath.mpf(self.coeff.numerator) / self.coeff.denominator
            value *= mpmath.pi**self.pi_exp
            return mpmath.nstr(value, digits)

    def __str__(self):
        if self.pi_exp == 0:
            return str(self.coeff)
        return f"({self.coeff})*pi^{self.pi_exp}"


# ---------------------------------------------------------------------------
# p-adic valuations


INF = math.inf


@dataclass(frozen=True)
class LocalValuation:
    prime: int
    value: float  # int, or math.inf for zero

    @classmethod
    def of(cls, x, p: int) -> "LocalValuation":
        return cls(p, valuation(x, p))


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x, p: int):
    """p-adic valuation of a rational; ``math.inf`` for 0."""
    x = as_fraction(x)
    if x == 0:
        return INF
    return _int_valuation(abs(x.numerator), p) - _int_valuation(x.denominator, p)


def p_part(x, p: int) -> int:
    return p ** valuation(x, p)


def is_p_integral(x, p: int) -> bool:
    return as_fraction(x).denominator % p != 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    r = math.isqrt(n)
    f = 3
    while f <= r:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, math.isqrt(n) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(sieve[q * q :: q]))
    return [q for q in range(n + 1) if sieve[q]]


def prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# combinatorics


factorial = math.factorial
binomial = math.comb


def reciprocal_factorial(n: int) -> Fraction:
    """1/n!, extended by 0 at negative n (poles of Gamma)."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(n))


def pochhammer(x: int, n: int) -> Fraction:
    """Rising factorial x(x+1)...(x+n-1)."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    prod = 1
    for j in range(n):
        prod *= x + j
    return Fraction(prod)


def pochhammer_identity_sides(b: int, l: int, m: int) -> tuple[Fraction, Fraction]:
    if not 0 <= l <= m:
        raise ValueError("need 0 <= l <= m")
    lhs = sum(
        ((-1) ** a * binomial(l, a) * pochhammer(b - a, m) for a in range(l + 1)),
        Fraction(0),
    )
    rhs = binomial(m, l) * factorial(l) * pochhammer(b, m - l)
    return lhs, rhs


def pochhammer_identity_check(b: int, l: int, m: int) -> bool:
    lhs, rhs = pochhammer_identity_sides(b, l, m)
    return lhs == rhs


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum((binomial(m + 1, k) * table[k] for k in range(m)), Fraction(0))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("bernoulli index must be nonnegative")
    return _bernoulli_table(n)[n]


def zeta_even_over_pi(n: int) -> Fraction:
    """zeta(n)/pi^n for even n >= 2."""
    if n < 2 or n % 2:
        raise ValueError(f"zeta(n)/pi^n is rational only for even n >= 2, got {n}")
    sign = 1 if (n // 2) % 2 == 1 else -1
    return sign * bernoulli(n) * 2 ** (n - 1) / factorial(n)


def gamma_int(n: int) -> int:
    """Gamma at a positive integer."""
    if n < 1:
        raise ValueError("Gamma is only provided at positive integers")
    return factorial(n - 1)


def xi_even(n: int) -> PiQuantity:
    """Completed zeta pi^(-n/2) Gamma(n/2) zeta(n) for even n >= 2."""
    return PiQuantity(gamma_int(n // 2) * zeta_even_over_pi(n), n - n // 2)
