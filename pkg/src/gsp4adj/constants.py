"""Archimedean constants attached to the adjoint L-value formula: the
quadruple sum C'_{k,k'}, its closed form C_{k,k'}, level factors, the
Petersson constant and the assembled discriminant constant.

All results are exact; pi-dependence is carried by :class:`PiQuantity`.
L(1, Pi, Ad) and the Petersson norm are treated as formal units.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial

from .exactnum import (
    PiQuantity,
    is_prime,
    pochhammer,
    prime_divisors,
    reciprocal_factorial,
    xi_even,
    zeta_even_over_pi,
)

ALTERNATION = (Fraction(-1), Fraction(-1, 4), Fraction(1, 72), Fraction(-1, 72), Fraction(-1, 576))


@dataclass(frozen=True)
class AlternationTable:
    values: tuple = ALTERNATION

    def weighted_sum(self) -> Fraction:
        """sum_r (-1)^r a_r binom(4,r) (r!)^2, equal to 4/3."""
        return sum(
            ((-1) ** r * a * comb(4, r) * factorial(r) ** 2 for r, a in enumerate(self.values)),
            Fraction(0),
        )


@dataclass(frozen=True)
class LevelFactor:
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be a positive integer")
        primes = prime_divisors(self.level)
        prod = 1
        for l in primes:
            prod *= l
        if prod != self.level:
            raise ValueError(f"level {self.level} is not square-free")

    @property
    def primes(self) -> list[int]:
        return prime_divisors(self.level)


def _level(n) -> LevelFactor:
    return n if isinstance(n, LevelFactor) else LevelFactor(int(n))


def _check_weight(k: int, kprime: int) -> int:
    if not (isinstance(k, int) and isinstance(kprime, int)) or not k >= kprime >= 0:
        raise ValueError(f"need integers k >= k' >= 0, got ({k}, {kprime})")
    return k + kprime


# ---------------------------------------------------------------------------
# coefficients


@dataclass(frozen=True)
class CoefficientTriple:
    r_val: Fraction
    s_val: Fraction
    t_val: Fraction


def r_coeff(d: int, i: int, u: int, r: int) -> Fraction:
    # 1/n! is taken to vanish at negative n; this happens for the shifted
    # index i - u + u' > d and kills exactly the terms the Pochhammer form drops.
    return (
        Fraction(factorial(d + u - i) * factorial(d + 4 - i) * factorial(i + r - u))
        * reciprocal_factorial(i - u)
        * reciprocal_factorial(d - i)
        * reciprocal_factorial(d + 4 - i - r + u)
    )


def s_coeff(d: int, i: int, u: int) -> Fraction:
    return factorial(i - u) * reciprocal_factorial(d - i + u)


def t_coeff(d: int, i: int, u: int, r: int) -> Fraction:
    return factorial(d + 4 + u - r - i) * reciprocal_factorial(i + r - u)


def coefficient_triple(k: int, kprime: int, i: int, u: int, r: int) -> CoefficientTriple:
    d = _check_weight(k, kprime)
    if not (0 <= i <= d and 0 <= r <= 4 and 0 <= u <= r and i >= u):
        raise ValueError("index outside the summation range")
    return CoefficientTriple(r_coeff(d, i, u, r), s_coeff(d, i, u), t_coeff(d, i, u, r))


def _prefactor(d: int) -> Fraction:
    return Fraction((-1) ** d * factorial(d) * factorial(d + 4), factorial(3) ** 2)


def pointwise_sides(d: int, i: int, u: int, up: int, r: int) -> tuple[Fraction, Fraction]:
    """Both sides of r r s t = (d-i+1)_4 (d-i+u-u'+1)_4 (i-u+1)_r / (d-i+u+1)_{4-r}."""
    lhs = r_coeff(d, i, u, r) * r_coeff(d, i - u + up, up, r) * s_coeff(d, i, u) * t_coeff(d, i, u, r)
    rhs = (
        pochhammer(d - i + 1, 4)
        * pochhammer(d - i + u - up + 1, 4)
        * pochhammer(i - u + 1, r)
        / pochhammer(d - i + u + 1, 4 - r)
    )
    return lhs, rhs


@lru_cache(maxsize=None)
def _cprime_constrained(d: int) -> Fraction:
    total = Fraction(0)
    for r in range(5):
        a = ALTERNATION[r]
        for i in range(d + 1):
            for u in range(min(r, i) + 1):
                for up in range(r + 1):
                    total += (
                        (-1) ** (r + u + up)
                        * a
                        * comb(r, u)
                        * comb(r, up)
                        * r_coeff(d, i, u, r)
                        * r_coeff(d, i - u + up, up, r)
                        * s_coeff(d, i, u)
                        * t_coeff(d, i, u, r)
                    )
    return _prefactor(d) * total


@lru_cache(maxsize=None)
def _pochhammer_form(d: int) -> Fraction:
    total = Fraction(0)
    for r in range(5):
        a = ALTERNATION[r]
        for i in range(d + 1):
            for u in range(r + 1):
                for up in range(r + 1):
                    total += (
                        (-1) ** (r + u + up)
                        * a
                        * comb(r, u)
                        * comb(r, up)
                        * pochhammer(d - i + 1, 4)
                        * pochhammer(d - i + u - up + 1, 4)
                        * pochhammer(i - u + 1, r)
                        / pochhammer(d - i + u + 1, 4 - r)
                    )
    return _prefactor(d) * total


def cprime(k: int, kprime: int) -> Fraction:
    """C'_{k,k'} from the quadruple sum; both index conventions must agree."""
    d = _check_weight(k, kprime)
    value = _cprime_constrained(d)
    if value != _pochhammer_form(d):
        raise ArithmeticError(f"index conventions disagree at d={d}")
    return value


def c_closed(k: int, kprime: int) -> Fraction:
    d = _check_weight(k, kprime)
    return Fraction((-1) ** d * factorial(d + 4) * factorial(d + 5), 3**3 * 5)


def simplification_trace(k: int, kprime: int) -> list[Fraction]:
    """The Pochhammer form, the two collapsed forms, and the closed form.

    Raises if any two differ, or if the pointwise coefficient identity fails.
    """
    d = _check_weight(k, kprime)
    if d > 20:
        raise ValueError("trace is limited to k + k' <= 20")
    for r in range(5):
        for i in range(d + 1):
            for u in range(min(r, i) + 1):
                for up in range(r + 1):
                    lhs, rhs = pointwise_sides(d, i, u, up, r)
                    if lhs != rhs:
                        raise ArithmeticError(f"pointwise identity fails at {(d, i, u, up, r)}")
    pre = _prefactor(d)
    first = _pochhammer_form(d)
    second = pre * sum(
        (
            (-1) ** (r + u) * ALTERNATION[r] * comb(r, u) * comb(4, r) * factorial(r)
            * pochhammer(d - i + 1, 4) * pochhammer(i - u + 1, r)
            for r in range(5)
            for i in range(d + 1)
            for u in range(r + 1)
        ),
        Fraction(0),
    )
    third = pre * sum(
        (
            (-1) ** r * ALTERNATION[r] * comb(4, r) * factorial(r) ** 2 * pochhammer(d - i + 1, 4)
            for r in range(5)
            for i in range(d + 1)
        ),
        Fraction(0),
    )
    weighted = AlternationTable().weighted_sum()
    telescoped = sum((pochhammer(j + 1, 4) for j in range(d + 1)), Fraction(0))
    if telescoped != pochhammer(d + 1, 5) / 5:
        raise ArithmeticError("telescoping sum failed")
    fourth = pre * weighted * telescoped
    closed = c_closed(k, kprime)
    forms = [first, second, third, closed]
    if len(set(forms + [fourth])) != 1:
        raise ArithmeticError(f"simplification forms disagree: {forms + [fourth]}")
    return forms


# ---------------------------------------------------------------------------
# level and Petersson constants


def c_level(n) -> Fraction:
    """C_N = prod_{l | N} (l + 1/l)^{-1} (l^2 + 1)^{-1}."""
    out = Fraction(1)
    for l in _level(n).primes:
        out *= ichino_local_factor(l) / (l * l + 1)
    return out


def ichino_local_factor(l: int) -> Fraction:
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    zeta2 = 1 / (1 - Fraction(1, l**2))
    zeta4 = 1 / (1 - Fraction(1, l**4))
    value = Fraction(1, l) / zeta2 * zeta4
    if value != 1 / (l + Fraction(1, l)):
        raise ArithmeticError(f"local factor identity fails at l={l}")
    return value


def global_zeta_factor() -> PiQuantity:
    """2^2 zeta(2)^{-1} zeta(4)^{-1} = 2^4 3^3 5 pi^-6."""
    z2 = PiQuantity(zeta_even_over_pi(2), 2)
    z4 = PiQuantity(zeta_even_over_pi(4), 4)
    return PiQuantity(4, 0) / z2 / z4


def archimedean_factor(k: int, kprime: int) -> PiQuantity:
    """2^{l1-l2+5} pi^{3 l1 - l2 + 5} / (1 + l1 - l2) at the Blattner weight (k+3, -k'-1)."""
    _check_weight(k, kprime)
    l1, l2 = k + 3, -kprime - 1
    return PiQuantity(Fraction(2 ** (l1 - l2 + 5), 1 + l1 - l2), 3 * l1 - l2 + 5)


def ichino_constant(k: int, kprime: int, n=1) -> PiQuantity:
    """Petersson norm per unit of L(1, Pi, Ad)."""
    d = _check_weight(k, kprime)
    local = Fraction(1)
    for l in _level(n).primes:
        local *= ichino_local_factor(l)
    assembled = global_zeta_factor() * archimedean_factor(k, kprime) * local
    displayed = PiQuantity(Fraction(2 ** (d + 13) * 3**3 * 5, d + 5) * local, 3 * k + kprime + 9)
    if assembled != displayed:
        raise ArithmeticError("Petersson constant assembly mismatch")
    return displayed


def petersson_pairing_constant(k: int, kprime: int, n=1) -> PiQuantity:
    """(pi^3/135) C'_{k,k'} prod_{l | N} (l^2+1)^{-1}, per unit Petersson norm."""
    local = Fraction(1)
    for l in _level(n).primes:
        local /= l * l + 1
    return PiQuantity(Fraction(1, 135) * cprime(k, kprime) * local, 3)


def main1_constant(k: int, kprime: int, n=1) -> PiQuantity:
    d = _check_weight(k, kprime)
    value = PiQuantity(
        Fraction(2 ** (d + 13), d + 5) * c_closed(k, kprime) * c_level(n), 3 * k + kprime + 12
    )
    assembled = petersson_pairing_constant(k, kprime, n) * ichino_constant(k, kprime, n)
    if assembled != value:
        raise ArithmeticError("discriminant constant assembly mismatch")
    return value


def xi(n: int) -> PiQuantity:
    return xi_even(n)


def siegel_volume() -> PiQuantity:
    """2 xi(2) xi(4) = pi^3/270."""
    return PiQuantity(2, 0) * xi_even(2) * xi_even(4)


def constants_report(k: int, kprime: int, n=1) -> dict:
    """Everything the CLI prints for one weight and level."""
    return {
        "k": k,
        "kprime": kprime,
        "level": _level(n).level,
        "C_prime": cprime(k, kprime),
        "C": c_closed(k, kprime),
        "C_N": c_level(n),
        "petersson": petersson_pairing_constant(k, kprime, n),
        "ichino": ichino_constant(k, kprime, n),
        "main1": main1_constant(k, kprime, n),
    }
