"""Level-one modular forms as exact q-expansions: Eisenstein series,
Delta, Hecke operators, rational eigenforms and the 691 congruence."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .exactnum import bernoulli, is_prime, zeta_even_over_pi
from .lattice import EigenSystem

ONE_DIM_CUSP_WEIGHTS = (12, 16, 18, 20, 22, 26)


@dataclass(frozen=True)
class QSeries:
    """a_0 + a_1 q + ... + a_B q^B (known up to O(q^{B+1}))."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a q-series needs at least one coefficient")

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n > self.precision:
            raise IndexError(f"coefficient {n} beyond precision {self.precision}")
        return self.coeffs[n]

    def truncate(self, b: int) -> "QSeries":
        if b > self.precision:
            raise ValueError("cannot raise precision by truncation")
        return QSeries(self.coeffs[: b + 1])

    def __add__(self, other):
        b = min(self.precision, other.precision)
        return QSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(b + 1)))

    def __sub__(self, other):
        b = min(self.precision, other.precision)
        return QSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(b + 1)))

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries(tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        b = min(self.precision, other.precision)
        out = [Fraction(0)] * (b + 1)
        for i, x in enumerate(self.coeffs[: b + 1]):
            if not x:
                continue
            for j in range(b + 1 - i):
                y = other.coeffs[j]
                if y:
                    out[i + j] += x * y
        return QSeries(tuple(out))

    __rmul__ = scale

    def __pow__(self, n: int):
        result = QSeries((Fraction(1),) + (Fraction(0),) * self.precision)
        for _ in range(n):
            result = result * self
        return result

    def valuation(self):
        return next((n for n, a in enumerate(self.coeffs) if a), None)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def sigma(k: int, n: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            if d * d != n:
                total += (n // d) ** k
        d += 1
    return total


def eisenstein(k: int, b: int) -> QSeries:
    """Normalized E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k < 4 or k % 2:
        raise ValueError(f"Eisenstein series needs even weight >= 4, got {k}")
    if b < 0:
        raise ValueError("precision must be nonnegative")
    c = -Fraction(2 * k) / bernoulli(k)
    return QSeries((Fraction(1),) + tuple(c * sigma(k - 1, n) for n in range(1, b + 1)))


@lru_cache(maxsize=8)
def delta(b: int) -> QSeries:
    if b < 2:
        raise ValueError("Delta needs precision at least 2")
    e4, e6 = eisenstein(4, b), eisenstein(6, b)
    return (e4**3 - e6**2).scale(Fraction(1, 1728))


def ramanujan_tau(n: int, b: int | None = None) -> int:
    series = delta(max(n, b or 0, 2))
    return int(series[n])


def hecke_operator(f: QSeries, weight: int, n: int, target: int | None = None) -> QSeries:
    """T_n f up to q^target; needs f known to q^(n*target)."""
    if n < 1:
        raise ValueError("Hecke index must be positive")
    if target is None:
        target = f.precision // n
    if n * target > f.precision:
        raise ValueError(f"T_{n} to precision {target} needs input precision {n * target}")
    out = []
    for m in range(target + 1):
        total = Fraction(0)
        for d in range(1, min(m, n) + 1 if m else n + 1):
            if n % d or (m and m % d):
                continue
            total += Fraction(d) ** (weight - 1) * f[m * n // (d * d)]
        out.append(total)
    return QSeries(tuple(out))


def modular_basis(weight: int, b: int) -> list[QSeries]:
    """Echelon basis of M_k from monomials E4^a E6^b (leading terms q^0, q^1, ...)."""
    if weight < 0 or weight % 2 or weight == 2:
        return []
    monomials = []
    for a in range(weight // 4 + 1):
        rest = weight - 4 * a
        if rest % 6 == 0:
            monomials.append(eisenstein(4, b) ** a * eisenstein(6, b) ** (rest // 6))
    rows, pivots = linalg.rref([list(m.coeffs) for m in monomials])
    if pivots != list(range(len(rows))):
        raise ArithmeticError("monomial basis is not in echelon position; raise precision")
    return [QSeries(tuple(r)) for r in rows]


def cusp_dimension(weight: int) -> int:
    return max(len(modular_basis(weight, 2 + weight // 12)) - 1, 0)


def coordinates_in(basis: list[QSeries], f: QSeries):
    b = min(f.precision, *(g.precision for g in basis))
    return linalg.coordinates([list(g.coeffs[: b + 1]) for g in basis], list(f.coeffs[: b + 1]))


@dataclass
class HeckeEigenSystem:
    weight: int
    coefficients: tuple  # a_1..a_B

    @property
    def bound(self) -> int:
        return len(self.coefficients)

    def a(self, n: int) -> int:
        return self.coefficients[n - 1]

    def check_multiplicative(self) -> bool:
        from math import gcd

        b = self.bound
        for m in range(2, b + 1):
            for n in range(2, b // m + 1):
                if gcd(m, n) == 1 and self.a(m * n) != self.a(m) * self.a(n):
                    return False
        return True

    def check_prime_power_recursion(self) -> bool:
        b = self.bound
        for p in range(2, b + 1):
            if not is_prime(p):
                continue
            prev, cur = 1, self.a(p)
            q = p * p
            while q <= b:
                nxt = self.a(p) * cur - p ** (self.weight - 1) * prev
                if self.a(q) != nxt:
                    return False
                prev, cur = cur, nxt
                q *= p
        return True

    def to_eigensystem(self) -> EigenSystem:
        return EigenSystem([1, 0], {f"T_{n}": [self.a(n)] for n in range(1, self.bound + 1)})


def cusp_eigensystems(weight: int, b: int) -> HeckeEigenSystem:
    """The normalized eigenform of a weight with one-dimensional S_k."""
    if weight not in ONE_DIM_CUSP_WEIGHTS:
        raise ValueError(f"S_{weight}(SL2(Z)) is not one-dimensional")
    work = 2 * b
    basis = modular_basis(weight, work)
    if len(basis) != 2:
        raise ArithmeticError("expected a two-dimensional M_k")
    cusp = basis[1]  # echelon: a_0 = 0, a_1 = 1
    if cusp[0] != 0 or cusp[1] != 1:
        raise ArithmeticError("echelon cusp form is not normalized")
    t2 = hecke_operator(cusp, weight, 2, b)
    coords = coordinates_in([g.truncate(b) for g in basis], t2)
    if coords is None or coords[0] != 0:
        raise ArithmeticError("T_2 does not preserve the cusp space")
    lam = coords[1]
    if lam != cusp[2]:
        raise ArithmeticError("cusp form is not a T_2 eigenvector")
    coeffs = tuple(int(cusp[n]) for n in range(1, b + 1))
    if any(Fraction(c) != cusp[n] for n, c in enumerate(coeffs, 1)):
        raise ArithmeticError("non-integral eigenvalue")
    system = HeckeEigenSystem(weight, coeffs)
    if not (system.check_multiplicative() and system.check_prime_power_recursion()):
        raise ArithmeticError("Hecke relations fail")
    return system


def eisenstein_eigensystem(weight: int, b: int) -> HeckeEigenSystem:
    """T_n acts on E_k by sigma_{k-1}(n)."""
    return HeckeEigenSystem(weight, tuple(sigma(weight - 1, n) for n in range(1, b + 1)))


def eisenstein_congruence_demo(b: int = 200) -> tuple[int, int]:
    if b < 50:
        raise ValueError("demo range must be at least 50")
    q = zeta_even_over_pi(12).numerator
    if q != 691:
        raise ArithmeticError(f"numerator of zeta(12)/pi^12 is {q}")
    tau = delta(b)
    for n in range(1, b + 1):
        if (tau[n] - sigma(11, n)) % q:
            raise ArithmeticError(f"tau({n}) is not congruent to sigma_11({n}) mod {q}")
    return q, b
