"""Lattices over Z_(p) inside Q^n, Gram discriminants, duals, the
split/project duality, square classes, and congruence primes between two
Hecke eigen systems.

Vectors are rows; a lattice is the Z_(p)-span of the rows of its basis.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg
from .exactnum import as_fraction, fraction_str, is_prime, prime_divisors, valuation


def _frac_matrix(rows) -> list[list[Fraction]]:
    return [[as_fraction(x) for x in row] for row in rows]


def _is_integral(x: Fraction, p: int) -> bool:
    return x.denominator % p != 0


# ---------------------------------------------------------------------------
# Smith form over Z_(p)


def smith_zp(a, p: int):
    """Return (valuations, vinv) with a = u^{-1} diag(p^v) vinv for some
    u, vinv invertible over Z_(p). Zero rows of the diagonal are omitted
    from ``valuations``; vinv is n x n."""
    m = [list(r) for r in _frac_matrix(a)]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    vinv = linalg.identity(ncols)
    vals = []
    for t in range(min(nrows, ncols)):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if m[i][j]:
                    v = valuation(m[i][j], p)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        v, i, j = best
        m[t], m[i] = m[i], m[t]
        if j != t:
            for row in m:
                row[t], row[j] = row[j], row[t]
            vinv[t], vinv[j] = vinv[j], vinv[t]
        pivot = m[t][t]
        for i in range(t + 1, nrows):
            if m[i][t]:
                f = m[i][t] / pivot
                m[i] = [x - f * y for x, y in zip(m[i], m[t])]
        for j in range(t + 1, ncols):
            if m[t][j]:
                f = m[t][j] / pivot
                for row in m:
                    row[j] -= f * row[t]
                # column op A -> A E, E = I - f e_t e_j^T; vinv -> E^{-1} vinv
                vinv[t] = [x + f * y for x, y in zip(vinv[t], vinv[j])]
        # row t now has the single entry pivot = unit * p^v; fold the unit into vinv
        unit = pivot / Fraction(p) ** v
        vinv[t] = [x * unit for x in vinv[t]]
        m[t][t] = Fraction(p) ** v
        vals.append(v)
    return vals, vinv


def zp_row_basis(rows, p: int) -> list[list[Fraction]]:
    """A Z_(p)-basis of the module generated by the given rows."""
    vals, vinv = smith_zp(rows, p)
    return [[Fraction(p) ** v * x for x in vinv[i]] for i, v in enumerate(vals)]


def saturate(rows, p: int) -> list[list[Fraction]]:
    """Basis of (Q-span of rows) intersected with Z_(p)^n."""
    vals, vinv = smith_zp(rows, p)
    return [list(vinv[i]) for i in range(len(vals))]


def same_lattice(a, b, p: int) -> bool:
    """Equality of two Z_(p)-lattices given by independent rows."""
    if len(a) != len(b):
        return False
    a, b = _frac_matrix(a), _frac_matrix(b)
    for src, dst in ((a, b), (b, a)):
        for v in src:
            c = linalg.coordinates(dst, v)
            if c is None or not all(_is_integral(x, p) for x in c):
                return False
    return True


# ---------------------------------------------------------------------------
# domain types


@dataclass
class BilinearForm:
    gram: list
    alternating: bool = False

    def __post_init__(self):
        self.gram = _frac_matrix(self.gram)
        n = len(self.gram)
        if any(len(r) != n for r in self.gram):
            raise ValueError("Gram matrix must be square")
        sign = -1 if self.alternating else 1
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != sign * self.gram[j][i]:
                    kind = "alternating" if self.alternating else "symmetric"
                    raise ValueError(f"Gram matrix is not {kind}")

    @property
    def dimension(self) -> int:
        return len(self.gram)

    def pair(self, x, y) -> Fraction:
        return linalg._dot(linalg.vecmat(x, self.gram), y) if any(x) and any(y) else Fraction(0)

    def gram_of(self, rows):
        return linalg.matmul(linalg.matmul(rows, self.gram), linalg.transpose(rows))

    def is_nondegenerate(self) -> bool:
        return linalg.det(self.gram) != 0


@dataclass
class LatticeZp:
    prime: int
    basis: list

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        self.basis = _frac_matrix(self.basis)
        n = len(self.basis)
        if n == 0 or any(len(r) != n for r in self.basis):
            raise ValueError("lattice basis must be a nonempty square matrix")
        if linalg.det(self.basis) == 0:
            raise ValueError("lattice basis is singular")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @classmethod
    def standard(cls, p: int, n: int) -> "LatticeZp":
        return cls(p, linalg.identity(n))

    def coordinates(self, x) -> list[Fraction]:
        return linalg.solve(linalg.transpose(self.basis), _frac_matrix([x])[0])

    def contains(self, x) -> bool:
        return all(_is_integral(c, self.prime) for c in self.coordinates(x))

    def contains_lattice(self, other: "LatticeZp") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, LatticeZp) or other.prime != self.prime:
            return NotImplemented
        return self.contains_lattice(other) and other.contains_lattice(self)


# ---------------------------------------------------------------------------
# discriminants and duals


def _check_dims(lat: LatticeZp, form: BilinearForm):
    if lat.dimension != form.dimension:
        raise ValueError("lattice and form have different dimensions")


def lattice_gram(lat: LatticeZp, form: BilinearForm):
    _check_dims(lat, form)
    return form.gram_of(lat.basis)


def gram_discriminant(lat: LatticeZp, form: BilinearForm) -> Fraction:
    g = lattice_gram(lat, form)
    for i, row in enumerate(g):
        for j, x in enumerate(row):
            if not _is_integral(x, lat.prime):
                raise ValueError(f"pairing of basis vectors {i},{j} is not {lat.prime}-integral: {x}")
    return linalg.det(g)


def dual_lattice(lat: LatticeZp, form: BilinearForm) -> LatticeZp:
    g = lattice_gram(lat, form)
    if linalg.det(g) == 0:
        raise ValueError("bilinear form is degenerate")
    # rows x with x S b^T = delta: x = G^{-1} B
    return LatticeZp(lat.prime, linalg.matmul(linalg.inverse(g), lat.basis))


def elementary_divisors(lat: LatticeZp, form: BilinearForm) -> list[int]:
    """Exponents of the elementary divisors of L* / L."""
    dual = dual_lattice(lat, form)
    if not dual.contains_lattice(lat):
        raise ValueError("lattice is not contained in its dual")
    # L = T L*, T = B (B*)^{-1}
    t = linalg.matmul(lat.basis, linalg.inverse(dual.basis))
    vals, _ = smith_zp(t, lat.prime)
    return vals


def dual_index(lat: LatticeZp, form: BilinearForm) -> int:
    return lat.prime ** sum(elementary_divisors(lat, form))


def is_self_dual(lat: LatticeZp, form: BilinearForm) -> bool:
    return dual_lattice(lat, form) == lat


# ---------------------------------------------------------------------------
# split / project duality


@dataclass
class SplitReport:
    projection: list
    intersection: list
    dual_in_w1: list
    holds: bool


def _check_splitter(e, form: BilinearForm):
    n = form.dimension
    if len(e) != n or any(len(r) != n for r in e):
        raise ValueError("splitter has the wrong size")
    if linalg.matmul(e, e) != e:
        raise ValueError("splitter is not idempotent")
    one_minus = [[Fraction(int(i == j)) - e[i][j] for j in range(n)] for i in range(n)]
    cross = linalg.matmul(linalg.matmul(e, form.gram), linalg.transpose(one_minus))
    if any(x for row in cross for x in row):
        raise ValueError("splitting is not orthogonal")


def split_project_report(lat: LatticeZp, form: BilinearForm, e) -> SplitReport:
    e = _frac_matrix(e)
    _check_dims(lat, form)
    _check_splitter(e, form)
    if not is_self_dual(lat, form):
        raise ValueError("lattice is not self-dual")
    p = lat.prime
    n = lat.dimension
    w1 = linalg.row_space_basis(e)
    if not w1:
        return SplitReport([], [], [], True)
    projection = zp_row_basis(linalg.matmul(lat.basis, e), p)
    annihilator = linalg.transpose(linalg.nullspace(w1)) if len(w1) < n else []
    if annihilator:
        # c B lies in W1 iff c (B C^T) = 0 where the columns of C^T cut out W1
        m = linalg.matmul(lat.basis, annihilator)
        kernel = linalg.nullspace(linalg.transpose(m))
    else:
        kernel = linalg.identity(n)
    coeffs = saturate(kernel, p)
    inter = linalg.matmul(coeffs, lat.basis)
    g = form.gram_of(inter)
    dual_in_w1 = linalg.matmul(linalg.inverse(g), inter)
    holds = same_lattice(projection, dual_in_w1, p)
    return SplitReport(projection, inter, dual_in_w1, holds)


def split_project_duality_check(lat: LatticeZp, form: BilinearForm, e) -> bool:
    return split_project_report(lat, form, e).holds


def orthogonal_idempotent(form: BilinearForm, w1_rows) -> list[list[Fraction]]:
    """Projection onto span(w1_rows) along its orthogonal complement."""
    w = _frac_matrix(w1_rows)
    s = form.gram
    g = linalg.matmul(linalg.matmul(w, s), linalg.transpose(w))
    if linalg.det(g) == 0:
        raise ValueError("subspace is degenerate for the form")
    return linalg.matmul(linalg.matmul(linalg.matmul(s, linalg.transpose(w)), linalg.inverse(g)), w)


# ---------------------------------------------------------------------------
# square classes


def similar_mod_unit_squares(x, y, p: int) -> bool:
    """x = s y with s a square of a p-adic unit."""
    x, y = as_fraction(x), as_fraction(y)
    if not x or not y:
        raise ValueError("square classes are only defined for nonzero values")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if valuation(x, p) != valuation(y, p):
        return False
    ratio = x / y
    u = ratio.numerator * ratio.denominator  # same square class as the ratio
    if p == 2:
        return u % 8 == 1
    return pow(u % p, (p - 1) // 2, p) == 1


# ---------------------------------------------------------------------------
# random instances


def random_unimodular(n: int, p: int, rng: random.Random, spread: int = 5):
    """Integer matrix invertible over Z_(p)."""
    while True:
        m = [[Fraction(rng.randint(-spread, spread)) for _ in range(n)] for _ in range(n)]
        d = linalg.det(m)
        if d and valuation(d, p) == 0:
            return m


def random_lattice(n: int, p: int, rng: random.Random, max_power: int = 2) -> LatticeZp:
    u = random_unimodular(n, p, rng)
    v = random_unimodular(n, p, rng)
    diag = [[Fraction(p ** rng.randint(0, max_power)) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return LatticeZp(p, linalg.matmul(linalg.matmul(u, diag), v))


def random_symmetric_form(n: int, rng: random.Random, spread: int = 6) -> BilinearForm:
    while True:
        a = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = Fraction(rng.randint(-spread, spread))
        if linalg.det(a):
            return BilinearForm(a)


def random_unimodular_form(n: int, p: int, rng: random.Random, alternating: bool = False) -> BilinearForm:
    """Form whose Gram on Z_(p)^n has unit determinant."""
    u = random_unimodular(n, p, rng)
    if alternating:
        if n % 2:
            raise ValueError("alternating forms need even dimension")
        core = linalg.zeros(n, n)
        for i in range(0, n, 2):
            unit = Fraction(rng.choice([x for x in range(1, 2 * p) if x % p]))
            core[i][i + 1], core[i + 1][i] = unit, -unit
    else:
        core = [[Fraction(rng.choice([x for x in range(1, 2 * p) if x % p])) if i == j else Fraction(0)
                 for j in range(n)] for i in range(n)]
    return BilinearForm(linalg.matmul(linalg.matmul(linalg.transpose(u), core), u), alternating)


def random_split_instance(n: int, p: int, rng: random.Random, alternating: bool = False):
    """(self-dual lattice, form, orthogonal idempotent) with a random W1."""
    form = random_unimodular_form(n, p, rng, alternating)
    lat = LatticeZp(p, random_unimodular(n, p, rng))
    while True:
        m = rng.randrange(2, n, 2) if alternating else rng.randint(1, n - 1)
        w = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(m)]
        if linalg.rank(w) < m:
            continue
        try:
            e = orthogonal_idempotent(form, w)
        except ValueError:
            continue
        return lat, form, e


# ---------------------------------------------------------------------------
# JSON


def lattice_from_json(data: dict):
    """Parse {"prime", "basis", "gram", "alternating", optional "splitter"}."""
    if not isinstance(data, dict):
        raise ValueError("lattice input must be a JSON object")
    for key in ("prime", "basis", "gram"):
        if key not in data:
            raise ValueError(f"lattice input is missing field {key!r}")
    try:
        prime = int(data["prime"])
    except (TypeError, ValueError):
        raise ValueError("field 'prime' must be an integer") from None
    parsed = {}
    for key in ("basis", "gram", "splitter"):
        if key not in data:
            continue
        rows = data[key]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError(f"field {key!r} must be a list of rows")
        try:
            parsed[key] = _frac_matrix(rows)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValueError(f"field {key!r} contains a non-rational entry") from None
    alternating = data.get("alternating", False)
    if not isinstance(alternating, bool):
        raise ValueError("field 'alternating' must be a boolean")
    try:
        lat = LatticeZp(prime, parsed["basis"])
    except ValueError as exc:
        raise ValueError(f"field 'basis': {exc}") from None
    try:
        form = BilinearForm(parsed["gram"], alternating)
    except ValueError as exc:
        raise ValueError(f"field 'gram': {exc}") from None
    return lat, form, parsed.get("splitter")


def matrix_to_json(rows):
    return [[fraction_str(x) for x in row] for row in rows]


# ---------------------------------------------------------------------------
# eigen systems and congruence primes


@dataclass
class EigenSystem:
    """Hecke eigenvalues in Z[x]/(min_poly); values are power-basis coordinates."""

    min_poly: list = field(default_factory=lambda: [1, 0])
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.min_poly or any(not isinstance(c, int) for c in self.min_poly):
            raise ValueError("min_poly must be a list of integers")
        if self.min_poly[0] != 1:
            raise ValueError("min_poly must be monic")
        deg = self.degree
        if deg < 1:
            raise ValueError("min_poly must have positive degree")
        clean = {}
        for label, coords in self.values.items():
            if isinstance(coords, int):
                coords = [coords]
            if not isinstance(coords, list) or not all(isinstance(c, int) for c in coords):
                raise ValueError(f"value of {label} must be a list of integers")
            if len(coords) > deg:
                raise ValueError(f"value of {label} has more than {deg} coordinates")
            clean[label] = list(coords) + [0] * (deg - len(coords))
        self.values = clean

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def is_rational(self) -> bool:
        return self.degree == 1


    @classmethod
    def from_json(cls, data: dict) -> "EigenSystem":
        if not isinstance(data, dict) or "values" not in data:
            raise ValueError("eigen system must be an object with a 'values' field")
        if not isinstance(data["values"], dict):
            raise ValueError("field 'values' must be an object")
        return cls(data.get("min_poly", [1, 0]), dict(data["values"]))

    def to_json(self) -> dict:
        return {"min_poly": list(self.min_poly), "values": {k: self.values[k] for k in sorted(self.values, key=_label_key)}}

    @classmethod
    def load(cls, path) -> "EigenSystem":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def _label_key(label: str):
    head, _, tail = label.partition("_")
    return (head, int(tail)) if tail.isdigit() else (head, 0, tail)


def _label_index(label: str):
    head, _, tail = label.partition("_")
    return int(tail) if tail.isdigit() else None


@dataclass(frozen=True)
class CongruenceWitness:
    prime: int
    x_factor: tuple
    y_factor: tuple

    def to_json(self) -> dict:
        return {"prime": self.prime, "x_factor": list(self.x_factor), "y_factor": list(self.y_factor)}


class IdenticalSystems(Exception):
    """The two systems agree at some complex place: congruent modulo every prime."""


IDENTICAL = "identical systems"


def _labels_in_range(a: EigenSystem, b: EigenSystem, bound: int) -> list[str]:
    if bound < 1:
        raise ValueError("empty comparison range")

    def within(sys_):
        out = set()
        for label in sys_.values:
            n = _label_index(label)
            if n is None or n <= bound:
                out.add(label)
        return out

    la, lb = within(a), within(b)
    if la != lb:
        missing = sorted(la ^ lb, key=_label_key)
        raise ValueError(f"incompatible label sets: {', '.join(missing)}")
    if not la:
        raise ValueError("empty comparison range")
    return sorted(la, key=_label_key)


def congruence_prime_scan(a: EigenSystem, b: EigenSystem, bound: int) -> list[CongruenceWitness]:
    """Primes p with a maximal ideal above p containing every a_T - b_T.

    Raises IdenticalSystems when the ideal is proper already over Q.
    """
    labels = _labels_in_range(a, b, bound)
    if a.is_rational() and b.is_rational():
        return _rational_scan(a, b, labels)
    return _algebraic_scan(a, b, labels)


def _rational_scan(a, b, labels):
    # in degree one the power basis is {1}, so each value is its only coordinate
    g = 0
    for label in labels:
        g = gcd(g, a.values[label][0] - b.values[label][0])
    if g == 0:
        raise IdenticalSystems(IDENTICAL)
    return [CongruenceWitness(q, (1, 0), (1, 0)) for q in prime_divisors(g)]


def _algebraic_scan(a, b, labels):
    import sympy as sp

    x, y = sp.symbols("x y")
    f = sp.Poly(a.min_poly, x).as_expr()
    g = sp.Poly(b.min_poly, y).as_expr()

    def element(coords, var):
        return sum(c * var**i for i, c in enumerate(coords))

    diffs = [sp.expand(element(a.values[t], x) - element(b.values[t], y)) for t in labels]
    gens = [f, g] + [h for h in diffs if h != 0]
    if list(sp.groebner(gens, x, y, order="lex").exprs) != [1]:
        raise IdenticalSystems(IDENTICAL)
    norms = []
    for h in diffs:
        if h == 0:
            continue
        n = sp.resultant(f, sp.resultant(g, h, y), x)
        if n != 0:
            norms.append(int(n))
    rng = random.Random(0)
    nonzero = [h for h in diffs if h != 0]
    for _ in range(3):
        combo = sp.expand(sum(rng.randint(1, 50) * h for h in nonzero))
        n = sp.resultant(f, sp.resultant(g, combo, y), x)
        if n != 0:
            norms.append(int(n))
    common = 0
    for n in norms:
        common = gcd(common, n)
    if common == 0:
        raise ArithmeticError("could not isolate candidate primes")
    out = []
    for q in prime_divisors(common):
        gb = sp.groebner(gens, x, y, order="lex", modulus=q)
        if list(gb.exprs) == [1]:
            continue
        out.append(_witness(q, f, g, gens, x, y))
    return out


def _poly_key(poly):
    return [int(c) % poly_mod(poly) for c in poly.all_coeffs()]


def poly_mod(poly):
    return int(poly.get_modulus())


def _witness(q, f, g, gens, x, y):
    import sympy as sp

    fx = sorted((fac for fac, _ in sp.Poly(f, x, modulus=q).factor_list()[1]), key=_poly_key)
    gy = sorted((fac for fac, _ in sp.Poly(g, y, modulus=q).factor_list()[1]), key=_poly_key)
    for phi in fx:
        for psi in gy:
            gb = sp.groebner(gens + [phi.as_expr(), psi.as_expr()], x, y, order="lex", modulus=q)
            if list(gb.exprs) != [1]:
                return CongruenceWitness(q, tuple(_poly_key(phi)), tuple(_poly_key(psi)))
    raise ArithmeticError(f"no maximal ideal above {q} found")
