"""K-types of U(2): abstract standard-basis modules tau_(k,k'), and the
9-dimensional space Lambda^2 p+ (x) p- with its decomposition
tau_(3,-1) + tau_(2,0) + tau_(1,1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .exactnum import QuadGaussian
from .liealg import LieMatrix, build_root_vectors, compact_generators, root_name

GENERATORS = ("H1", "H2", "RAISE", "LOWER")


@dataclass(frozen=True)
class TauModule:
    """tau_(k,k') with standard basis v_0..v_d, d = k - k'."""

    k: int
    kprime: int

    def __post_init__(self):
        if self.k < self.kprime:
            raise ValueError("tau_(k,k') needs k >= k'")

    @property
    def d(self) -> int:
        return self.k - self.kprime

    @property
    def dimension(self) -> int:
        return self.d + 1

    def act(self, generator: str, s: int) -> dict[int, Fraction]:
        return tau_action(self, generator, s)

    def apply(self, generator: str, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for s, c in vec.items():
            for t, a in tau_action(self, generator, s).items():
                out[t] = out.get(t, Fraction(0)) + a * c
        return {t: c for t, c in sorted(out.items()) if c}

    def matrix(self, generator: str):
        """Matrix with column s = image of v_s."""
        n = self.dimension
        m = linalg.zeros(n, n)
        for s in range(n):
            for t, a in tau_action(self, generator, s).items():
                m[t][s] = a
        return m


def tau_action(module: TauModule, generator: str, s: int) -> dict[int, Fraction]:
    d = module.d
    if not 0 <= s <= d:
        raise IndexError(f"basis index {s} outside 0..{d}")
    if generator == "H1":
        out = {s: Fraction(s + module.kprime)}
    elif generator == "H2":
        out = {s: Fraction(-s + module.k)}
    elif generator == "RAISE":
        out = {s + 1: Fraction(s + 1)} if s < d else {}
    elif generator == "LOWER":
        out = {s - 1: Fraction(d - s + 1)} if s > 0 else {}
    else:
        raise ValueError(f"unknown generator {generator!r}")
    return {t: c for t, c in out.items() if c}


def pairing_coefficient(d: int, i: int) -> Fraction:
    """(-1)^i i! d!/(d-i)!, checked against RAISE^i LOWER^i on a string of length d."""
    if not 0 <= i <= d:
        raise ValueError("need 0 <= i <= d")
    closed = Fraction((-1) ** i * factorial(i) * factorial(d) // factorial(d - i))
    if (-1) ** i * raise_lower_eigenvalue(d, i) != closed:
        raise ArithmeticError("pairing coefficient disagrees with the module computation")
    return closed


def raise_lower_eigenvalue(d: int, i: int) -> Fraction:
    """Scalar by which RAISE^i LOWER^i acts on the top vector of tau with d = k - k'."""
    tau = TauModule(d, 0)
    vec = {d: Fraction(1)}
    for _ in range(i):
        vec = tau.apply("LOWER", vec)
    for _ in range(i):
        vec = tau.apply("RAISE", vec)
    if set(vec) - {d}:
        raise ArithmeticError("RAISE^i LOWER^i left the top weight line")
    return vec.get(d, Fraction(0))


# Minimal K-types of the four discrete series in the packet of weight (k, k'),
# ordered (3,0), (2,1), (1,2), (0,3).
def minimal_ktypes(k: int, kprime: int) -> list[tuple[int, int]]:
    if not k >= kprime >= 0:
        raise ValueError("need k >= k' >= 0")
    return [
        (k + 3, kprime + 3),
        (k + 3, -kprime - 1),
        (kprime + 1, -k - 3),
        (-kprime - 3, -k - 3),
    ]


# ---------------------------------------------------------------------------
# Lambda^2 p+ (x) p-

PPLUS = [(2, 0), (1, 1), (0, 2)]
PMINUS = [(0, -2), (-1, -1), (-2, 0)]
WEDGE_PAIRS = [(0, 1), (0, 2), (1, 2)]  # indices into PPLUS

# ordered basis: X_a ^ X_b (x) X_c
TENSOR_BASIS = [(PPLUS[a], PPLUS[b], c) for a, b in WEDGE_PAIRS for c in PMINUS]


def basis_label(j: int) -> str:
    a, b, c = TENSOR_BASIS[j]
    return f"{root_name(a)}^{root_name(b)}(x){root_name(c)}"


def basis_weight(j: int) -> tuple[int, int]:
    a, b, c = TENSOR_BASIS[j]
    return (a[0] + b[0] + c[0], a[1] + b[1] + c[1])


class TensorVector:
    """Element of Lambda^2 p+ (x) p- in the fixed 9-term basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(QuadGaussian.coerce(x) for x in coords)
        if len(coords) != 9:
            raise ValueError("tensor vectors have 9 coordinates")
        self.coords = coords

    @classmethod
    def basis(cls, j: int) -> "TensorVector":
        return cls([int(i == j) for i in range(9)])

    def __add__(self, other):
        return TensorVector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return TensorVector([a - b for a, b in zip(self.coords, other.coords)])

    def __mul__(self, c):
        c = QuadGaussian.coerce(c)
        return TensorVector([c * a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TensorVector) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def rational(self) -> list[Fraction]:
        if not all(x.is_rational() for x in self.coords):
            raise ValueError("tensor vector has non-rational coordinates")
        return [x.c0 for x in self.coords]

    def __repr__(self):
        return f"TensorVector({', '.join(str(x) for x in self.coords)})"


def _noncompact_coordinates(m: LieMatrix, roots, scale) -> dict[tuple, QuadGaussian]:
    """Coordinates of m in p+ or p- from its upper-left block; checks membership."""
    rv = build_root_vectors(scale)
    entry = {2: (0, 0), 1: (0, 1), 0: (1, 1)}  # |first coordinate| -> block entry
    coords = {alpha: m[entry[abs(alpha[0])]] / scale for alpha in roots}
    rebuilt = LieMatrix.zero()
    for alpha, c in coords.items():
        rebuilt = rebuilt + c * rv[root_name(alpha)]
    if rebuilt != m:
        raise ValueError("bracket left the non-compact root space")
    return coords


def adjoint_action_on_tensor(generator: LieMatrix, v: TensorVector, scale=1) -> TensorVector:
    """Leibniz action of an element of k_C on A ^ B (x) C."""
    kc = list(compact_generators().values())
    if linalg.rank([m.flat() for m in kc] + [generator.flat()]) != 4:
        raise ValueError("generator is not in k_C")
    scale = QuadGaussian.coerce(Fraction(scale) if not isinstance(scale, QuadGaussian) else scale)
    rv = build_root_vectors(scale)
    pplus_order = {a: n for n, a in enumerate(PPLUS)}
    out = [QuadGaussian(0)] * 9
    index = {t: j for j, t in enumerate(TENSOR_BASIS)}

    def add(a, b, c, coeff):
        if a == b or not coeff:
            return
        if pplus_order[a] > pplus_order[b]:
            a, b, coeff = b, a, -coeff
        j = index[(a, b, c)]
        out[j] = out[j] + coeff

    for j, x in enumerate(v.coords):
        if not x:
            continue
        a, b, c = TENSOR_BASIS[j]
        ga = _noncompact_coordinates(generator.bracket(rv[root_name(a)]), PPLUS, scale)
        gb = _noncompact_coordinates(generator.bracket(rv[root_name(b)]), PPLUS, scale)
        gc = _noncompact_coordinates(generator.bracket(rv[root_name(c)]), PMINUS, scale)
        for a2, y in ga.items():
            add(a2, b, c, x * y)
        for b2, y in gb.items():
            add(a, b2, c, x * y)
        for c2, y in gc.items():
            add(a, b, c2, x * y)
    return TensorVector(out)


def generator_matrix(name: str):
    """9x9 rational matrix (column j = image of basis j) of a compact generator."""
    return [list(r) for r in _generator_matrix(name)]


@lru_cache(maxsize=None)
def _generator_matrix(name: str):
    g = compact_generators()[name]
    cols = [adjoint_action_on_tensor(g, TensorVector.basis(j)).rational() for j in range(9)]
    return tuple(tuple(r) for r in linalg.transpose(cols))


@dataclass
class KTypeString:
    highest: tuple[int, int]
    vectors: list  # vectors[s] = v_s as 9 rational coordinates, s = 0..d

    @property
    def d(self) -> int:
        return len(self.vectors) - 1


def decompose_tensor_space() -> list[KTypeString]:
    """Highest weight vectors and their LOWER-strings, largest piece first."""
    mats = {name: generator_matrix(name) for name in ("H1", "H2", "RAISE", "LOWER")}
    kernel = linalg.nullspace(mats["RAISE"])
    # the kernel is torus-stable and the basis consists of weight vectors, so
    # projecting onto each weight space stays inside it
    strings = []
    weights = sorted({basis_weight(j) for j in range(9)}, reverse=True)
    for mu in weights:
        idx = [j for j in range(9) if basis_weight(j) == mu]
        proj = [[x if j in idx else Fraction(0) for j, x in enumerate(v)] for v in kernel]
        proj = [row for row in proj if any(row)]
        if not proj:
            continue
        for hv in linalg.row_space_basis(proj):
            lead = next(x for x in hv if x)
            hv = [x / lead for x in hv]
            k, kp = mu
            d = k - kp
            vecs = {d: hv}
            for s in range(d, 0, -1):
                low = linalg.vecmat(vecs[s], linalg.transpose(mats["LOWER"]))
                vecs[s - 1] = [x / (d - s + 1) for x in low]
            strings.append(KTypeString((k, kp), [vecs[s] for s in range(d + 1)]))
    strings.sort(key=lambda st: -st.d)
    if sum(st.d + 1 for st in strings) != 9:
        raise ArithmeticError("decomposition does not exhaust the 9-dimensional space")
    return strings


def _projection_from_strings(strings, which: int):
    cols = [v for st in strings for v in reversed(st.vectors)]
    b = linalg.transpose(cols)  # columns = string vectors
    binv = linalg.inverse(b)
    start = sum(st.d + 1 for st in strings[:which])
    stop = start + strings[which].d + 1
    keep = [[Fraction(int(i == j and start <= i < stop)) for j in range(9)] for i in range(9)]
    return linalg.matmul(linalg.matmul(b, keep), binv)


def equivariant_projections():
    """Projections (column convention) onto each summand, in decomposition order."""
    strings = decompose_tensor_space()
    return [_projection_from_strings(strings, n) for n in range(len(strings))]


def projection_onto_31():
    strings = decompose_tensor_space()
    n = next(i for i, st in enumerate(strings) if st.highest == (3, -1))
    return _projection_from_strings(strings, n)


_F = Fraction
REFERENCE_PROJECTION_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, _F(1, 2), 0, _F(-1, 4), 0, 0, 0, 0, 0],
    [0, 0, _F(1, 6), 0, _F(-1, 3), 0, _F(1, 6), 0, 0],
    [0, -1, 0, _F(1, 2), 0, 0, 0, 0, 0],
    [0, 0, _F(-1, 3), 0, _F(2, 3), 0, _F(-1, 3), 0, 0],
    [0, 0, 0, 0, 0, _F(1, 2), 0, -1, 0],
    [0, 0, _F(1, 6), 0, _F(-1, 3), 0, _F(1, 6), 0, 0],
    [0, 0, 0, 0, 0, _F(-1, 4), 0, _F(1, 2), 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
]
REFERENCE_PROJECTION_MATRIX = [[_F(x) for x in row] for row in REFERENCE_PROJECTION_MATRIX]

# Standard bases as printed, coordinates in TENSOR_BASIS order.
REFERENCE_W = {
    4: [1, 0, 0, 0, 0, 0, 0, 0, 0],
    3: [0, -1, 0, 2, 0, 0, 0, 0, 0],
    2: [0, 0, 1, 0, -2, 0, 1, 0, 0],
    1: [0, 0, 0, 0, 0, 2, 0, -1, 0],
    0: [0, 0, 0, 0, 0, 0, 0, 0, 1],
}
REFERENCE_X = {
    2: [0, 1, 0, 2, 0, 0, 0, 0, 0],
    1: [0, 0, -2, 0, 0, 0, 2, 0, 0],
    0: [0, 0, 0, 0, 0, -2, 0, -1, 0],
}
REFERENCE_Y = {0: [0, 0, 1, 0, 1, 0, 1, 0, 0]}


def projection_as_lowering_combinations() -> list[tuple[Fraction, int]]:
    """p(e_j) = coeff * LOWER^power(e_1) for each basis vector e_j."""
    proj = projection_onto_31()
    lower = generator_matrix("LOWER")
    lt = linalg.transpose(lower)
    powers = [[Fraction(int(i == 0)) for i in range(9)]]
    for _ in range(4):
        powers.append(linalg.vecmat(powers[-1], lt))
    out = []
    for j in range(9):
        image = [proj[i][j] for i in range(9)]
        power = 3 - basis_weight(j)[0]
        target = powers[power]
        coeff = linalg.coordinates([target], image)
        if coeff is None:
            raise ArithmeticError(f"p(e_{j + 1}) is not a multiple of LOWER^{power} e_1")
        out.append((coeff[0], power))
    return out


REFERENCE_LOWERING_COEFFS = [
    (_F(1), 0),
    (_F(-1, 2), 1),
    (_F(1, 12), 2),
    (_F(1, 4), 1),
    (_F(-1, 6), 2),
    (_F(1, 24), 3),
    (_F(1, 12), 2),
    (_F(-1, 12), 3),
    (_F(1, 24), 4),
]
