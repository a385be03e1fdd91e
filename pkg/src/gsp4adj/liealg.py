"""Explicit 4x4 models for GSp(4): the symplectic form, the compact Cartan
T1, T2, root vectors, the Cayley-type matrix J, and Weyl's construction of
small irreducible representations inside tensor powers of Std.

All entries live in Q(i, sqrt2) so every identity is checked exactly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .exactnum import I, SQRT2, QuadGaussian, as_fraction

QG = QuadGaussian
ZERO = QG(0)
ONE = QG(1)


class LieMatrix:
    """Immutable 4x4 matrix over Q(i, sqrt2)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(QG.coerce(x) for x in row) for row in rows)
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise ValueError("LieMatrix must be 4x4")

    @classmethod
    def zero(cls):
        return cls([[0] * 4 for _ in range(4)])

    @classmethod
    def identity(cls):
        return cls([[int(i == j) for j in range(4)] for i in range(4)])

    @classmethod
    def diag(cls, entries):
        return cls([[entries[i] if i == j else 0 for j in range(4)] for i in range(4)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return LieMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return LieMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return LieMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, LieMatrix):
            return LieMatrix(linalg.matmul(self.rows, other.rows))
        c = QG.coerce(other)
        return LieMatrix([[c * a for a in r] for r in self.rows])

    def __rmul__(self, other):
        c = QG.coerce(other)
        return LieMatrix([[c * a for a in r] for r in self.rows])

    def bracket(self, other):
        return self * other - other * self

    def T(self):
        return LieMatrix(linalg.transpose(self.rows))

    def conj(self):
        return LieMatrix([[a.conj() for a in r] for r in self.rows])

    def H(self):
        """Conjugate transpose."""
        return self.conj().T()

    def inverse(self):
        return LieMatrix(linalg.inverse([list(r) for r in self.rows]))

    def flat(self):
        return [x for r in self.rows for x in r]

    def __eq__(self, other):
        return isinstance(other, LieMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(x for r in self.rows for x in r)

    def __repr__(self):
        return "LieMatrix(" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + ")"


def bracket(a: LieMatrix, b: LieMatrix) -> LieMatrix:
    return a.bracket(b)


SYMPLECTIC_FORM = LieMatrix(
    [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
)


def in_sp4(x: LieMatrix) -> bool:
    j = SYMPLECTIC_FORM
    return not (x.T() * j + j * x)


def in_Sp4(g: LieMatrix) -> bool:
    return g.T() * SYMPLECTIC_FORM * g == SYMPLECTIC_FORM


def _block(a, b, c, d) -> LieMatrix:
    rows = []
    for top, bottom in ((a, b), (c, d)):
        for i in range(2):
            rows.append(list(top[i]) + list(bottom[i]))
    return LieMatrix(rows)


def _mat2(rows):
    return [[QG.coerce(x) for x in r] for r in rows]


def _add2(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _scale2(c, a):
    return [[c * x for x in r] for r in a]


def dkappa(z) -> LieMatrix:
    """Complexified differential of U(2) -> Sp(4,R), A + iB -> [[A, B], [-B, A]]."""
    z = _mat2(z)
    zt = [list(r) for r in zip(*z)]
    a = _scale2(QG(Fraction(1, 2)), _add2(z, _scale2(QG(-1), zt)))
    b = _scale2(QG(0, Fraction(-1, 2)), _add2(z, zt))
    return _block(a, b, _scale2(QG(-1), b), a)


def p_pm(z, sign: int) -> LieMatrix:
    """p_+(Z) or p_-(Z) for a symmetric 2x2 matrix Z."""
    z = _mat2(z)
    if z[0][1] != z[1][0]:
        raise ValueError("p_pm needs a symmetric matrix")
    iz = _scale2(I * sign, z)
    return _block(z, iz, iz, _scale2(QG(-1), z))


E11 = [[1, 0], [0, 0]]
E22 = [[0, 0], [0, 1]]
E12 = [[0, 1], [0, 0]]
E21 = [[0, 0], [1, 0]]
S12 = [[0, 1], [1, 0]]

NONCOMPACT_ROOTS = [(2, 0), (1, 1), (0, 2), (-2, 0), (-1, -1), (0, -2)]
COMPACT_ROOTS = [(1, -1), (-1, 1)]


def root_name(alpha) -> str:
    return f"X({alpha[0]},{alpha[1]})"


def build_root_vectors(scale=1) -> dict[str, LieMatrix]:
    """T1, T2, the six non-compact root vectors (scaled) and the two compact
    ones, keyed ``"T1"``, ``"X(2,0)"``, ... ."""
    s = QG.coerce(as_fraction(scale) if not isinstance(scale, QG) else scale)
    if not s:
        raise ValueError("root vector scale must be nonzero")
    return dict(_root_vectors(s))


@lru_cache(maxsize=64)
def _root_vectors(s: QG) -> tuple:
    out = {
        "T1": dkappa([[I, 0], [0, 0]]),
        "T2": dkappa([[0, 0], [0, I]]),
    }
    for sign in (1, -1):
        out[root_name((2 * sign, 0))] = s * p_pm(E11, sign)
        out[root_name((sign, sign))] = s * p_pm(S12, sign)
        out[root_name((0, 2 * sign))] = s * p_pm(E22, sign)
    out[root_name((1, -1))] = dkappa(E12)
    out[root_name((-1, 1))] = dkappa(E21)
    for name, x in out.items():
        assert in_sp4(x), name
    return tuple(out.items())


def compact_generators() -> dict[str, LieMatrix]:
    """dkappa of the elementary matrices: the diagonal pair and raise/lower."""
    return {
        "H1": dkappa(E11),
        "H2": dkappa(E22),
        "RAISE": dkappa(E12),
        "LOWER": dkappa(E21),
    }


def cartan_coordinates(h: LieMatrix) -> tuple:
    """(a, b) with h = a*T1 + b*T2, or raise if h is not in the Cartan."""
    a, b = h[0, 2], h[1, 3]
    rv = build_root_vectors()
    if a * rv["T1"] + b * rv["T2"] != h:
        raise ValueError("matrix is not in span{T1, T2}")
    return a, b


def verify_root_vector(h: LieMatrix, x: LieMatrix, alpha) -> bool:
    a, b = cartan_coordinates(h)
    eigen = I * (alpha[0] * a + alpha[1] * b)
    return h.bracket(x) == eigen * x


def _rank(mats) -> int:
    return linalg.rank([m.flat() for m in mats])


def sp4_dimension() -> int:
    """Dimension of {X : X^t J + J X = 0} computed from the linear conditions."""
    rows = []
    basis = []
    for i in range(4):
        for j in range(4):
            e = [[int((a, b) == (i, j)) for b in range(4)] for a in range(4)]
            basis.append(LieMatrix(e))
    conds = [(m.T() * SYMPLECTIC_FORM + SYMPLECTIC_FORM * m).flat() for m in basis]
    # columns of the condition map are conds; rank of a 16x16 system
    rows = linalg.transpose(conds)
    return 16 - linalg.rank(rows)


def cartan_decomposition_report() -> dict[str, bool]:
    rv = build_root_vectors()
    k = list(compact_generators().values())
    pp = [rv[root_name(a)] for a in NONCOMPACT_ROOTS[:3]]
    pm = [rv[root_name(a)] for a in NONCOMPACT_ROOTS[3:]]

    def inside(vectors, space):
        return _rank(space + vectors) == _rank(space)

    checks = {
        "sp4 has dimension 10": sp4_dimension() == 10,
        "all generators lie in sp4": all(in_sp4(m) for m in k + pp + pm),
        "k_C has dimension 4": _rank(k) == 4,
        "p+ has dimension 3": _rank(pp) == 3,
        "p- has dimension 3": _rank(pm) == 3,
        "k_C + p+ + p- spans sp4": _rank(k + pp + pm) == 10,
        "[k_C, p+] in p+": inside([a.bracket(b) for a in k for b in pp], pp),
        "[k_C, p-] in p-": inside([a.bracket(b) for a in k for b in pm], pm),
        "[p+, p-] in k_C": inside([a.bracket(b) for a in pp for b in pm], k),
        "[p+, p+] = 0": all(not a.bracket(b) for a in pp for b in pp),
        "[p-, p-] = 0": all(not a.bracket(b) for a in pm for b in pm),
        "Cartan spanned by T1, T2 lies in k_C": inside([rv["T1"], rv["T2"]], k),
    }
    return checks


def cartan_decomposition_check() -> bool:
    return all(cartan_decomposition_report().values())


# ---------------------------------------------------------------------------
# J and the compact torus T'

_HALF_SQRT2 = SQRT2 * QG(Fraction(1, 2))  # 1/sqrt2
J_MATRIX = _HALF_SQRT2 * LieMatrix(
    [[1, 0, I, 0], [0, 1, 0, I], [I, 0, 1, 0], [0, I, 0, 1]]
)


def circle_point(t) -> tuple[Fraction, Fraction]:
    """Rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the unit circle."""
    t = as_fraction(t)
    return (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)


def compact_torus_element(x, y, xp, yp) -> LieMatrix:
    return LieMatrix(
        [[x, 0, y, 0], [0, xp, 0, yp], [-y, 0, x, 0], [0, -yp, 0, xp]]
    )


def verify_torus_conjugation(t_param, tprime_param) -> bool:
    x, y = circle_point(t_param)
    xp, yp = circle_point(tprime_param)
    t = compact_torus_element(x, y, xp, yp)
    jb = J_MATRIX.conj()
    lhs = jb.inverse() * t * jb
    expected = LieMatrix.diag([QG(x, -y), QG(xp, -yp), QG(x, y), QG(xp, yp)])
    return lhs == expected and J_MATRIX * t * jb == expected


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class AlgebraicWeight:
    k: int
    kprime: int
    c: int

    def __post_init__(self):
        if (self.k + self.kprime - self.c) % 2:
            raise ValueError(f"weight ({self.k},{self.kprime},{self.c}) violates k+k' = c mod 2")

    @property
    def dominant(self) -> bool:
        return self.k >= self.kprime >= 0


@dataclass(frozen=True)
class AnalyticWeight:
    n: int
    nprime: int
    c: int

    def __post_init__(self):
        if (self.n + self.nprime - self.c) % 2:
            raise ValueError(f"weight ({self.n},{self.nprime},{self.c}) violates n+n' = c mod 2")


def weyl_dimension(k: int, kprime: int) -> int:
    """Weyl dimension formula for the Sp(4) representation of highest weight (k, k')."""
    a, b = k - kprime, kprime
    return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) // 6


# ---------------------------------------------------------------------------
# Weyl's construction in Std^{(x)d}

# torus weight of each standard basis vector e1..e4
_STD_WEIGHTS = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def _index(multi) -> int:
    n = 0
    for i in multi:
        n = 4 * n + i
    return n


def _multi(n: int, d: int):
    out = []
    for _ in range(d):
        out.append(n % 4)
        n //= 4
    return tuple(reversed(out))


def tensor_weight(multi) -> tuple[int, int]:
    return (
        sum(_STD_WEIGHTS[i][0] for i in multi),
        sum(_STD_WEIGHTS[i][1] for i in multi),
    )


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _young_groups(k: int, kprime: int):
    d = k + kprime
    row1, row2 = list(range(k)), list(range(k, d))
    rows = []
    for p1 in itertools.permutations(row1):
        for p2 in itertools.permutations(row2):
            rows.append(tuple(p1) + tuple(p2))
    cols = []
    for flips in itertools.product((False, True), repeat=kprime):
        perm = list(range(d))
        for j, f in enumerate(flips):
            if f:
                perm[j], perm[k + j] = perm[k + j], perm[j]
        cols.append((tuple(perm), _perm_sign(perm)))
    return rows, cols


def young_symmetrizer_image(k: int, kprime: int) -> list[list[Fraction]]:
    """Basis of the image of (column antisymmetrizer) o (row symmetrizer) on Std^{(x)d}."""
    d = k + kprime
    rows, cols = _young_groups(k, kprime)
    seen = set()
    images = []
    for n in range(4**d):
        multi = _multi(n, d)
        acc: dict[int, int] = {}
        for g in rows:
            sym = tuple(multi[g[j]] for j in range(d))
            for h, sgn in cols:
                target = _index(tuple(sym[h[j]] for j in range(d)))
                acc[target] = acc.get(target, 0) + sgn
        acc = {key: v for key, v in acc.items() if v}
        if not acc:
            continue
        lead = acc[min(acc)]
        key = tuple(sorted((i, Fraction(v, lead)) for i, v in acc.items()))
        if key in seen:
            continue
        seen.add(key)
        vec = [Fraction(0)] * 4**d
        for i, v in acc.items():
            vec[i] = Fraction(v)
        images.append(vec)
    return linalg.row_space_basis(images)


def contraction(vec, p: int, q: int, d: int):
    """Psi_{p,q}: pair slots p < q with the symplectic form, drop them."""
    out = [Fraction(0)] * 4 ** (d - 2)
    jf = SYMPLECTIC_FORM
    for n, x in enumerate(vec):
        if not x:
            continue
        multi = _multi(n, d)
        coeff = jf[multi[p], multi[q]].c0
        if not coeff:
            continue
        rest = tuple(m for s, m in enumerate(multi) if s not in (p, q))
        out[_index(rest)] += coeff * x
    return out


def contractions(vec, d: int):
    return [contraction(vec, p, q, d) for p, q in itertools.combinations(range(d), 2)]


@dataclass
class WeylModule:
    weight: AlgebraicWeight
    d: int
    basis: list = field(repr=False)
    weights: list

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def weight_multiset(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for w in self.weights:
            out[(w.k, w.kprime)] = out.get((w.k, w.kprime), 0) + 1
        return dict(sorted(out.items()))

    def vectors_of_weight(self, k: int, kprime: int):
        return [v for v, w in zip(self.basis, self.weights) if (w.k, w.kprime) == (k, kprime)]

    def contains(self, vec) -> bool:
        return linalg.rank(self.basis + [list(vec)]) == self.dimension


def weyl_construct(weight: AlgebraicWeight, max_degree: int = 4) -> WeylModule:
    k, kp = weight.k, weight.kprime
    if not weight.dominant:
        raise ValueError(f"weight ({k},{kp}) is not dominant")
    d = k + kp
    if d > max_degree:
        raise ValueError(f"degree {d} exceeds the supported bound {max_degree}")
    if d == 0:
        basis = [[Fraction(1)]]
    else:
        image = young_symmetrizer_image(k, kp)
        if d >= 2:
            # y . image in ker Psi  <=>  y in left kernel of the stacked contractions
            cons = [sum(contractions(u, d), []) for u in image]
            ys = linalg.nullspace(linalg.transpose(cons))
            basis = [linalg.vecmat(y, image) for y in ys]
        else:
            basis = image
    # split into torus weight spaces
    by_weight: dict[tuple[int, int], list[int]] = {}
    for n in range(4**d):
        by_weight.setdefault(tensor_weight(_multi(n, d)), []).append(n)
    wbasis, wlist = [], []
    for mu in sorted(by_weight, reverse=True):
        idx = set(by_weight[mu])
        proj = [[x if n in idx else Fraction(0) for n, x in enumerate(v)] for v in basis]
        for v in linalg.row_space_basis(proj):
            wbasis.append(v)
            wlist.append(AlgebraicWeight(mu[0], mu[1], weight.c))
    return WeylModule(weight=weight, d=d, basis=wbasis, weights=wlist)


def apply_tensor(g: LieMatrix, vec, d: int):
    """g^{(x)d} applied to a tensor (entries Fraction or QuadGaussian)."""
    cur = {n: QG.coerce(x) for n, x in enumerate(vec) if x}
    for slot in range(d):
        nxt: dict[int, QG] = {}
        for n, x in cur.items():
            multi = list(_multi(n, d))
            i = multi[slot]
            for a in range(4):
                gai = g[a, i]
                if not gai:
                    continue
                multi[slot] = a
                key = _index(multi)
                nxt[key] = nxt.get(key, ZERO) + gai * x
            multi[slot] = i
        cur = {key: v for key, v in nxt.items() if v}
    out = [ZERO] * 4**d
    for n, x in cur.items():
        out[n] = x
    return out


def tensor_weight_of(vec, d: int):
    """Common torus weight of a nonzero tensor, or None."""
    ws = {tensor_weight(_multi(n, d)) for n, x in enumerate(vec) if x}
    if len(ws) != 1:
        return None
    return ws.pop()


_SAMPLE_CIRCLE_PARAMS = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(2), Fraction(5, 7))]


def weight_of_transported_vector(module: WeylModule, vec, transport: str = "J") -> AnalyticWeight:
    """T'-weight of J w (``transport="J"``) or conj(J) w (``"Jbar"``)."""
    if module.d > 2:
        raise ValueError("transport check is limited to k + k' <= 2")
    if not module.contains(vec):
        raise ValueError("vector is not in the module")
    mu = tensor_weight_of(vec, module.d)
    if mu is None:
        raise ValueError("input is not a torus weight vector")
    if transport == "J":
        mat = J_MATRIX
    elif transport in ("Jbar", "conj"):
        mat = J_MATRIX.conj()
    else:
        raise ValueError(f"unknown transport {transport!r}")
    d, c = module.d, module.weight.c
    v = apply_tensor(mat, vec, d)
    samples = []
    for tp, tpp in _SAMPLE_CIRCLE_PARAMS:
        x, y = circle_point(tp)
        xp, yp = circle_point(tpp)
        tv = apply_tensor(compact_torus_element(x, y, xp, yp), v, d)
        samples.append((QG(x, y), QG(xp, yp), tv))
    matches = []
    for n in range(-d, d + 1):
        for n2 in range(-d, d + 1):
            if (n + n2 - c) % 2:
                continue
            ok = True
            for z1, z2, tv in samples:
                scalar = z1**n * z2**n2
                if any(a != scalar * b for a, b in zip(tv, v)):
                    ok = False
                    break
            if ok:
                matches.append(AnalyticWeight(n, n2, c))
    if len(matches) != 1:
        raise ValueError("transported vector is not a T'-weight vector")
    return matches[0]


def invariant_pairing(a, b, d: int) -> QG:
    """The Sp(4)-invariant form J^{(x)d} on Std^{(x)d}."""
    total = ZERO
    for n, x in enumerate(a):
        if not x:
            continue
        ma = _multi(n, d)
        for m, y in enumerate(b):
            if not y:
                continue
            mb = _multi(m, d)
            coeff = 1
            for i, j in zip(ma, mb):
                coeff *= SYMPLECTIC_FORM[i, j].c0
                if not coeff:
                    break
            if coeff:
                total = total + QG.coerce(x) * QG.coerce(y) * QG(coeff)
    return total


def norm_v_pairing(weight: AlgebraicWeight) -> QG:
    """[J w, conj(J) w] for the weight vector w of weight (-k, k') in V_lambda."""
    module = weyl_construct(weight, max_degree=2)
    ws = module.vectors_of_weight(-weight.k, weight.kprime)
    if len(ws) != 1:
        raise ValueError("weight (-k, k') should have multiplicity one")
    w = ws[0]
    v = apply_tensor(J_MATRIX, w, module.d)
    vbar = apply_tensor(J_MATRIX.conj(), w, module.d)
    return invariant_pairing(v, vbar, module.d)
