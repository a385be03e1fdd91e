"""Invariant suites behind ``gsp4adj verify``.

Each suite returns a list of :class:`Check`; report order is fixed by the
suite definition, never by execution order.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import constants, ktypes, lattice, liealg, linalg, modforms
from .exactnum import (
    PiQuantity,
    pochhammer,
    pochhammer_identity_check,
    primes_up_to,
    valuation,
    zeta_even_over_pi,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {status}{tail}"


def _count(name, results, unit=""):
    results = list(results)
    good = sum(bool(r) for r in results)
    label = f"{good}/{len(results)}{(' ' + unit) if unit else ''}"
    return Check(name, good == len(results), label)


# ---------------------------------------------------------------------------


def suite_lie() -> list[Check]:
    out = [Check(f"Cartan decomposition: {k}", v) for k, v in liealg.cartan_decomposition_report().items()]
    rv = liealg.build_root_vectors()
    h = rv["T1"] + rv["T2"] * 3
    roots = liealg.NONCOMPACT_ROOTS + liealg.COMPACT_ROOTS
    out.append(_count("root vectors are T-eigenvectors", (liealg.verify_root_vector(h, rv[liealg.root_name(a)], a) for a in roots), "roots"))
    out.append(Check("J lies in Sp(4)", liealg.in_Sp4(liealg.J_MATRIX)))
    params = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(3), Fraction(-2, 5)), (Fraction(0), Fraction(7))]
    out.append(_count("torus conjugation by J", (liealg.verify_torus_conjugation(a, b) for a, b in params), "samples"))
    dims_ok, contractions_ok = [], []
    for k, kp, c in [(1, 0, 1), (1, 1, 0), (2, 0, 2), (2, 1, 1), (2, 2, 0), (3, 0, 1)]:
        mod = liealg.weyl_construct(liealg.AlgebraicWeight(k, kp, c))
        dims_ok.append(mod.dimension == liealg.weyl_dimension(k, kp))
        if mod.d >= 2:
            contractions_ok.extend(not any(x for t in liealg.contractions(v, mod.d) for x in t) for v in mod.basis)
    out.append(_count("Weyl construction matches dimension formula", dims_ok, "weights"))
    out.append(_count("constructed vectors are killed by all contractions", contractions_ok, "vectors"))
    norms = [liealg.norm_v_pairing(liealg.AlgebraicWeight(*w)) for w in [(0, 0, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0)]]
    out.append(_count("[Jw, conj(J)w] is nonzero for k+k' <= 2", (bool(x) for x in norms), "weights"))
    return out


def suite_ktypes() -> list[Check]:
    out = []
    comm = []
    for d in range(13):
        tau = ktypes.TauModule(d, 0)
        for s in range(d + 1):
            rl = tau.apply("RAISE", tau.apply("LOWER", {s: Fraction(1)}))
            lr = tau.apply("LOWER", tau.apply("RAISE", {s: Fraction(1)}))
            diff = {t: rl.get(t, 0) - lr.get(t, 0) for t in set(rl) | set(lr)}
            diff = {t: c for t, c in diff.items() if c}
            comm.append(diff == ({s: Fraction(2 * s - d)} if d != 2 * s else {}))
    out.append(_count("tau commutator RAISE LOWER - LOWER RAISE = H1 - H2 = 2s - d", comm, "basis vectors"))
    p = ktypes.projection_onto_31()
    ref = ktypes.REFERENCE_PROJECTION_MATRIX
    entries = [p[i][j] == ref[i][j] for i in range(9) for j in range(9)]
    out.append(Check("projection matrix matches reference", all(entries), f"{sum(entries)}/81 entries"))
    out.append(Check("projection is idempotent", linalg.matmul(p, p) == p))
    out.append(Check("projection has rank 5", linalg.rank(p) == 5))
    gens = {g: ktypes.generator_matrix(g) for g in ktypes.GENERATORS}
    out.append(_count("projection commutes with k_C", (linalg.matmul(p, m) == linalg.matmul(m, p) for m in gens.values()), "generators"))
    projs = ktypes.equivariant_projections()
    total = projs[0]
    for q in projs[1:]:
        total = [[a + b for a, b in zip(r, s)] for r, s in zip(total, q)]
    out.append(Check("equivariant projections sum to the identity", total == linalg.identity(9)))
    strings = ktypes.decompose_tensor_space()
    out.append(Check("decomposition is tau(3,-1) + tau(2,0) + tau(1,1)", [s.highest for s in strings] == [(3, -1), (2, 0), (1, 1)]))
    w = strings[0].vectors
    out.append(_count("standard basis w_4..w_0 exact", (w[s] == [Fraction(x) for x in ktypes.REFERENCE_W[s]] for s in range(5)), "vectors"))
    out.append(Check("standard bases x_2..x_0 and y_0 up to one scalar each", _up_to_scalar(strings[1].vectors, ktypes.REFERENCE_X) and _up_to_scalar(strings[2].vectors, ktypes.REFERENCE_Y)))
    raise_t = linalg.transpose(gens["RAISE"])
    out.append(_count("highest weight vectors are killed by RAISE", (not any(linalg.vecmat(st.vectors[-1], raise_t)) for st in strings), "strings"))
    lower_t = linalg.transpose(gens["LOWER"])
    out.append(_count("LOWER w_s = (5 - s) w_{s-1}", (linalg.vecmat(w[s], lower_t) == [(5 - s) * x for x in w[s - 1]] for s in range(1, 5)), "steps"))
    out.append(Check("projection as lowering combinations", ktypes.projection_as_lowering_combinations() == ktypes.REFERENCE_LOWERING_COEFFS))
    pair = [ktypes.pairing_coefficient(d, i) == (-1) ** i * ktypes.raise_lower_eigenvalue(d, i) for d in range(13) for i in range(d + 1)]
    out.append(_count("pairing coefficient matches RAISE^i LOWER^i", pair, "pairs"))
    return out


def _up_to_scalar(computed, reference) -> bool:
    ratio = None
    for s, ref in reference.items():
        vec = computed[s]
        nz = next(j for j, x in enumerate(ref) if x)
        r = vec[nz] / ref[nz]
        if not r or (ratio is not None and r != ratio):
            return False
        ratio = r
        if vec != [r * x for x in ref]:
            return False
    return True


def suite_constants() -> list[Check]:
    out = []
    pairs = [(k, kp) for k in range(13) for kp in range(k + 1)]
    agree = [constants.cprime(k, kp) == constants.c_closed(k, kp) for k, kp in pairs]
    out.append(Check(f"C' = C for {len(pairs)} weight pairs", all(agree), f"{sum(agree)}/{len(pairs)}"))
    rng = random.Random(20240)
    trace = []
    for _ in range(20):
        k = rng.randint(0, 10)
        kp = rng.randint(0, k)
        try:
            forms = constants.simplification_trace(k, kp)
            trace.append(len(set(forms)) == 1)
        except ArithmeticError:
            trace.append(False)
    out.append(_count("simplification forms agree", trace, "random weights"))
    point = []
    for d in range(9):
        for r in range(5):
            for i in range(d + 1):
                for u in range(min(r, i) + 1):
                    for up in range(r + 1):
                        lhs, rhs = constants.pointwise_sides(d, i, u, up, r)
                        point.append(lhs == rhs)
    out.append(_count("coefficient identity r r s t = Pochhammer ratio", point, "index tuples"))
    poch = [pochhammer_identity_check(b, l, m) for b in range(-10, 11) for m in range(9) for l in range(m + 1)]
    out.append(_count("Pochhammer alternating-sum identity", poch, "cases"))
    out.append(Check("alternation sum equals 4/3", constants.AlternationTable().weighted_sum() == Fraction(4, 3)))
    tele = [sum(pochhammer(j + 1, 4) for j in range(m + 1)) == pochhammer(m + 1, 5) / 5 for m in range(31)]
    out.append(_count("telescoping sum of (i+1)_4", tele, "cases"))
    local = []
    for l in primes_up_to(100):
        try:
            local.append(constants.ichino_local_factor(l) == 1 / (l + Fraction(1, l)))
        except ArithmeticError:
            local.append(False)
    out.append(_count("local factor identity", local, "primes"))
    assembly = []
    for n in (1, 2, 3, 5, 6, 7, 10):
        for k in range(9):
            for kp in range(k + 1):
                try:
                    value = constants.main1_constant(k, kp, n)
                    pet = constants.petersson_pairing_constant(k, kp, n)
                    ich = constants.ichino_constant(k, kp, n)
                    assembly.append(pet * ich == value and pet.pi_exp + ich.pi_exp == 3 * k + kp + 12)
                except ArithmeticError:
                    assembly.append(False)
    out.append(_count("constant assembly identity", assembly, "cases"))
    out.append(Check("Siegel volume is pi^3/270", constants.siegel_volume() == PiQuantity(Fraction(1, 270), 3)))
    out.append(Check("Petersson normalization is twice the Siegel volume", PiQuantity(Fraction(1, 135), 3) == constants.siegel_volume() * 2))
    out.append(Check("zeta(2), zeta(4), zeta(12) over pi powers",
                     zeta_even_over_pi(2) == Fraction(1, 6) and zeta_even_over_pi(4) == Fraction(1, 90)
                     and zeta_even_over_pi(12).numerator == 691))
    return out


def suite_lattice() -> list[Check]:
    out = []
    index_ok = []
    for p in (5, 7, 691):
        rng = random.Random(p)
        for _ in range(50):
            lat = lattice.random_lattice(4, p, rng)
            form = lattice.random_symmetric_form(4, rng)
            disc = lattice.gram_discriminant(lat, form)
            index_ok.append(lattice.dual_index(lat, form) == p ** valuation(disc, p))
    out.append(_count("dual index equals p-part of the discriminant", index_ok, "lattices"))
    split_ok = []
    rng = random.Random(4)
    for n in range(100):
        p = (5, 7, 691)[n % 3]
        lat, form, e = lattice.random_split_instance(4, p, rng, alternating=bool(n % 2))
        split_ok.append(lattice.split_project_duality_check(lat, form, e))
    out.append(_count("projection equals dual of the intersection", split_ok, "instances"))
    form = lattice.BilinearForm([[1, 0], [0, 1]])
    bad = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(0)]]
    try:
        lattice.split_project_duality_check(lattice.LatticeZp.standard(5, 2), form, bad)
        raised = False
    except ValueError:
        raised = True
    out.append(Check("non-orthogonal splitter is rejected", raised))
    rng = random.Random(11)
    classes = []
    for p in (5, 7, 691):
        for _ in range(10):
            lat = lattice.random_lattice(4, p, rng)
            form = lattice.random_symmetric_form(4, rng)
            u = lattice.random_unimodular(4, p, rng)
            moved = lattice.LatticeZp(p, linalg.matmul(u, lat.basis))
            classes.append(lattice.similar_mod_unit_squares(
                lattice.gram_discriminant(lat, form), lattice.gram_discriminant(moved, form), p))
    out.append(_count("discriminant square class is basis independent", classes, "changes of basis"))
    a = lattice.EigenSystem([1, 0], {"T_2": [0]})
    b = lattice.EigenSystem([1, 0], {"T_2": [15]})
    primes = [w.prime for w in lattice.congruence_prime_scan(a, b, 10)]
    back = [w.prime for w in lattice.congruence_prime_scan(b, a, 10)]
    out.append(Check("congruence scan of 0 against 15", primes == [3, 5] and back == primes))
    return out


def suite_modforms() -> list[Check]:
    out = []
    q, b = modforms.eisenstein_congruence_demo(200)
    out.append(Check("tau(n) = sigma_11(n) mod 691", q == 691, f"n <= {b}"))
    e4, e6 = modforms.eisenstein(4, 10), modforms.eisenstein(6, 10)
    diff = e4**3 - e6**2
    out.append(Check("E4^3 - E6^2 starts with 1728 q", diff[0] == 0 and diff[1] == 1728))
    systems = [modforms.cusp_eigensystems(k, 60) for k in modforms.ONE_DIM_CUSP_WEIGHTS]
    out.append(_count("eigen systems are multiplicative", (s.check_multiplicative() for s in systems), "weights"))
    out.append(_count("prime power recursion", (s.check_prime_power_recursion() for s in systems), "weights"))
    stable = []
    for k in (12, 16, 24):
        basis = modforms.modular_basis(k, 40)
        for f in basis:
            stable.append(modforms.coordinates_in([g.truncate(20) for g in basis], modforms.hecke_operator(f, k, 2, 20)) is not None)
    out.append(_count("T_2 preserves M_k", stable, "basis forms"))
    d = modforms.cusp_eigensystems(12, 100).to_eigensystem()
    e = modforms.eisenstein_eigensystem(12, 100).to_eigensystem()
    primes = [w.prime for w in lattice.congruence_prime_scan(d, e, 100)]
    out.append(Check("Delta and E12 are congruent exactly at 691", primes == [691]))
    return out


SUITES = {
    "lie": suite_lie,
    "ktypes": suite_ktypes,
    "constants": suite_constants,
    "lattice": suite_lattice,
    "modforms": suite_modforms,
}


def thread_cap() -> int:
    raw = os.environ.get("TOOLKIT_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suites(name: str) -> dict[str, list[Check]]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    workers = min(thread_cap(), len(names))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda n: SUITES[n](), names))
    else:
        results = [SUITES[n]() for n in names]
    return dict(zip(names, results))
