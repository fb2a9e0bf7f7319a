"""Lie algebra cohomology and the classification of Lie 2-algebras.

Cochains are stored on strictly increasing index tuples only, so total
antisymmetry holds by construction here (unlike the structure-constant
modules, where violations must stay representable).  Evaluation at an
arbitrary tuple inserts the permutation sign and vanishes on repeats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .exactlin import (DimensionMismatch, RMatrix, mat_from_json, mat_to_json,
                       rank_kernel, solve_linear, vadd, vneg, vscale, vsub, vzeros)
from .lie2 import SemistrictLie2Algebra, from_linfty
from .linfty import (LInfHom, TwoTermLInfinity, _check_tensor_shape, check_axioms,
                     perm_sign, zero_l3)
from .report import CheckReport
from .serialize import FixtureError, as_count, need, tensor_from_json, tensor_to_json
from .twoterm import ChainMap, TwoTermComplex, skeletalize_complex


@dataclass
class LieAlgebra:
    dim: int
    bracket: list  # [i][j] -> coefficient vector of [e_i, e_j]

    def __post_init__(self):
        _check_tensor_shape(self.bracket, (self.dim,) * 3, "bracket")

    def bracket_vec(self, u: list, v: list) -> list:
        out = vzeros(self.dim)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    if vj:
                        out = vadd(out, vscale(ui * vj, self.bracket[i][j]))
        return out

    def ad(self, i: int) -> RMatrix:
        """Matrix of ad(e_i): columns are [e_i, e_j]."""
        return RMatrix.from_cols([self.bracket[i][j] for j in range(self.dim)],
                                 rows=self.dim)


def check_lie_algebra(g: LieAlgebra) -> CheckReport:
    rep = CheckReport("lie_algebra")
    bad = []
    for i in range(g.dim):
        for j in range(g.dim):
            r = vadd(g.bracket[i][j], g.bracket[j][i])
            if any(x != 0 for x in r):
                bad.append(((i, j), r))
                break
        if bad:
            break
    rep.add("antisymmetry", bad)
    bad = []
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                ek = [1 if p == k else 0 for p in range(g.dim)]
                ei = [1 if p == i else 0 for p in range(g.dim)]
                ej = [1 if p == j else 0 for p in range(g.dim)]
                r = vadd(vadd(g.bracket_vec(g.bracket[i][j], ek),
                              g.bracket_vec(g.bracket[j][k], ei)),
                         g.bracket_vec(g.bracket[k][i], ej))
                if any(x != 0 for x in r):
                    bad.append(((i, j, k), r))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("jacobi", bad)
    return rep


@dataclass
class Representation:
    algebra: LieAlgebra
    dimV: int
    rho: list  # one dimV x dimV matrix per basis element

    def __post_init__(self):
        if len(self.rho) != self.algebra.dim:
            raise DimensionMismatch("need one rho matrix per basis element")
        for m in self.rho:
            if (m.rows, m.cols) != (self.dimV, self.dimV):
                raise DimensionMismatch("rho matrices must be dimV x dimV")

    def act(self, u: list, w: list) -> list:
        out = vzeros(self.dimV)
        for i, ui in enumerate(u):
            if ui:
                out = vadd(out, vscale(ui, self.rho[i].matvec(w)))
        return out


def check_representation(rep_: Representation) -> CheckReport:
    rep = CheckReport("representation")
    rep.extend(check_lie_algebra(rep_.algebra), prefix="algebra_")
    g = rep_.algebra
    bad = []
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = sum((rep_.rho[k].scale(c) for k, c in enumerate(g.bracket[i][j]) if c),
                      RMatrix.zeros(rep_.dimV, rep_.dimV))
            rhs = rep_.rho[i] @ rep_.rho[j] - rep_.rho[j] @ rep_.rho[i]
            resid = lhs - rhs
            if not resid.is_zero():
                bad.append(((i, j), [x for row in resid.data for x in row if x][:4]))
                break
        if bad:
            break
    rep.add("bracket_to_commutator", bad)
    return rep


def trivial_rep(g: LieAlgebra, dimV: int = 1) -> Representation:
    return Representation(g, dimV, [RMatrix.zeros(dimV, dimV) for _ in range(g.dim)])


def adjoint_rep(g: LieAlgebra) -> Representation:
    return Representation(g, g.dim, [g.ad(i) for i in range(g.dim)])


@dataclass
class Cochain:
    """Totally antisymmetric map g^n -> V on strictly increasing tuples."""

    rep: Representation
    degree: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        for key in self.values:
            if (len(key) != self.degree or list(key) != sorted(set(key))
                    or any(not 0 <= i < self.rep.algebra.dim for i in key)):
                raise ValueError(f"bad cochain key {key}")

    def keys(self):
        return combinations(range(self.rep.algebra.dim), self.degree)

    def value(self, key: tuple) -> list:
        return list(self.values.get(tuple(key), vzeros(self.rep.dimV)))

    def evaluate(self, indices: tuple) -> list:
        """Value at an arbitrary index tuple, with the permutation sign."""
        if len(set(indices)) != len(indices):
            return vzeros(self.rep.dimV)
        order = tuple(sorted(range(len(indices)), key=lambda p: indices[p]))
        sign = perm_sign(order)
        base = self.value(tuple(sorted(indices)))
        return vscale(sign, base)

    def evaluate_vecs(self, vecs: list) -> list:
        """Multilinear extension to arbitrary vectors."""
        out = vzeros(self.rep.dimV)
        dim = self.rep.algebra.dim
        idx = [0] * len(vecs)

        def rec(slot: int, coeff, chosen: tuple):
            nonlocal out
            if not coeff:
                return
            if slot == len(vecs):
                out = vadd(out, vscale(coeff, self.evaluate(chosen)))
                return
            for i in range(dim):
                c = vecs[slot][i]
                if c:
                    rec(slot + 1, coeff * c, chosen + (i,))

        rec(0, 1, ())
        return out

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compat(other)
        vals = {k: vadd(self.value(k), other.value(k)) for k in self.keys()}
        return Cochain(self.rep, self.degree, _prune(vals))

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._compat(other)
        vals = {k: vsub(self.value(k), other.value(k)) for k in self.keys()}
        return Cochain(self.rep, self.degree, _prune(vals))

    def scale(self, c) -> "Cochain":
        return Cochain(self.rep, self.degree,
                       _prune({k: vscale(c, v) for k, v in self.values.items()}))

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in v) for v in self.values.values())

    def _compat(self, other: "Cochain") -> None:
        if self.degree != other.degree:
            raise DimensionMismatch("cochain degrees differ")
        if self.rep != other.rep:
            raise DimensionMismatch("cochains live over different representations")


def _prune(vals: dict) -> dict:
    return {k: v for k, v in vals.items() if any(x != 0 for x in v)}


def coboundary(w: Cochain) -> Cochain:
    """The Chevalley-Eilenberg differential, degree n to n+1.

    (delta w)(v_1..v_{n+1}) = sum_i (-1)^{i+1} rho(v_i) w(.. v_i-hat ..)
    + sum_{j<k} (-1)^{j+k} w([v_j, v_k], .. hats ..), 1-based signs.
    """
    rep = w.rep
    g = rep.algebra
    n = w.degree
    out = {}
    for key in combinations(range(g.dim), n + 1):
        acc = vzeros(rep.dimV)
        for pos in range(n + 1):
            rest = key[:pos] + key[pos + 1:]
            term = rep.rho[key[pos]].matvec(w.value(rest))
            acc = vadd(acc, vscale(-1 if pos % 2 else 1, term))
        for pj in range(n + 1):
            for pk in range(pj + 1, n + 1):
                rest = tuple(x for q, x in enumerate(key) if q not in (pj, pk))
                br = g.bracket[key[pj]][key[pk]]
                term = vzeros(rep.dimV)
                for m, c in enumerate(br):
                    if c:
                        term = vadd(term, vscale(c, w.evaluate((m,) + rest)))
                sign = -1 if (pj + pk + 2) % 2 else 1  # (-1)^{j+k}, 1-based
                acc = vadd(acc, vscale(sign, term))
        if any(x != 0 for x in acc):
            out[key] = acc
    return Cochain(rep, n + 1, out)


def cochain_basis(rep: Representation, n: int) -> list:
    """Ordered basis of C^n: (increasing tuple, V index) pairs."""
    return [(key, v) for key in combinations(range(rep.algebra.dim), n)
            for v in range(rep.dimV)]


def cochain_to_coords(w: Cochain) -> list:
    return [w.value(key)[v] for key, v in cochain_basis(w.rep, w.degree)]


def coords_to_cochain(rep: Representation, n: int, coords: list) -> Cochain:
    vals = {}
    for (key, v), c in zip(cochain_basis(rep, n), coords):
        if c:
            vals.setdefault(key, vzeros(rep.dimV))[v] = c
    return Cochain(rep, n, vals)


def coboundary_matrix(rep: Representation, n: int) -> RMatrix:
    """Matrix of delta: C^n -> C^{n+1} in the ordered bases."""
    src = cochain_basis(rep, n)
    dst = cochain_basis(rep, n + 1)
    cols = []
    for key, v in src:
        vals = vzeros(rep.dimV)
        vals[v] = 1
        w = Cochain(rep, n, {key: vals})
        img = coboundary(w)
        cols.append(cochain_to_coords(img))
    if not cols:
        return RMatrix.zeros(len(dst), 0)
    return RMatrix.from_cols(cols, rows=len(dst))


def is_cocycle(w: Cochain) -> bool:
    return coboundary(w).is_zero()


def is_coboundary(w: Cochain) -> bool:
    if w.degree == 0:
        return w.is_zero()
    m = coboundary_matrix(w.rep, w.degree - 1)
    return solve_linear(m, cochain_to_coords(w)) is not None


def cohomologous(w1: Cochain, w2: Cochain) -> bool:
    w1._compat(w2)
    return is_coboundary(w1 - w2)


def cohomology_dim(rep: Representation, n: int) -> int:
    """dim H^n = dim ker(delta_n) - rank(delta_{n-1}), all exact."""
    if n < 0:
        return 0
    delta_n = coboundary_matrix(rep, n)
    _, kernel = rank_kernel(delta_n)
    if n == 0:
        boundary_rank = 0
    else:
        boundary_rank, _ = rank_kernel(coboundary_matrix(rep, n - 1))
    return len(kernel) - boundary_rank


# ---------------------------------------------------------------------------
# two-slot structures built from a representation and a cocycle

@dataclass
class TwoSlotRecord:
    """General-n two-slot data (V0 and V_n with d = 0): the three
    conditions that carry all of its content, validated."""

    rep: Representation
    slot: int
    cocycle: Cochain
    report: CheckReport


def build_two_slot(rep: Representation, n: int, w: Cochain):
    """For n = 1 materialize the two-term structure; for n > 1 validate
    the Jacobi, representation and cocycle conditions only."""
    if w.degree != n + 2:
        raise DimensionMismatch(f"cocycle degree {w.degree}, expected {n + 2}")
    if w.rep != rep:
        raise DimensionMismatch("cocycle representation mismatch")
    if n == 1:
        g = rep.algebra
        cx = TwoTermComplex(g.dim, rep.dimV, RMatrix.zeros(g.dim, rep.dimV))
        l2_01 = [[rep.rho[i].col(a) for a in range(rep.dimV)] for i in range(g.dim)]
        l3 = [[[w.evaluate((i, j, k)) for k in range(g.dim)]
               for j in range(g.dim)] for i in range(g.dim)]
        return TwoTermLInfinity(cx, [[list(v) for v in row] for row in g.bracket],
                                l2_01, l3)
    report = CheckReport("two_slot")
    report.extend(check_representation(rep))
    report.add("cocycle", [] if is_cocycle(w) else [((), cochain_to_coords(coboundary(w))[:4])])
    return TwoSlotRecord(rep, n, w, report)


# ---------------------------------------------------------------------------
# classification

@dataclass
class ClassifyingQuadruple:
    algebra: LieAlgebra
    rep: Representation
    cocycle: Cochain
    skeletal: TwoTermLInfinity
    witness: LInfHom  # skeletal -> original, passes check_hom


def classify(L: SemistrictLie2Algebra) -> ClassifyingQuadruple:
    """Skeletalize the complex, transport the brackets along the
    equivalence, and read off (g, V, rho, [l3]).

    The transported pieces are forced by requiring the inclusion to be
    an L-infinity homomorphism: its phi2 is -tau([u., u.]), and l3 on
    the skeleton is the projected seven-term combination.  Everything
    is verified before returning.
    """
    v = L.data
    axioms = check_axioms(v)
    if not axioms.passed:
        raise ValueError(f"structure fails axiom {axioms.first_failure.name}")
    sk = skeletalize_complex(v.complex)
    u0, u1 = sk.include.phi0, sk.include.phi1
    v0, v1 = sk.project.phi0, sk.project.phi1
    tau = sk.homotopy.tau
    n0 = sk.skeletal.dim0
    n1 = sk.skeletal.dim1

    ue = [u0.col(i) for i in range(n0)]  # images of the skeleton's basis
    bracket = [[v0.matvec(v.bracket00(ue[i], ue[j])) for j in range(n0)] for i in range(n0)]
    l2_01 = [[v1.matvec(v.act(ue[i], u1.col(a))) for a in range(n1)] for i in range(n0)]
    phi2 = [[vneg(tau.matvec(v.bracket00(ue[i], ue[j]))) for j in range(n0)]
            for i in range(n0)]

    def phi2_vec(u: list, w: list) -> list:
        out = vzeros(v.dim1)
        for i, ui in enumerate(u):
            if ui:
                for j, wj in enumerate(w):
                    if wj:
                        out = vadd(out, vscale(ui * wj, phi2[i][j]))
        return out

    sk_bracket_vec = LieAlgebra(n0, bracket).bracket_vec

    l3 = zero_l3(n0, n1)
    eb = [[1 if p == i else 0 for p in range(n0)] for i in range(n0)]
    for i in range(n0):
        for j in range(n0):
            for k in range(n0):
                r = v.l3_eval(ue[i], ue[j], ue[k])
                r = vadd(r, v.act(ue[i], phi2[j][k]))
                r = vsub(r, v.act(ue[j], phi2[i][k]))  # [phi2(x,z), u0 y]
                r = vadd(r, phi2_vec(eb[i], sk_bracket_vec(eb[j], eb[k])))
                r = vadd(r, phi2_vec(sk_bracket_vec(eb[i], eb[k]), eb[j]))
                r = vadd(r, v.act(ue[k], phi2[i][j]))  # -[phi2(x,y), u0 z]
                r = vsub(r, phi2_vec(sk_bracket_vec(eb[i], eb[j]), eb[k]))
                if any(x != 0 for x in v.d.matvec(r)):
                    raise AssertionError("transported l3 falls outside ker(d)")
                l3[i][j][k] = v1.matvec(r)

    skeletal = TwoTermLInfinity(sk.skeletal, bracket, l2_01, l3)
    algebra = LieAlgebra(n0, bracket)
    rep = Representation(algebra, n1,
                         [RMatrix.from_cols([l2_01[i][a] for a in range(n1)], rows=n1)
                          for i in range(n0)])
    vals = {}
    for key in combinations(range(n0), 3):
        val = l3[key[0]][key[1]][key[2]]
        if any(x != 0 for x in val):
            vals[key] = val
    cocycle = Cochain(rep, 3, vals)
    witness = LInfHom(skeletal, v,
                      ChainMap(sk.skeletal, v.complex, u0, u1),
                      phi2)
    if not check_axioms(skeletal).passed:
        raise AssertionError("transported structure fails the axioms")
    if not is_cocycle(cocycle):
        raise AssertionError("transported l3 is not a cocycle")
    return ClassifyingQuadruple(algebra, rep, cocycle, skeletal, witness)


def equivalence_from_cohomologous(rep: Representation, w1: Cochain, w2: Cochain):
    """Explicit invertible homomorphism two_slot(w1) -> two_slot(w2) when
    w1 and w2 are cohomologous: the identity chain map with phi2 a primitive
    of w1 - w2 found by solving the coboundary system.

    Returns None when the classes differ.  With the construction of
    classify this is the backward direction of the classification: the
    forward direction (equivalent inputs give cohomologous outputs) is a
    test, this produces the witness for the converse.
    """
    m = coboundary_matrix(rep, 2)
    sol = solve_linear(m, cochain_to_coords(w1 - w2))
    if sol is None:
        return None
    theta = coords_to_cochain(rep, 2, sol)
    src = build_two_slot(rep, 1, w1)
    dst = build_two_slot(rep, 1, w2)
    n0 = rep.algebra.dim
    phi2 = [[theta.evaluate((i, j)) for j in range(n0)] for i in range(n0)]
    return LInfHom(src, dst, ChainMap(src.complex, dst.complex,
                                      RMatrix.identity(n0), RMatrix.identity(rep.dimV)),
                   phi2)


# ---------------------------------------------------------------------------
# the Killing form and the canonical examples

def killing_form(g: LieAlgebra) -> RMatrix:
    """<x, y> = tr(ad x ad y)."""
    ads = [g.ad(i) for i in range(g.dim)]
    out = RMatrix.zeros(g.dim, g.dim)
    for i in range(g.dim):
        for j in range(g.dim):
            prod = ads[i] @ ads[j]
            out.data[i][j] = sum(prod.data[k][k] for k in range(g.dim))
    return out


def killing_triple_cochain(g: LieAlgebra, scale=1) -> Cochain:
    """The 3-cochain scale * <x, [y, z]> with values in the trivial line."""
    rep = trivial_rep(g, 1)
    K = killing_form(g)
    vals = {}
    for (i, j, k) in combinations(range(g.dim), 3):
        br = g.bracket[j][k]
        val = scale * sum(K.data[i][m] * c for m, c in enumerate(br) if c)
        if val:
            vals[(i, j, k)] = [val]
    return Cochain(rep, 3, vals)


def build_g_hbar(g: LieAlgebra, hbar) -> SemistrictLie2Algebra:
    """The skeletal structure on (g, Q, trivial) with l3 = hbar <x,[y,z]>."""
    rep = trivial_rep(g, 1)
    w = killing_triple_cochain(g, hbar)
    return from_linfty(build_two_slot(rep, 1, w))


def build_cross_product() -> SemistrictLie2Algebra:
    """Q^3 with the cross product and l3(x, y, z) = x . (y x z)."""
    g = so3_algebra()
    rep = trivial_rep(g, 1)
    w = Cochain(rep, 3, {(0, 1, 2): [1]})
    return from_linfty(build_two_slot(rep, 1, w))


def so3_algebra() -> LieAlgebra:
    """Basis with e1 x e2 = e3 cyclically (the cross product)."""
    b = [[vzeros(3) for _ in range(3)] for _ in range(3)]
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        b[i][j][k] = 1
        b[j][i][k] = -1
    return LieAlgebra(3, b)


def sl2_algebra() -> LieAlgebra:
    """Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    b = [[vzeros(3) for _ in range(3)] for _ in range(3)]
    b[0][1][1], b[1][0][1] = 2, -2
    b[0][2][2], b[2][0][2] = -2, 2
    b[1][2][0], b[2][1][0] = 1, -1
    return LieAlgebra(3, b)


def abelian_algebra(n: int) -> LieAlgebra:
    return LieAlgebra(n, [[vzeros(n) for _ in range(n)] for _ in range(n)])


# ---------------------------------------------------------------------------
# JSON formats

def algebra_to_json(g: LieAlgebra) -> dict:
    return {"dim": g.dim, "bracket": tensor_to_json(g.bracket)}


def algebra_from_json(obj: dict) -> LieAlgebra:
    dim = as_count(need(obj, "dim"), "dim")
    bracket = tensor_from_json(need(obj, "bracket"), (dim,) * 3, "bracket")
    return LieAlgebra(dim, bracket)


def rep_to_json(r: Representation) -> dict:
    return {"dimV": r.dimV, "rho": [mat_to_json(m) for m in r.rho]}


def rep_from_json(g: LieAlgebra, obj: dict) -> Representation:
    dimV = as_count(need(obj, "dimV"), "dimV")
    raw = need(obj, "rho")
    if not isinstance(raw, list) or len(raw) != g.dim:
        raise FixtureError("field 'rho' must list one matrix per basis element")
    try:
        rho = [mat_from_json(m, rows=dimV, cols=dimV) for m in raw]
    except (ValueError, DimensionMismatch) as exc:
        raise FixtureError(f"field 'rho': {exc}") from None
    return Representation(g, dimV, rho)


def cochain_to_json(w: Cochain) -> dict:
    return {"degree": w.degree,
            "values": {"<".join(str(i) for i in k): tensor_to_json(list(v))
                       for k, v in sorted(w.values.items())}}


def cochain_from_json(rep: Representation, obj: dict) -> Cochain:
    degree = as_count(need(obj, "degree"), "degree")
    raw = need(obj, "values")
    if not isinstance(raw, dict):
        raise FixtureError("field 'values' must map index tuples to vectors")
    vals = {}
    for key, vec in raw.items():
        try:
            idx = tuple(int(p) for p in key.split("<")) if key else ()
        except ValueError:
            raise FixtureError(f"field 'values': bad key {key!r}") from None
        vals[idx] = tensor_from_json(vec, (rep.dimV,), f"values[{key}]")
    return Cochain(rep, degree, vals)
