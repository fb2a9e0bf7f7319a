"""Semistrict Lie 2-algebras in categorical presentation.

The canonical store is the two-term structure-constant data; the
categorical layer (underlying 2-vector space, bracket on morphisms,
Jacobiator) is derived on demand, so the round trip with the
structure-constant presentation is the identity by construction.

In the derived space V1 = V0 + V1_arrows, a morphism's vector splits as
(source part, arrow part); brackets and Jacobiators below manipulate
those blocks directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .exactlin import (DimensionMismatch, RMatrix, mat_from_json, mat_to_json,
                       vadd, vneg, vscale, vsub, vzeros)
from .linfty import (LInfHom, TwoTermLInfinity, _check_tensor_shape, zero_l3, zero_phi2)
from .report import CheckReport
from .serialize import FixtureError, as_count, need, tensor_from_json, tensor_to_json
from .twoterm import ChainMap, TwoTermComplex
from .twovect import (LinearFunctor, LinearNatTrans, Morphism, TwoVectorSpace,
                      check_functor, check_nat_trans, compose_functors,
                      compose_morphisms, functor_T, identity_morphism)


@dataclass
class SemistrictLie2Algebra:
    data: TwoTermLInfinity
    _space: TwoVectorSpace | None = field(default=None, init=False, repr=False, compare=False)

    @property
    def space(self) -> TwoVectorSpace:
        if self._space is None:
            self._space = functor_T(self.data.complex)
        return self._space

    @property
    def dim0(self) -> int:
        return self.data.dim0

    def object_basis(self, i: int) -> list:
        v = vzeros(self.dim0)
        v[i] = 1
        return v

    def morphism(self, source_obj: list, arrow: list) -> Morphism:
        return Morphism(self.space, list(source_obj) + list(arrow))


def from_linfty(v: TwoTermLInfinity) -> SemistrictLie2Algebra:
    return SemistrictLie2Algebra(v)


def to_linfty(L: SemistrictLie2Algebra) -> TwoTermLInfinity:
    return L.data


def is_strict(L: SemistrictLie2Algebra) -> bool:
    return all(x == 0 for a in L.data.l3 for b in a for c in b for x in c)


def is_skeletal(L: SemistrictLie2Algebra) -> bool:
    return L.data.d.is_zero()


def _split(L: SemistrictLie2Algebra, m: Morphism):
    n0 = L.dim0
    return m.vec[:n0], m.vec[n0:]


def bracket_morphisms(L: SemistrictLie2Algebra, f: Morphism, g: Morphism) -> Morphism:
    """[f, g] = ([x, a], l2(fbar, a) + l2(y, gbar)) for f: x -> y, g: a -> b."""
    if f.space != L.space or g.space != L.space:
        raise DimensionMismatch("morphisms do not live in this Lie 2-algebra")
    v = L.data
    x, fbar = _split(L, f)
    a, gbar = _split(L, g)
    y = vadd(x, v.d.matvec(fbar))
    src = v.bracket00(x, a)
    arrow = vadd(vneg(v.act(a, fbar)), v.act(y, gbar))
    return L.morphism(src, arrow)


def bracket_morphisms_alt(L: SemistrictLie2Algebra, f: Morphism, g: Morphism) -> Morphism:
    """The other forced formula ([x,a], l2(x, gbar) + l2(fbar, b)); equals
    bracket_morphisms exactly whenever condition (f) holds."""
    v = L.data
    x, fbar = _split(L, f)
    a, gbar = _split(L, g)
    b = vadd(a, v.d.matvec(gbar))
    src = v.bracket00(x, a)
    arrow = vadd(v.act(x, gbar), vneg(v.act(b, fbar)))
    return L.morphism(src, arrow)


def _as_object(L: SemistrictLie2Algebra, x) -> list:
    if isinstance(x, int):
        return L.object_basis(x)
    return list(x)


def jacobiator(L: SemistrictLie2Algebra, x, y, z) -> Morphism:
    """J_{x,y,z} = ([[x,y],z], l3(x,y,z)), extended trilinearly."""
    v = L.data
    xv, yv, zv = _as_object(L, x), _as_object(L, y), _as_object(L, z)
    src = v.bracket00(v.bracket00(xv, yv), zv)
    return L.morphism(src, v.l3_eval(xv, yv, zv))


def _compose_padded(L: SemistrictLie2Algebra, stages: list) -> Morphism:
    """Compose stage sums in diagram order, adding the unique identity
    summand that makes each composite well-defined."""
    cur = None
    for named in stages:
        total = named[0]
        for m in named[1:]:
            total = total + m
        if cur is None:
            cur = total
            continue
        pad = vsub(cur.target(), total.source())
        total = total + identity_morphism(L.space, pad)
        cur = compose_morphisms(cur, total)
    return cur


def octagon_sides(L: SemistrictLie2Algebra, w, x, y, z):
    """Both composites of the Jacobiator-identity octagon at objects w,x,y,z."""
    b = L.data.bracket00
    wv, xv, yv, zv = (_as_object(L, u) for u in (w, x, y, z))

    def J(p, q, r):
        return jacobiator(L, p, q, r)

    def one(obj):
        return identity_morphism(L.space, obj)

    def Br(f, g):
        return bracket_morphisms(L, f, g)

    lhs = _compose_padded(L, [
        [J(b(wv, xv), yv, zv)],
        [Br(J(wv, xv, zv), one(yv))],
        [J(wv, b(xv, zv), yv), J(b(wv, zv), xv, yv), J(wv, xv, b(yv, zv))],
    ])
    rhs = _compose_padded(L, [
        [Br(J(wv, xv, yv), one(zv))],
        [J(b(wv, yv), xv, zv), J(wv, b(xv, yv), zv)],
        [Br(J(wv, yv, zv), one(xv))],
        [Br(one(wv), J(xv, yv, zv))],
    ])
    return lhs, rhs


def check_jacobiator_identity_categorical(L: SemistrictLie2Algebra) -> CheckReport:
    """Compare both octagon composites on every basis 4-tuple."""
    rep = CheckReport("jacobiator_identity_octagon")
    bad = []
    for tup in product(range(L.dim0), repeat=4):
        lhs, rhs = octagon_sides(L, *tup)
        if lhs != rhs:
            bad.append((tup, vsub(lhs.vec, rhs.vec)))
            break
    rep.add("octagon", bad)
    return rep


def check_jacobiator_naturality(L: SemistrictLie2Algebra) -> CheckReport:
    """Naturality of J in its third slot (the others follow from the
    complete antisymmetry): for every arrow generator f at z = 0,
    [[1_x,1_y],f] J_{x,y,t(f)} = J_{x,y,0} ([[1_x,f],1_y] + [1_x,[1_y,f]])."""
    rep = CheckReport("jacobiator_naturality")
    n0, m1 = L.dim0, L.data.dim1
    bad = []
    for i in range(n0):
        one_i = identity_morphism(L.space, L.object_basis(i))
        for j in range(n0):
            one_j = identity_morphism(L.space, L.object_basis(j))
            for a in range(m1):
                f = L.morphism(vzeros(n0), [1 if p == a else 0 for p in range(m1)])
                lhs = _compose_padded(L, [
                    [bracket_morphisms(L, bracket_morphisms(L, one_i, one_j), f)],
                    [jacobiator(L, L.object_basis(i), L.object_basis(j), f.target())],
                ])
                rhs = _compose_padded(L, [
                    [jacobiator(L, L.object_basis(i), L.object_basis(j), vzeros(n0))],
                    [bracket_morphisms(L, bracket_morphisms(L, one_i, f), one_j),
                     bracket_morphisms(L, one_i, bracket_morphisms(L, one_j, f))],
                ])
                if lhs != rhs:
                    bad.append(((i, j, a), vsub(lhs.vec, rhs.vec)))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("naturality_third_slot", bad)
    return rep


# ---------------------------------------------------------------------------
# homomorphisms

@dataclass
class Lie2Hom:
    """A homomorphism: a linear functor F plus the bracket-comparison
    2-cell F2, stored by its arrow parts (the source of F2(x,y) is
    always [F0 x, F0 y], so only the arrow tensor is kept)."""

    source: SemistrictLie2Algebra
    target: SemistrictLie2Algebra
    functor: LinearFunctor
    f2: list  # [i][j] -> arrow vector in the target's V1

    def __post_init__(self):
        if self.functor.source != self.source.space or self.functor.target != self.target.space:
            raise DimensionMismatch("functor endpoints disagree with the structures")
        _check_tensor_shape(self.f2, (self.source.dim0, self.source.dim0,
                                      self.target.data.dim1), "f2")

    def f2_vec(self, u: list, w: list) -> list:
        out = vzeros(self.target.data.dim1)
        for i, ui in enumerate(u):
            if ui:
                for j, wj in enumerate(w):
                    if wj:
                        out = vadd(out, vscale(ui * wj, self.f2[i][j]))
        return out

    def f2_morphism(self, u: list, w: list) -> Morphism:
        tgt = self.target
        f0u = self.functor.f0.matvec(u)
        f0w = self.functor.f0.matvec(w)
        return tgt.morphism(tgt.data.bracket00(f0u, f0w), self.f2_vec(u, w))


def identity_lie2_hom(L: SemistrictLie2Algebra) -> Lie2Hom:
    eye = LinearFunctor(L.space, L.space, RMatrix.identity(L.space.dim0),
                        RMatrix.identity(L.space.dim1))
    return Lie2Hom(L, L, eye, zero_phi2(L.dim0, L.data.dim1))


def check_lie2_hom(F: Lie2Hom) -> CheckReport:
    """Functor laws, F2 skew-symmetry and target row, naturality, and the
    hexagon, all evaluated categorically by composing morphisms."""
    rep = CheckReport("lie2_hom")
    rep.extend(check_functor(F.functor), prefix="functor_")
    src, tgt = F.source, F.target
    n0 = src.dim0

    bad = [((i, j), vadd(F.f2[i][j], F.f2[j][i]))
           for i in range(n0) for j in range(n0)
           if any(x != 0 for x in vadd(F.f2[i][j], F.f2[j][i]))]
    rep.add("f2_antisymmetry", bad[:1])

    e = [src.object_basis(i) for i in range(n0)]
    bad = []
    for i in range(n0):
        for j in range(n0):
            m = F.f2_morphism(e[i], e[j])
            want = F.functor.f0.matvec(src.data.bracket00(e[i], e[j]))
            r = vsub(m.target(), want)
            if any(x != 0 for x in r):
                bad.append(((i, j), r))
                break
        if bad:
            break
    rep.add("f2_target", bad)

    # naturality in the second slot: compare F applied to [1_x, h] with
    # the bracket of images, corrected by F2 at (x, dh)
    bad = []
    m1 = src.data.dim1
    for i in range(n0):
        one_i = identity_morphism(src.space, e[i])
        for a in range(m1):
            h = src.morphism(vzeros(n0), [1 if p == a else 0 for p in range(m1)])
            lhs = F.f2_vec(e[i], src.data.d.col(a))
            img = F.functor.apply(bracket_morphisms(src, one_i, h))
            bracket_img = bracket_morphisms(tgt, F.functor.apply(one_i), F.functor.apply(h))
            r = vsub(lhs, vsub(_split(tgt, img)[1], _split(tgt, bracket_img)[1]))
            if any(x != 0 for x in r):
                bad.append(((i, a), r))
                break
        if bad:
            break
    rep.add("f2_naturality", bad)

    bad = []
    for i in range(n0):
        for j in range(n0):
            for k in range(n0):
                lhs, rhs = _hexagon_sides(F, e[i], e[j], e[k])
                if lhs != rhs:
                    bad.append(((i, j, k), vsub(lhs.vec, rhs.vec)))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("hexagon", bad)
    return rep


def _hexagon_sides(F: Lie2Hom, x: list, y: list, z: list):
    """Both composites of the bracket-preservation hexagon at (x, y, z)."""
    src, tgt = F.source, F.target
    f0 = F.functor.f0
    fx, fy, fz = f0.matvec(x), f0.matvec(y), f0.matvec(z)

    def one(obj):
        return identity_morphism(tgt.space, obj)

    top_right = _compose_padded(tgt, [
        [jacobiator(tgt, fx, fy, fz)],
        [bracket_morphisms(tgt, one(fx), F.f2_morphism(y, z)),
         bracket_morphisms(tgt, F.f2_morphism(x, z), one(fy))],
        [F.f2_morphism(x, src.data.bracket00(y, z)),
         F.f2_morphism(src.data.bracket00(x, z), y)],
    ])
    left_bottom = _compose_padded(tgt, [
        [bracket_morphisms(tgt, F.f2_morphism(x, y), one(fz))],
        [F.f2_morphism(src.data.bracket00(x, y), z)],
        [F.functor.apply(jacobiator(src, x, y, z))],
    ])
    return left_bottom, top_right


def compose_lie2_homs(F: Lie2Hom, G: Lie2Hom) -> Lie2Hom:
    """(FG)_2(x,y) is G2 at (F0 x, F0 y) followed by G1(F2(x,y))."""
    if F.target.data != G.source.data:
        raise DimensionMismatch("homomorphisms are not composable")
    functor = compose_functors(F.functor, G.functor)
    n0 = F.source.dim0
    n0_tgt = G.target.dim0
    e = [F.source.object_basis(i) for i in range(n0)]
    f2 = []
    for i in range(n0):
        row = []
        for j in range(n0):
            first = G.f2_morphism(F.functor.f0.matvec(e[i]), F.functor.f0.matvec(e[j]))
            second = G.functor.apply(F.f2_morphism(e[i], e[j]))
            row.append(compose_morphisms(first, second).vec[n0_tgt:])
        f2.append(row)
    return Lie2Hom(F.source, G.target, functor, f2)


@dataclass
class Lie2TwoHom:
    from_hom: Lie2Hom
    to_hom: Lie2Hom
    nat: LinearNatTrans

    def __post_init__(self):
        f, g = self.from_hom, self.to_hom
        if f.source.data != g.source.data or f.target.data != g.target.data:
            raise DimensionMismatch("2-homomorphism endpoints must be parallel")
        if self.nat.from_functor != f.functor or self.nat.to_functor != g.functor:
            raise DimensionMismatch("underlying natural transformation endpoints disagree")


def check_lie2_two_hom(t: Lie2TwoHom) -> CheckReport:
    """Naturality of the underlying 2-cell plus the bracket square
    [theta_x, theta_y] then G2 = F2 then theta_[x,y]."""
    rep = CheckReport("lie2_two_hom")
    rep.extend(check_nat_trans(t.nat), prefix="nat_")
    F, G = t.from_hom, t.to_hom
    src, tgt = F.source, F.target
    n0 = src.dim0
    e = [src.object_basis(i) for i in range(n0)]
    bad = []
    for i in range(n0):
        th_i = t.nat.component(e[i])
        for j in range(n0):
            th_j = t.nat.component(e[j])
            left = _compose_padded(tgt, [
                [bracket_morphisms(tgt, th_i, th_j)],
                [G.f2_morphism(e[i], e[j])],
            ])
            th_bracket = Morphism(tgt.space, t.nat.theta.matvec(src.data.bracket00(e[i], e[j])))
            right = _compose_padded(tgt, [
                [F.f2_morphism(e[i], e[j])],
                [th_bracket],
            ])
            if left != right:
                bad.append(((i, j), vsub(left.vec, right.vec)))
                break
        if bad:
            break
    rep.add("bracket_square", bad)
    return rep


def hom_from_linf(f: LInfHom) -> Lie2Hom:
    """Transport an L-infinity homomorphism across the dictionary:
    F0 = phi0, F1 = phi0 + phi1 blockwise, F2 arrow = phi2."""
    from .exactlin import block_diag
    src, tgt = from_linfty(f.source), from_linfty(f.target)
    functor = LinearFunctor(src.space, tgt.space, f.chain.phi0,
                            block_diag(f.chain.phi0, f.chain.phi1))
    return Lie2Hom(src, tgt, functor, [[list(v) for v in row] for row in f.phi2])


def hom_to_linf(F: Lie2Hom) -> LInfHom:
    """Read the chain map off a valid functor's block structure."""
    src, tgt = F.source.data, F.target.data
    n0s, n0t = src.dim0, tgt.dim0
    phi0 = F.functor.f0
    phi1 = RMatrix(tgt.dim1, src.dim1,
                   [[F.functor.f1.data[n0t + b][n0s + a] for a in range(src.dim1)]
                    for b in range(tgt.dim1)])
    chain = ChainMap(src.complex, tgt.complex, phi0, phi1)
    return LInfHom(src, tgt, chain, [[list(v) for v in row] for row in F.f2])


# ---------------------------------------------------------------------------
# differential crossed modules

@dataclass
class DifferentialCrossedModule:
    """(g, h, t, alpha): Lie algebras as structure constants, a map
    t: h -> g, and an action tensor alpha[i][a][b] (coefficient of the
    h-basis b in alpha(g_i)(h_a))."""

    g_dim: int
    g_bracket: list
    h_dim: int
    h_bracket: list
    t: RMatrix
    alpha: list

    def __post_init__(self):
        _check_tensor_shape(self.g_bracket, (self.g_dim,) * 3, "g_bracket")
        _check_tensor_shape(self.h_bracket, (self.h_dim,) * 3, "h_bracket")
        _check_tensor_shape(self.alpha, (self.g_dim, self.h_dim, self.h_dim), "alpha")
        if (self.t.rows, self.t.cols) != (self.g_dim, self.h_dim):
            raise DimensionMismatch("t must map h into g")


def _bracket_vec(bracket: list, dim: int, u: list, v: list) -> list:
    out = vzeros(dim)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    out = vadd(out, vscale(ui * vj, bracket[i][j]))
    return out


def _antisym_violations(bracket: list, dim: int) -> list:
    for i in range(dim):
        for j in range(dim):
            r = vadd(bracket[i][j], bracket[j][i])
            if any(x != 0 for x in r):
                return [((i, j), r)]
    return []


def _jacobi_violations(bracket: list, dim: int) -> list:
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                r = vadd(vadd(_bracket_vec(bracket, dim, bracket[i][j],
                                           [1 if p == k else 0 for p in range(dim)]),
                              _bracket_vec(bracket, dim, bracket[j][k],
                                           [1 if p == i else 0 for p in range(dim)])),
                         _bracket_vec(bracket, dim, bracket[k][i],
                                      [1 if p == j else 0 for p in range(dim)]))
                if any(x != 0 for x in r):
                    return [((i, j, k), r)]
    return []


# which axiom of the structure-constant image detects each crossed-module
# failure; conditions about the h bracket alone have no image counterpart
# because the image stores no bracket on V1
DCM_FAILURE_TO_AXIOM = {
    "g_antisymmetry": "a_bracket_antisymmetry",
    "g_jacobi": "g_jacobi_up_to_d",
    "equivariance": "e_differential_action",
    "action_homomorphism": "h_l3_naturality",
    "peiffer_antisymmetry": "f_differential_symmetry",
}


def check_crossed_module(m: DifferentialCrossedModule) -> CheckReport:
    rep = CheckReport("differential_crossed_module")
    rep.add("g_antisymmetry", _antisym_violations(m.g_bracket, m.g_dim))
    rep.add("g_jacobi", _jacobi_violations(m.g_bracket, m.g_dim))
    rep.add("h_antisymmetry", _antisym_violations(m.h_bracket, m.h_dim))
    rep.add("h_jacobi", _jacobi_violations(m.h_bracket, m.h_dim))

    hb = [ [1 if p == a else 0 for p in range(m.h_dim)] for a in range(m.h_dim)]
    gb = [ [1 if p == i else 0 for p in range(m.g_dim)] for i in range(m.g_dim)]

    def act(i: int, h: list) -> list:
        out = vzeros(m.h_dim)
        for a, c in enumerate(h):
            if c:
                out = vadd(out, vscale(c, m.alpha[i][a]))
        return out

    def act_vec(u: list, h: list) -> list:
        out = vzeros(m.h_dim)
        for i, c in enumerate(u):
            if c:
                out = vadd(out, vscale(c, act(i, h)))
        return out

    bad = []
    for a in range(m.h_dim):
        for b in range(m.h_dim):
            lhs = m.t.matvec(m.h_bracket[a][b])
            rhs = _bracket_vec(m.g_bracket, m.g_dim, m.t.col(a), m.t.col(b))
            r = vsub(lhs, rhs)
            if any(x != 0 for x in r):
                bad.append(((a, b), r))
                break
        if bad:
            break
    rep.add("t_homomorphism", bad)

    bad = []
    for i in range(m.g_dim):
        for a in range(m.h_dim):
            for b in range(m.h_dim):
                lhs = act(i, m.h_bracket[a][b])
                rhs = vadd(_bracket_vec(m.h_bracket, m.h_dim, m.alpha[i][a], hb[b]),
                           _bracket_vec(m.h_bracket, m.h_dim, hb[a], m.alpha[i][b]))
                r = vsub(lhs, rhs)
                if any(x != 0 for x in r):
                    bad.append(((i, a, b), r))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("derivation", bad)

    bad = []
    for i in range(m.g_dim):
        for j in range(m.g_dim):
            for a in range(m.h_dim):
                lhs = act_vec(m.g_bracket[i][j], hb[a])
                rhs = vsub(act(i, m.alpha[j][a]), act(j, m.alpha[i][a]))
                r = vsub(lhs, rhs)
                if any(x != 0 for x in r):
                    bad.append(((i, j, a), r))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("action_homomorphism", bad)

    bad = []
    for i in range(m.g_dim):
        for a in range(m.h_dim):
            lhs = m.t.matvec(m.alpha[i][a])
            rhs = _bracket_vec(m.g_bracket, m.g_dim, gb[i], m.t.col(a))
            r = vsub(lhs, rhs)
            if any(x != 0 for x in r):
                bad.append(((i, a), r))
                break
        if bad:
            break
    rep.add("equivariance", bad)

    bad = []
    anti = []
    for a in range(m.h_dim):
        for b in range(m.h_dim):
            lhs = act_vec(m.t.col(a), hb[b])
            r = vsub(lhs, m.h_bracket[a][b])
            if any(x != 0 for x in r) and not bad:
                bad.append(((a, b), r))
            sym = vadd(act_vec(m.t.col(a), hb[b]), act_vec(m.t.col(b), hb[a]))
            if any(x != 0 for x in sym) and not anti:
                anti.append(((a, b), sym))
    rep.add("peiffer", bad)
    rep.add("peiffer_antisymmetry", anti)
    return rep


def from_crossed_module(m: DifferentialCrossedModule) -> SemistrictLie2Algebra:
    """V0 = g, V1 = h, d = t, bracket = g bracket, action = alpha, l3 = 0."""
    cx = TwoTermComplex(m.g_dim, m.h_dim, m.t)
    data = TwoTermLInfinity(cx, [[list(v) for v in row] for row in m.g_bracket],
                            [[list(v) for v in row] for row in m.alpha],
                            zero_l3(m.g_dim, m.h_dim))
    return from_linfty(data)


def to_crossed_module(L: SemistrictLie2Algebra) -> DifferentialCrossedModule:
    """Inverse reading; the h bracket is recovered from the Peiffer identity."""
    if not is_strict(L):
        raise ValueError("only strict Lie 2-algebras come from crossed modules")
    v = L.data
    h_bracket = []
    for a in range(v.dim1):
        row = []
        for b in range(v.dim1):
            hb = [1 if p == b else 0 for p in range(v.dim1)]
            row.append(v.act(v.d.col(a), hb))
        h_bracket.append(row)
    return DifferentialCrossedModule(v.dim0, [[list(x) for x in r] for r in v.l2_00],
                                     v.dim1, h_bracket, v.d,
                                     [[list(x) for x in r] for r in v.l2_01])


def dcm_to_json(m: DifferentialCrossedModule) -> dict:
    return {"g": {"dim": m.g_dim, "bracket": tensor_to_json(m.g_bracket)},
            "h": {"dim": m.h_dim, "bracket": tensor_to_json(m.h_bracket)},
            "t": mat_to_json(m.t), "alpha": tensor_to_json(m.alpha)}


def dcm_from_json(obj: dict) -> DifferentialCrossedModule:
    g = need(obj, "g")
    h = need(obj, "h")
    g_dim = as_count(need(g, "dim", "g"), "g.dim")
    h_dim = as_count(need(h, "dim", "h"), "h.dim")
    g_bracket = tensor_from_json(need(g, "bracket", "g"), (g_dim,) * 3, "g.bracket")
    h_bracket = tensor_from_json(need(h, "bracket", "h"), (h_dim,) * 3, "h.bracket")
    try:
        t = mat_from_json(need(obj, "t"), rows=g_dim, cols=h_dim)
    except (ValueError, DimensionMismatch) as exc:
        raise FixtureError(f"field 't': {exc}") from None
    alpha = tensor_from_json(need(obj, "alpha"), (g_dim, h_dim, h_dim), "alpha")
    return DifferentialCrossedModule(g_dim, g_bracket, h_dim, h_bracket, t, alpha)
