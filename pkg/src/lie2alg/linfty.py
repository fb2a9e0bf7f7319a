"""Two-term L-infinity algebras as structure-constant data.

Storage conventions (all nested lists of exact rationals):

* ``l2_00[i][j][k]``: coefficient of e_k in [e_i, e_j]  (V0 x V0 -> V0)
* ``l2_01[i][a][b]``: coefficient of f_b in [e_i, f_a]  (V0 x V1 -> V1)
* ``l3[i][j][k][m]``: coefficient of f_m in l3(e_i, e_j, e_k)

The bracket on V1 x V0 is determined by [h, x] = -[x, h] and the
bracket on V1 x V1 vanishes, so neither is stored.  Antisymmetry is
validated, not canonicalized: invalid candidates stay representable so
negative fixtures can be reported on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .exactlin import (DimensionMismatch, RMatrix, mat_from_json, mat_to_json,
                       vadd, vneg, vscale, vsub, vzeros)
from .report import CheckReport
from .serialize import FixtureError, as_count, need, tensor_from_json, tensor_to_json
from .twoterm import (ChainHomotopy, ChainMap, TwoTermComplex, check_chain_map,
                      check_homotopy, compose_chain_maps, identity_chain_map)


@dataclass
class TwoTermLInfinity:
    complex: TwoTermComplex
    l2_00: list
    l2_01: list
    l3: list

    def __post_init__(self):
        n0, n1 = self.dim0, self.dim1
        _check_tensor_shape(self.l2_00, (n0, n0, n0), "l2_00")
        _check_tensor_shape(self.l2_01, (n0, n1, n1), "l2_01")
        _check_tensor_shape(self.l3, (n0, n0, n0, n1), "l3")

    @property
    def dim0(self) -> int:
        return self.complex.dim0

    @property
    def dim1(self) -> int:
        return self.complex.dim1

    @property
    def d(self) -> RMatrix:
        return self.complex.d

    # bilinear / trilinear extensions over V0 and V1 vectors
    def bracket00(self, u: list, v: list) -> list:
        out = vzeros(self.dim0)
        for i, ui in enumerate(u):
            if ui:
                row = self.l2_00[i]
                for j, vj in enumerate(v):
                    if vj:
                        c = ui * vj
                        for k, x in enumerate(row[j]):
                            if x:
                                out[k] += c * x
        return out

    def act(self, u: list, h: list) -> list:
        """l2 on V0 x V1: the action of u on the arrow vector h."""
        out = vzeros(self.dim1)
        for i, ui in enumerate(u):
            if ui:
                row = self.l2_01[i]
                for a, ha in enumerate(h):
                    if ha:
                        c = ui * ha
                        for b, x in enumerate(row[a]):
                            if x:
                                out[b] += c * x
        return out

    def l3_eval(self, u: list, v: list, w: list) -> list:
        out = vzeros(self.dim1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    if vj:
                        cij = ui * vj
                        row = self.l3[i][j]
                        for k, wk in enumerate(w):
                            if wk:
                                c = cij * wk
                                for m, x in enumerate(row[k]):
                                    if x:
                                        out[m] += c * x
        return out


def _check_tensor_shape(t, dims: tuple, name: str) -> None:
    if not dims:
        return
    if not isinstance(t, list) or len(t) != dims[0]:
        raise DimensionMismatch(f"{name} must have length {dims[0]} at this level")
    for x in t:
        _check_tensor_shape(x, dims[1:], name)


def zero_l2_00(n0: int) -> list:
    return [[vzeros(n0) for _ in range(n0)] for _ in range(n0)]


def zero_l2_01(n0: int, n1: int) -> list:
    return [[vzeros(n1) for _ in range(n1)] for _ in range(n0)]


def zero_l3(n0: int, n1: int) -> list:
    return [[[vzeros(n1) for _ in range(n0)] for _ in range(n0)] for _ in range(n0)]


def zero_phi2(n0: int, n1: int) -> list:
    return [[vzeros(n1) for _ in range(n0)] for _ in range(n0)]


# ---------------------------------------------------------------------------
# unshuffles and Koszul signs

def unshuffles(j: int, n: int) -> list:
    """(j, n-j)-unshuffles of {0..n-1} as value tuples, lexicographic.

    j = n is accepted and yields the identity alone, the degenerate
    block split the arity-n oracle needs.
    """
    if j == n:
        return [tuple(range(n))]
    if not 1 <= j <= n - 1:
        raise ValueError(f"block size {j} out of range for n = {n}")
    out = []
    for left in combinations(range(n), j):
        chosen = set(left)
        out.append(left + tuple(x for x in range(n) if x not in chosen))
    return out


@dataclass
class SignedPermutation:
    """A permutation together with the degrees of the arguments it moves."""

    perm: tuple
    degrees: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"not a permutation: {self.perm}")
        if len(self.degrees) != len(self.perm):
            raise ValueError("degree list length mismatch")


def perm_sign(perm: tuple) -> int:
    inv = sum(1 for u in range(len(perm)) for v in range(u + 1, len(perm))
              if perm[u] > perm[v])
    return -1 if inv % 2 else 1


def koszul_epsilon(p: SignedPermutation) -> int:
    """Sign from moving graded arguments past each other, (-1)^{pq} per swap."""
    eps = 1
    perm, deg = p.perm, p.degrees
    for u in range(len(perm)):
        for v in range(u + 1, len(perm)):
            if perm[u] > perm[v] and deg[perm[u]] * deg[perm[v]] % 2:
                eps = -eps
    return eps


def koszul_chi(p: SignedPermutation) -> int:
    """chi(sigma) = sgn(sigma) * epsilon(sigma)."""
    return perm_sign(p.perm) * koszul_epsilon(p)


# ---------------------------------------------------------------------------
# the axiom list (a)-(i)

def check_axioms(v: TwoTermLInfinity, increasing_only: bool = False) -> CheckReport:
    """Verify conditions (a)-(i) entry-wise on basis tuples.

    (b) and (c) hold by representation and are reported as vacuous
    passes.  With increasing_only the (g)/(i) sweeps restrict to
    strictly increasing tuples, valid once (a)/(d) have passed.
    """
    rep = CheckReport("two_term_l_infinity")
    n0, n1 = v.dim0, v.dim1
    d = v.d

    bad = []
    for i in range(n0):
        for j in range(n0):
            r = vadd(v.l2_00[i][j], v.l2_00[j][i])
            if not all(x == 0 for x in r):
                bad.append(((i, j), r))
                break
        if bad:
            break
    a_ok = not bad
    rep.add("a_bracket_antisymmetry", bad)
    rep.add_pass("b_mixed_antisymmetry")   # determined by storage
    rep.add_pass("c_bracket_degree_two")   # no V2, nothing to store

    bad = []
    for i in range(n0):
        for j in range(n0):
            for k in range(n0):
                r1 = vadd(v.l3[i][j][k], v.l3[j][i][k])
                r2 = vadd(v.l3[i][j][k], v.l3[i][k][j])
                if not all(x == 0 for x in r1):
                    bad.append(((i, j, k), r1))
                elif not all(x == 0 for x in r2):
                    bad.append(((i, j, k), r2))
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    d_ok = not bad
    rep.add("d_l3_antisymmetry", bad)

    dcol = [d.col(a) for a in range(n1)]

    bad = []
    for i in range(n0):
        for a in range(n1):
            lhs = d.matvec(v.l2_01[i][a])
            rhs = v.bracket00([1 if p == i else 0 for p in range(n0)], dcol[a])
            r = vsub(lhs, rhs)
            if not all(x == 0 for x in r):
                bad.append(((i, a), r))
                break
        if bad:
            break
    rep.add("e_differential_action", bad)

    bad = []
    for a in range(n1):
        for b in range(n1):
            lhs = vzeros(n1)
            for m, c in enumerate(dcol[a]):
                if c:
                    lhs = vadd(lhs, vscale(c, v.l2_01[m][b]))
            rhs = vzeros(n1)
            for m, c in enumerate(dcol[b]):
                if c:
                    rhs = vadd(rhs, vscale(c, v.l2_01[m][a]))
            r = vadd(lhs, rhs)  # [dh,k] = [h,dk] means lhs = -rhs
            if not all(x == 0 for x in r):
                bad.append(((a, b), r))
                break
        if bad:
            break
    rep.add("f_differential_symmetry", bad)

    def bb(i: int, j: int) -> list:
        return v.l2_00[i][j]

    def bb_vec_basis(u: list, k: int) -> list:
        out = vzeros(n0)
        for m, c in enumerate(u):
            if c:
                out = vadd(out, vscale(c, v.l2_00[m][k]))
        return out

    def l3_vec_basis(u: list, j: int, k: int) -> list:
        out = vzeros(n1)
        for m, c in enumerate(u):
            if c:
                out = vadd(out, vscale(c, v.l3[m][j][k]))
        return out

    def act_basis(i: int, h: list) -> list:
        out = vzeros(n1)
        for b, c in enumerate(h):
            if c:
                out = vadd(out, vscale(c, v.l2_01[i][b]))
        return out

    g_tuples = (combinations(range(n0), 3) if increasing_only and a_ok and d_ok
                else product(range(n0), repeat=3))
    bad = []
    for (i, j, k) in g_tuples:
        lhs = d.matvec(v.l3[i][j][k])
        rhs = vadd(vsub(bb_vec_basis(bb(i, k), j), bb_vec_basis(bb(i, j), k)),
                   vneg(bb_vec_basis(bb(j, k), i)))
        # [i,[j,k]] = -[[j,k],i]
        r = vsub(lhs, rhs)
        if not all(x == 0 for x in r):
            bad.append(((i, j, k), r))
            break
    rep.add("g_jacobi_up_to_d", bad)

    bad = []
    for a in range(n1):
        for i in range(n0):
            for j in range(n0):
                lhs = l3_vec_basis(dcol[a], i, j)
                t1 = vneg(act_basis_vec(v, bb(i, j), a))
                t2 = vneg(act_basis(j, v.l2_01[i][a]))
                t3 = act_basis(i, v.l2_01[j][a])
                r = vsub(lhs, vadd(vadd(t1, t2), t3))
                if not all(x == 0 for x in r):
                    bad.append(((a, i, j), r))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("h_l3_naturality", bad)

    i_tuples = (combinations(range(n0), 4) if increasing_only and a_ok and d_ok
                else product(range(n0), repeat=4))
    bad = []
    for (p, q, r_, s) in i_tuples:
        lhs = vadd(vadd(vneg(act_basis(s, v.l3[p][q][r_])),
                        vneg(act_basis(q, v.l3[p][r_][s]))),
                   vadd(l3_vec_basis(bb(p, r_), q, s), l3_vec_basis(bb(q, s), p, r_)))
        rhs = vadd(vadd(vadd(vneg(act_basis(r_, v.l3[p][q][s])),
                             vneg(act_basis(p, v.l3[q][r_][s]))),
                        vadd(l3_vec_basis(bb(p, q), r_, s), l3_vec_basis(bb(p, s), q, r_))),
                   vadd(l3_vec_basis(bb(q, r_), p, s), l3_vec_basis(bb(r_, s), p, q)))
        res = vsub(lhs, rhs)
        if not all(x == 0 for x in res):
            bad.append(((p, q, r_, s), res))
            break
    rep.add("i_jacobiator_coherence", bad)
    return rep


def act_basis_vec(v: TwoTermLInfinity, u: list, a: int) -> list:
    """l2(u, f_a) for a V0 vector u and basis index a."""
    out = vzeros(v.dim1)
    for m, c in enumerate(u):
        if c:
            out = vadd(out, vscale(c, v.l2_01[m][a]))
    return out


AXIOM_NAMES = ["a_bracket_antisymmetry", "b_mixed_antisymmetry", "c_bracket_degree_two",
               "d_l3_antisymmetry", "e_differential_action", "f_differential_symmetry",
               "g_jacobi_up_to_d", "h_l3_naturality", "i_jacobiator_coherence"]


# ---------------------------------------------------------------------------
# the generalized Jacobi oracle

def _graded_element(v: TwoTermLInfinity, deg: int, idx: int):
    vec = vzeros(v.dim0 if deg == 0 else v.dim1)
    vec[idx] = 1
    return (deg, vec)


def _graded_bracket(v: TwoTermLInfinity, k: int, args: list):
    """l_k on graded vectors; returns (degree, vector) or None when it
    lands outside degrees 0/1."""
    if k == 1:
        (d0, w), = args
        return (0, v.d.matvec(w)) if d0 == 1 else None
    if k == 2:
        (da, a), (db, b) = args
        if da == 0 and db == 0:
            return (0, v.bracket00(a, b))
        if da == 0 and db == 1:
            return (1, v.act(a, b))
        if da == 1 and db == 0:
            return (1, vneg(v.act(b, a)))
        return None
    if k == 3:
        if all(d == 0 for d, _ in args):
            return (1, v.l3_eval(args[0][1], args[1][1], args[2][1]))
        return None
    return None


def check_graded_antisymmetry(v: TwoTermLInfinity) -> CheckReport:
    """Total graded antisymmetry of l2 and l3 (the sign-convention half of
    the definition, which the unshuffle identity does not test)."""
    rep = CheckReport("graded_antisymmetry")
    elems = [(0, i) for i in range(v.dim0)] + [(1, a) for a in range(v.dim1)]
    for arity, name in ((2, "l2_antisymmetry"), (3, "l3_antisymmetry")):
        bad = []
        for combo in product(elems, repeat=arity):
            args = [_graded_element(v, dg, ix) for dg, ix in combo]
            base = _graded_bracket(v, arity, args)
            if base is None:
                continue  # the whole orbit lands outside degrees 0/1
            for perm in _permutations(arity):
                # chi is stated for the original order of the permuted word
                chi = koszul_chi(SignedPermutation(perm, tuple(dg for dg, _ in combo)))
                permuted = _graded_bracket(v, arity, [args[p] for p in perm])
                resid = vsub(permuted[1], vscale(chi, base[1]))
                if not all(x == 0 for x in resid):
                    bad.append(((combo, perm), resid))
                    break
            if bad:
                break
        rep.add(name, bad)
    return rep


def _permutations(n: int) -> list:
    from itertools import permutations
    return [tuple(p) for p in permutations(range(n))]


def generalized_jacobi(v: TwoTermLInfinity, arity: int) -> CheckReport:
    """The unshuffle identity at the given arity, on all graded basis tuples.

    Each term carries chi(sigma) and the factor (-1)^{i(j-1)}; higher
    arities than 4 vanish identically for two-term data.
    """
    if not 1 <= arity <= 4:
        raise ValueError("arity must be between 1 and 4")
    rep = CheckReport(f"generalized_jacobi_{arity}")
    elems = [(0, i) for i in range(v.dim0)] + [(1, a) for a in range(v.dim1)]
    bad = []
    for combo in product(elems, repeat=arity):
        degrees = tuple(dg for dg, _ in combo)
        args = [_graded_element(v, dg, ix) for dg, ix in combo]
        acc = {0: vzeros(v.dim0), 1: vzeros(v.dim1)}
        for i in range(1, arity + 1):
            j = arity + 1 - i
            sign_ij = -1 if (i * (j - 1)) % 2 else 1
            for sigma in unshuffles(i, arity):
                chi = koszul_chi(SignedPermutation(sigma, degrees))
                inner = _graded_bracket(v, i, [args[p] for p in sigma[:i]])
                if inner is None:
                    continue
                outer_args = [inner] + [args[p] for p in sigma[i:]]
                term = _graded_bracket(v, j, outer_args)
                if term is None:
                    continue
                deg, vec = term
                acc[deg] = vadd(acc[deg], vscale(chi * sign_ij, vec))
        resid = acc[0] + acc[1]
        if not all(x == 0 for x in resid):
            bad.append((combo, resid))
            break
    rep.add("unshuffle_identity", bad)
    return rep


# ---------------------------------------------------------------------------
# homomorphisms and 2-homomorphisms

@dataclass
class LInfHom:
    source: TwoTermLInfinity
    target: TwoTermLInfinity
    chain: ChainMap
    phi2: list  # [i][j] -> vector in target V1

    def __post_init__(self):
        _check_tensor_shape(self.phi2, (self.source.dim0, self.source.dim0,
                                        self.target.dim1), "phi2")
        if self.chain.source != self.source.complex or self.chain.target != self.target.complex:
            raise DimensionMismatch("chain map endpoints disagree with the structures")

    def phi2_vec(self, u: list, w: list) -> list:
        out = vzeros(self.target.dim1)
        for i, ui in enumerate(u):
            if ui:
                for j, wj in enumerate(w):
                    if wj:
                        out = vadd(out, vscale(ui * wj, self.phi2[i][j]))
        return out


def identity_hom(v: TwoTermLInfinity) -> LInfHom:
    return LInfHom(v, v, identity_chain_map(v.complex), zero_phi2(v.dim0, v.dim1))


def check_hom(f: LInfHom) -> CheckReport:
    """Chain-map square, phi2 skew-symmetry and the three defining equations."""
    rep = CheckReport("l_infinity_hom")
    rep.extend(check_chain_map(f.chain), prefix="chain_")
    src, dst = f.source, f.target
    n0, n1 = src.dim0, src.dim1
    phi0, phi1 = f.chain.phi0, f.chain.phi1

    bad = [((i, j), vadd(f.phi2[i][j], f.phi2[j][i]))
           for i in range(n0) for j in range(n0)
           if not all(x == 0 for x in vadd(f.phi2[i][j], f.phi2[j][i]))]
    rep.add("phi2_antisymmetry", bad[:1])

    e = [_basis(n0, i) for i in range(n0)]
    bad = []
    for i in range(n0):
        for j in range(n0):
            lhs = dst.d.matvec(f.phi2[i][j])
            rhs = vsub(phi0.matvec(src.l2_00[i][j]),
                       dst.bracket00(phi0.matvec(e[i]), phi0.matvec(e[j])))
            r = vsub(lhs, rhs)
            if not all(x == 0 for x in r):
                bad.append(((i, j), r))
                break
        if bad:
            break
    rep.add("bracket_compatibility", bad)

    bad = []
    for i in range(n0):
        for a in range(n1):
            lhs = f.phi2_vec(e[i], src.d.col(a))
            rhs = vsub(phi1.matvec(src.l2_01[i][a]),
                       dst.act(phi0.matvec(e[i]), phi1.col(a)))
            r = vsub(lhs, rhs)
            if not all(x == 0 for x in r):
                bad.append(((i, a), r))
                break
        if bad:
            break
    rep.add("action_compatibility", bad)

    bad = []
    for i in range(n0):
        fi = phi0.matvec(e[i])
        for j in range(n0):
            fj = phi0.matvec(e[j])
            for k in range(n0):
                fk = phi0.matvec(e[k])
                lhs = vadd(vadd(vneg(dst.act(fk, f.phi2[i][j])),
                                f.phi2_vec(src.l2_00[i][j], e[k])),
                           phi1.matvec(src.l3[i][j][k]))
                rhs = vadd(vadd(dst.l3_eval(fi, fj, fk), dst.act(fi, f.phi2[j][k])),
                           vadd(vneg(dst.act(fj, f.phi2[i][k])),
                                vadd(f.phi2_vec(e[i], src.l2_00[j][k]),
                                     f.phi2_vec(src.l2_00[i][k], e[j]))))
                r = vsub(lhs, rhs)
                if not all(x == 0 for x in r):
                    bad.append(((i, j, k), r))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("l3_compatibility", bad)
    return rep


def _basis(n: int, i: int) -> list:
    v = vzeros(n)
    v[i] = 1
    return v


def compose_homs(f: LInfHom, g: LInfHom) -> LInfHom:
    """Diagram order: (f g)_2(x,y) = g2(f0 x, f0 y) + g1(f2(x,y))."""
    if f.target != g.source:
        raise DimensionMismatch("homomorphisms are not composable")
    chain = compose_chain_maps(f.chain, g.chain)
    n0 = f.source.dim0
    e = [_basis(n0, i) for i in range(n0)]
    phi2 = [[vadd(g.phi2_vec(f.chain.phi0.matvec(e[i]), f.chain.phi0.matvec(e[j])),
                  g.chain.phi1.matvec(f.phi2[i][j]))
             for j in range(n0)] for i in range(n0)]
    return LInfHom(f.source, g.target, chain, phi2)


@dataclass
class LInfTwoHom:
    from_hom: LInfHom
    to_hom: LInfHom
    homotopy: ChainHomotopy

    def __post_init__(self):
        if (self.from_hom.source != self.to_hom.source
                or self.from_hom.target != self.to_hom.target):
            raise DimensionMismatch("2-homomorphism endpoints must be parallel")


def check_two_hom(t: LInfTwoHom) -> CheckReport:
    """Underlying chain homotopy plus the phi2 - psi2 compatibility equation."""
    rep = CheckReport("l_infinity_two_hom")
    rep.extend(check_homotopy(t.homotopy), prefix="homotopy_")
    f, g = t.from_hom, t.to_hom
    src, dst = f.source, f.target
    n0 = src.dim0
    e = [_basis(n0, i) for i in range(n0)]
    tau = t.homotopy.tau
    bad = []
    for i in range(n0):
        for j in range(n0):
            lhs = vsub(f.phi2[i][j], g.phi2[i][j])
            rhs = vadd(vsub(dst.act(f.chain.phi0.matvec(e[i]), tau.col(j)),
                            tau.matvec(src.l2_00[i][j])),
                       vneg(dst.act(g.chain.phi0.matvec(e[j]), tau.col(i))))
            r = vsub(lhs, rhs)
            if not all(x == 0 for x in r):
                bad.append(((i, j), r))
                break
        if bad:
            break
    rep.add("phi2_difference", bad)
    return rep


def identity_two_hom(f: LInfHom) -> LInfTwoHom:
    tau = RMatrix.zeros(f.target.dim1, f.source.dim0)
    return LInfTwoHom(f, f, ChainHomotopy(f.chain, f.chain, tau))


def vertical_two_hom(t1: LInfTwoHom, t2: LInfTwoHom) -> LInfTwoHom:
    if t1.to_hom != t2.from_hom:
        raise DimensionMismatch("vertical composite needs matching middle hom")
    from .twoterm import vertical_homotopy
    return LInfTwoHom(t1.from_hom, t2.to_hom,
                      vertical_homotopy(t1.homotopy, t2.homotopy))


def horizontal_two_hom(t1: LInfTwoHom, t2: LInfTwoHom) -> LInfTwoHom:
    if t1.from_hom.target != t2.from_hom.source:
        raise DimensionMismatch("horizontal composite endpoints do not chain")
    from .twoterm import horizontal_homotopy
    return LInfTwoHom(compose_homs(t1.from_hom, t2.from_hom),
                      compose_homs(t1.to_hom, t2.to_hom),
                      horizontal_homotopy(t1.homotopy, t2.homotopy))


# ---------------------------------------------------------------------------
# JSON format

def linf_to_json(v: TwoTermLInfinity) -> dict:
    return {"dim0": v.dim0, "dim1": v.dim1, "d": mat_to_json(v.d),
            "l2_00": tensor_to_json(v.l2_00), "l2_01": tensor_to_json(v.l2_01),
            "l3": tensor_to_json(v.l3)}


def linf_from_json(obj: dict) -> TwoTermLInfinity:
    n0 = as_count(need(obj, "dim0"), "dim0")
    n1 = as_count(need(obj, "dim1"), "dim1")
    try:
        d = mat_from_json(need(obj, "d"), rows=n0, cols=n1)
    except (ValueError, DimensionMismatch) as exc:
        raise FixtureError(f"field 'd': {exc}") from None
    l2_00 = tensor_from_json(need(obj, "l2_00"), (n0, n0, n0), "l2_00")
    l2_01 = tensor_from_json(need(obj, "l2_01"), (n0, n1, n1), "l2_01")
    l3 = tensor_from_json(need(obj, "l3"), (n0, n0, n0, n1), "l3")
    return TwoTermLInfinity(TwoTermComplex(n0, n1, d), l2_00, l2_01, l3)
