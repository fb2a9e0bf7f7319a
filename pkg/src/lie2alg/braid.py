"""Braiding operators: the Yang-Baxter operator attached to a bracket
and the categorified braiding with its tetrahedron equation.

Basis order everywhere: the ground slot comes first in k + L, and
tensor powers use the flat lexicographic indexing of exactlin.kron.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cohomology import LieAlgebra
from .exactlin import RMatrix, kron, vadd, vsub
from .lie2 import SemistrictLie2Algebra, bracket_morphisms
from .linfty import check_axioms
from .report import CheckReport
from .twovect import (CellId, CellLeaf, CellTensor, CellVert, CellWhiskerL,
                      CellWhiskerR, LinearFunctor, LinearNatTrans, Morphism,
                      TwoVectorSpace, check_nat_trans, compose_functors,
                      direct_sum, eval_cell_expr, ground_field, identity_functor,
                      tensor_2vs, tensor_functor)


@dataclass
class YBOperator:
    base: LieAlgebra
    b: RMatrix  # on (k + g) tensor (k + g)


def build_B_vect(g: LieAlgebra) -> YBOperator:
    """B((a,x) ox (b,y)) = (b,y) ox (a,x) + (1,0) ox (0,[x,y]).

    Requires an antisymmetric bracket; the Jacobi identity is not
    assumed (the Yang-Baxter check detects exactly its failure).
    """
    n = g.dim
    for i in range(n):
        for j in range(n):
            if any(x != 0 for x in vadd(g.bracket[i][j], g.bracket[j][i])):
                raise ValueError(f"bracket is not antisymmetric at ({i}, {j})")
    dim = 1 + n
    b = RMatrix.zeros(dim * dim, dim * dim)
    for i in range(dim):
        for j in range(dim):
            col = i * dim + j
            b.data[j * dim + i][col] += 1  # the swap
            if i and j:
                for k, c in enumerate(g.bracket[i - 1][j - 1]):
                    if c:
                        b.data[0 * dim + (1 + k)][col] += c
    return YBOperator(g, b)


def yang_baxter_sides(op: YBOperator):
    """Matrices of (B ox 1)(1 ox B)(B ox 1) and (1 ox B)(B ox 1)(1 ox B)
    on the triple tensor power, diagram order."""
    dim = 1 + op.base.dim
    eye = RMatrix.identity(dim)
    b1 = kron(op.b, eye)
    b2 = kron(eye, op.b)
    lhs = b1 @ (b2 @ b1)
    rhs = b2 @ (b1 @ b2)
    return lhs, rhs


def check_ybe(op: YBOperator) -> CheckReport:
    """Entry-wise comparison of both Yang-Baxter composites."""
    rep = CheckReport("yang_baxter")
    lhs, rhs = yang_baxter_sides(op)
    resid = lhs - rhs
    bad = []
    for i, row in enumerate(resid.data):
        for j, x in enumerate(row):
            if x:
                bad.append(((i, j), x))
                break
        if bad:
            break
    rep.add("yang_baxter_equation", bad)
    return rep


# ---------------------------------------------------------------------------
# the categorified braiding

@dataclass
class TetraY:
    lie2: SemistrictLie2Algebra
    space: TwoVectorSpace           # k + L
    braid: LinearFunctor            # B on (k + L) tensor itself
    yb_source: LinearFunctor        # (B ox 1)(1 ox B)(B ox 1)
    yb_target: LinearFunctor        # (1 ox B)(B ox 1)(1 ox B)
    y: LinearNatTrans
    hypotheses: CheckReport


def _embed_obj(L: SemistrictLie2Algebra, idx: int) -> list | None:
    """The L-part of the idx-th object basis vector of k + L (None for
    the ground slot)."""
    return None if idx == 0 else L.object_basis(idx - 1)


def _morphism_of_slot(L: SemistrictLie2Algebra, idx: int) -> Morphism | None:
    """The L-part of the idx-th morphism basis vector of k + L."""
    if idx == 0:
        return None
    return Morphism(L.space, [1 if p == idx - 1 else 0 for p in range(L.space.dim1)])


def build_braid_functor(L: SemistrictLie2Algebra, lp: TwoVectorSpace) -> LinearFunctor:
    """The braiding on objects and morphisms of (k + L) tensor itself."""
    v = L.data
    lplp = tensor_2vs(lp, lp)
    d0, d1 = lp.dim0, lp.dim1

    f0 = RMatrix.zeros(d0 * d0, d0 * d0)
    for i in range(d0):
        for j in range(d0):
            col = i * d0 + j
            f0.data[j * d0 + i][col] += 1
            xi, xj = _embed_obj(L, i), _embed_obj(L, j)
            if xi is not None and xj is not None:
                for k, c in enumerate(v.bracket00(xi, xj)):
                    if c:
                        f0.data[0 * d0 + (1 + k)][col] += c

    f1 = RMatrix.zeros(d1 * d1, d1 * d1)
    for p in range(d1):
        mp = _morphism_of_slot(L, p)
        for q in range(d1):
            col = p * d1 + q
            f1.data[q * d1 + p][col] += 1
            mq = _morphism_of_slot(L, q)
            if mp is not None and mq is not None:
                br = bracket_morphisms(L, mp, mq)
                for k, c in enumerate(br.vec):
                    if c:
                        # 1_{(1,0)} ox (0, [m_p, m_q]): flat index (0, 1+k)
                        f1.data[0 * d1 + (1 + k)][col] += c
    return LinearFunctor(lplp, lplp, f0, f1)


def build_Y(L: SemistrictLie2Algebra) -> TetraY:
    """Y between the two triple-braid composites: the component at an
    object u is the identity plus the Jacobiator's arrow at the
    projection of u, injected on the (ground, ground, L) line."""
    v = L.data
    hypotheses = CheckReport("tetrahedron_hypotheses")
    ax = check_axioms(v)
    for c in ax.checks:
        if c.name != "i_jacobiator_coherence":
            hypotheses.checks.append(c)

    lp = direct_sum(ground_field(), L.space).space
    braid = build_braid_functor(L, lp)
    lp3 = tensor_2vs(tensor_2vs(lp, lp), lp)
    id_lp = identity_functor(lp)
    b12 = tensor_functor(braid, id_lp)
    b23 = tensor_functor(id_lp, braid)
    yb_source = compose_functors(compose_functors(b12, b23), b12)
    yb_target = compose_functors(compose_functors(b23, b12), b23)

    n0 = L.dim0
    m1 = lp.dim1  # 1 + dim L1
    theta = RMatrix.zeros(m1 ** 3, lp.dim0 ** 3)
    i_big = lp3.i
    for col in range(lp.dim0 ** 3):
        src = yb_source.f0.col(col)
        comp = i_big.matvec(src)
        trip = (col // (lp.dim0 ** 2), (col // lp.dim0) % lp.dim0, col % lp.dim0)
        if all(t > 0 for t in trip):
            arrow = v.l3_eval(*(L.object_basis(t - 1) for t in trip))
            for c_idx, c in enumerate(arrow):
                if c:
                    # flat (0, 0, 1 + n0 + c_idx) in the morphism cube
                    comp[1 + n0 + c_idx] += c
        for r, x in enumerate(comp):
            if x:
                theta.data[r][col] = x
    y = LinearNatTrans(yb_source, yb_target, theta)
    hypotheses.extend(check_nat_trans(y), prefix="y_")
    return TetraY(L, lp, braid, yb_source, yb_target, y, hypotheses)


def tetrahedron_sides(ty: TetraY):
    """Both vertical composites of the tetrahedron equation as 2-cell
    expression trees on the fourth tensor power."""
    lp = ty.space
    id_lp = identity_functor(lp)
    lplp = tensor_2vs(lp, lp)
    id_lplp = identity_functor(lplp)
    b = ty.braid
    b12 = tensor_functor(tensor_functor(b, id_lp), id_lp)
    b23 = tensor_functor(tensor_functor(id_lp, b), id_lp)
    b34 = tensor_functor(id_lplp, b)

    y1 = CellTensor(CellLeaf(ty.y), CellId(id_lp))    # Y ox 1
    y2 = CellTensor(CellId(id_lp), CellLeaf(ty.y))    # 1 ox Y

    def chain(*fs):
        out = fs[0]
        for f in fs[1:]:
            out = compose_functors(out, f)
        return out

    lhs = CellVert(CellVert(CellVert(
        CellWhiskerR(y1, chain(b34, b23, b12)),
        CellWhiskerR(CellWhiskerL(chain(b23, b12), y2), b12)),
        CellWhiskerR(CellWhiskerL(chain(b23, b34), y1), b34)),
        CellWhiskerR(y2, chain(b12, b23, b34)))
    rhs = CellVert(CellVert(CellVert(
        CellWhiskerL(chain(b12, b23, b34), y1),
        CellWhiskerR(CellWhiskerL(b12, y2), chain(b12, b23))),
        CellWhiskerR(CellWhiskerL(b34, y1), chain(b34, b23))),
        CellWhiskerL(chain(b34, b23, b12), y2))
    return lhs, rhs


def check_zamolodchikov(ty: TetraY) -> CheckReport:
    """Evaluate both sides of the tetrahedron equation and compare the
    components on every basis object of the fourth tensor power."""
    rep = CheckReport("zamolodchikov_tetrahedron")
    lhs_expr, rhs_expr = tetrahedron_sides(ty)
    lhs = eval_cell_expr(lhs_expr)
    rhs = eval_cell_expr(rhs_expr)
    rep.add("endpoint_functors",
            [] if (lhs.from_functor == rhs.from_functor
                   and lhs.to_functor == rhs.to_functor)
            else [((), "source/target functors differ")])
    d0 = ty.space.dim0
    bad = []
    for col in range(d0 ** 4):
        lcol = lhs.theta.col(col)
        rcol = rhs.theta.col(col)
        if lcol != rcol:
            obj = (col // d0 ** 3, (col // d0 ** 2) % d0, (col // d0) % d0, col % d0)
            bad.append((obj, vsub(lcol, rcol)))
            break
    rep.add("component_equality", bad)
    return rep


def jacobi_sweep(g: LieAlgebra) -> CheckReport:
    """Direct Jacobi check on all basis triples: the independent oracle
    for the Yang-Baxter bi-implication."""
    rep = CheckReport("jacobi_sweep")
    bad = []
    n = g.dim
    for (i, j, k) in product(range(n), repeat=3):
        ei = [1 if p == i else 0 for p in range(n)]
        ej = [1 if p == j else 0 for p in range(n)]
        ek = [1 if p == k else 0 for p in range(n)]
        r = vadd(vadd(g.bracket_vec(g.bracket[i][j], ek),
                      g.bracket_vec(g.bracket[j][k], ei)),
                 g.bracket_vec(g.bracket[k][i], ej))
        if any(x != 0 for x in r):
            bad.append(((i, j, k), r))
            break
    rep.add("jacobi", bad)
    return rep
