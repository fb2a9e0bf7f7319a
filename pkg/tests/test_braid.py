
import pytest

from lie2alg.braid import (build_B_vect, build_Y, check_ybe,
                           check_zamolodchikov, jacobi_sweep, yang_baxter_sides)
from lie2alg.cohomology import (Cochain, LieAlgebra, abelian_algebra, build_two_slot, so3_algebra, sl2_algebra, trivial_rep)
from lie2alg.exactlin import RMatrix, rank_kernel, vzeros
from lie2alg.lie2 import from_linfty
from lie2alg.twovect import check_functor, check_nat_trans
from conftest import broken_abelian4, broken_jacobi3, rand_antisymmetric_bracket


def test_abelian_braiding_is_plain_swap():
    op = build_B_vect(abelian_algebra(3))
    dim = 4
    for i in range(dim):
        for j in range(dim):
            col = op.b.col(i * dim + j)
            expected = vzeros(dim * dim)
            expected[j * dim + i] = 1
            assert col == expected


def test_so3_braiding_formula():
    op = build_B_vect(so3_algebra())
    # B((0,e1) ox (0,e2)) = (0,e2) ox (0,e1) + (1,0) ox (0,e3)
    col = op.b.col(1 * 4 + 2)
    expected = vzeros(16)
    expected[2 * 4 + 1] = 1
    expected[0 * 4 + 3] = 1
    assert col == expected


def test_ground_slot_swaps_cleanly():
    op = build_B_vect(so3_algebra())
    for j in range(4):
        col = op.b.col(0 * 4 + j)
        expected = vzeros(16)
        expected[j * 4 + 0] = 1
        assert col == expected


def test_braiding_invertible():
    for g in (so3_algebra(), sl2_algebra(), broken_jacobi3()):
        op = build_B_vect(g)
        rank, _ = rank_kernel(op.b)
        assert rank == op.b.rows


def test_non_antisymmetric_bracket_rejected():
    b = [[vzeros(2) for _ in range(2)] for _ in range(2)]
    b[0][1][0] = 1  # no matching [1][0]
    with pytest.raises(ValueError):
        build_B_vect(LieAlgebra(2, b))


def test_ybe_bi_implication_named():
    cases = [(abelian_algebra(3), True), (so3_algebra(), True),
             (sl2_algebra(), True), (broken_jacobi3(), False)]
    for g, expected in cases:
        assert check_ybe(build_B_vect(g)).passed is expected
        assert jacobi_sweep(g).passed is expected


def test_ybe_bi_implication_random(rng):
    for _ in range(10):
        n = rng.randint(1, 4)
        g = LieAlgebra(n, rand_antisymmetric_bracket(rng, n))
        assert check_ybe(build_B_vect(g)).passed == jacobi_sweep(g).passed


def test_ybe_matrix_dimension():
    lhs, rhs = yang_baxter_sides(build_B_vect(so3_algebra()))
    assert lhs.rows == 64 and rhs.rows == 64


# ---------------------------------------------------------------------------
# the categorified braiding

def small_strict():
    rep = trivial_rep(abelian_algebra(2), 1)
    return from_linfty(build_two_slot(rep, 1, Cochain(rep, 3, {})))


def abelian3_volume():
    """Abelian objects with l3 the volume form: valid and skeletal but not
    strict; the smallest structure with nontrivial Y components."""
    rep = trivial_rep(abelian_algebra(3), 1)
    return from_linfty(build_two_slot(rep, 1, Cochain(rep, 3, {(0, 1, 2): [1]})))


def test_braid_functor_is_a_functor(ghbar_so3_1, tetra_so3_1):
    assert check_functor(tetra_so3_1.braid).passed


def test_braid_functor_invertible_on_morphisms():
    from lie2alg.twovect import is_invertible_functor
    ty = build_Y(small_strict())
    assert is_invertible_functor(ty.braid)


def test_braid_functor_restricts_to_vector_level(tetra_so3_1):
    op = build_B_vect(so3_algebra())
    assert tetra_so3_1.braid.f0 == op.b


def test_Y_passes_naturality_under_hypotheses(tetra_so3_1):
    assert tetra_so3_1.hypotheses.passed
    assert check_nat_trans(tetra_so3_1.y).passed


def test_Y_identity_components_for_strict():
    ty = build_Y(small_strict())
    lp3_i = None
    sp = ty.y.from_functor.target
    for col in range(ty.y.theta.cols):
        comp = ty.y.theta.col(col)
        src = ty.yb_source.f0.col(col)
        assert comp == sp.i.matvec(src)


def test_Y_component_value_on_ghbar(tetra_so3_1):
    ty = tetra_so3_1
    col = (1 * 4 + 2) * 4 + 3  # (0,e1) ox (0,e2) ox (0,e3)
    comp = ty.y.theta.col(col)
    src = ty.yb_source.f0.col(col)
    arrow = [a - b for a, b in zip(comp, ty.y.from_functor.target.i.matvec(src))]
    expected = vzeros(125)
    expected[4] = -2  # (ground, ground, l3-slot): j of the Jacobiator arrow
    assert arrow == expected


def test_Y_identity_on_ground_slots(tetra_so3_1):
    ty = tetra_so3_1
    sp = ty.y.from_functor.target
    for col in range(64):
        trip = (col // 16, (col // 4) % 4, col % 4)
        if 0 in trip:
            comp = ty.y.theta.col(col)
            assert comp == sp.i.matvec(ty.yb_source.f0.col(col))


def test_tetrahedron_strict_passes():
    ty = build_Y(small_strict())
    rep = check_zamolodchikov(ty)
    assert rep.passed


def test_tetrahedron_strict_non_skeletal_passes():
    from lie2alg.lie2 import DifferentialCrossedModule, from_crossed_module
    dcm = DifferentialCrossedModule(1, [[[0]]], 1, [[[0]]],
                                    RMatrix.identity(1), [[[0]]])
    ty = build_Y(from_crossed_module(dcm))
    assert ty.hypotheses.passed
    assert check_zamolodchikov(ty).passed


def test_tetrahedron_with_nontrivial_action_passes():
    from lie2alg.cohomology import Representation
    g = abelian_algebra(2)
    rep = Representation(g, 1, [RMatrix.from_rows([[1]]), RMatrix.from_rows([[2]])])
    v = build_two_slot(rep, 1, Cochain(rep, 3, {}))
    ty = build_Y(from_linfty(v))
    assert check_zamolodchikov(ty).passed


def test_tetrahedron_abelian_volume_passes():
    ty = build_Y(abelian3_volume())
    assert ty.hypotheses.passed
    assert check_zamolodchikov(ty).passed


def test_hypotheses_reported_without_condition_i():
    ty = build_Y(from_linfty(broken_abelian4()))
    assert ty.hypotheses.passed  # (a)-(h) hold, only (i) fails
    names = [c.name for c in ty.hypotheses.checks]
    assert "i_jacobiator_coherence" not in names
