from fractions import Fraction

import pytest

from grdcalc.errors import PreconditionError
from grdcalc.linalg import determinant
from grdcalc.picard import (GENUS2_RELATION, LAMBDA, PSI, DivisorClass,
                            PicSpace, delta, epsilon,
                            epsilon_intersection_matrix,
                            epsilon_matrix_determinant, make_class,
                            parse_class, pullback_i, pullback_j, pullback_k,
                            reduce_m21)
from conftest import rand_class, rand_fraction


def test_bases():
    assert PicSpace.mg1(4).basis() == (LAMBDA, PSI, "delta_0", "delta_1", "delta_2", "delta_3")
    assert PicSpace.m21().basis() == (LAMBDA, PSI, "delta_0", "delta_1")
    assert PicSpace.m0g(6).basis() == ("epsilon_2", "epsilon_3", "epsilon_4")


def test_space_validation():
    with pytest.raises(PreconditionError):
        PicSpace.m0g(3)
    with pytest.raises(PreconditionError):
        make_class(PicSpace.m21(), {"delta_2": 1})


def test_divisor_class_drops_zeros():
    D = make_class(PicSpace.m21(), {LAMBDA: 0, PSI: Fraction(1, 2)})
    assert D.coeffs == {PSI: Fraction(1, 2)}
    assert D.get(LAMBDA) == 0


def test_pullback_i_middle_deltas():
    g = 6
    D = DivisorClass.basis_vector(PicSpace.mg1(g), delta(3))
    assert pullback_i(g, D) == DivisorClass.basis_vector(PicSpace.m0g(g), epsilon(3))


def test_pullback_i_kills_lambda_psi_delta0():
    g = 7
    space = PicSpace.mg1(g)
    for sym in (LAMBDA, PSI, delta(0)):
        assert pullback_i(g, DivisorClass.basis_vector(space, sym)).is_zero()


def test_pullback_i_boundary_delta_identity():
    # delta_1 + delta_{g-1} restricts to sum_i i(i-g)/(g-1) epsilon_i.
    for g in range(5, 12):
        space = PicSpace.mg1(g)
        D = make_class(space, {delta(1): 1, delta(g - 1): 1})
        expected = make_class(PicSpace.m0g(g), {
            epsilon(i): Fraction(i * (i - g), g - 1) for i in range(2, g - 1)})
        assert pullback_i(g, D) == expected


def test_pullback_i_requires_g_at_least_five():
    with pytest.raises(PreconditionError):
        pullback_i(4, DivisorClass.zero(PicSpace.mg1(4)))


def test_pullback_j_mappings():
    g = 8
    space = PicSpace.mg1(g)
    m21 = PicSpace.m21()
    assert pullback_j(g, DivisorClass.basis_vector(space, delta(g - 1))) \
        == DivisorClass.basis_vector(m21, delta(1))
    assert pullback_j(g, DivisorClass.basis_vector(space, PSI)).is_zero()
    assert pullback_j(g, DivisorClass.basis_vector(space, delta(g - 2))) \
        == DivisorClass.basis_vector(m21, PSI, -1)
    mixed = make_class(space, {LAMBDA: 2, delta(g - 2): 3})
    assert pullback_j(g, mixed) == make_class(m21, {LAMBDA: 2, PSI: -3})
    for i in range(1, g - 2):
        assert pullback_j(g, DivisorClass.basis_vector(space, delta(i))).is_zero()


def test_pullback_k_degrees():
    g = 8
    space = PicSpace.mg1(g)
    assert pullback_k(g, 3, DivisorClass.basis_vector(space, PSI)) == 5
    assert pullback_k(g, 3, DivisorClass.basis_vector(space, delta(3))) == -1
    assert pullback_k(g, 3, DivisorClass.basis_vector(space, delta(5))) == 1
    assert pullback_k(g, 3, DivisorClass.basis_vector(space, LAMBDA)) == 0
    # Self-paired component genus: contributions on delta_{g/2} cancel.
    assert pullback_k(g, 4, DivisorClass.basis_vector(space, delta(4))) == 0
    with pytest.raises(PreconditionError):
        pullback_k(g, 8, DivisorClass.zero(space))


def test_pullbacks_are_linear(rng):
    m21_cases = 0
    for _ in range(120):
        g = rng.randint(5, 10)
        space = PicSpace.mg1(g)
        a, b = rand_fraction(rng), rand_fraction(rng)
        D, E = rand_class(rng, space), rand_class(rng, space)
        combo = D.scale(a) + E.scale(b)
        assert pullback_i(g, combo) == pullback_i(g, D).scale(a) + pullback_i(g, E).scale(b)
        assert pullback_j(g, combo) == pullback_j(g, D).scale(a) + pullback_j(g, E).scale(b)
        h = rng.randint(1, g - 1)
        assert pullback_k(g, h, combo) == a * pullback_k(g, h, D) + b * pullback_k(g, h, E)
        m21_cases += 1
    assert m21_cases == 120


def test_epsilon_matrix_small_genus():
    assert epsilon_intersection_matrix(6) == [
        [5, 0, 0],
        [-1, 1, 3],
        [0, -1, 2],
    ]
    # Cofactor oracle for the 3x3: 5 * (1*2 - 3*(-1)).
    assert epsilon_matrix_determinant(6) == 5 * (1 * 2 - 3 * (-1)) == 25
    assert epsilon_intersection_matrix(5) == [[4, 0], [-1, 2]]
    assert epsilon_matrix_determinant(5) == 8


def test_epsilon_matrix_general_row_pattern():
    g = 9
    m = epsilon_intersection_matrix(g)
    assert m[0] == [8, 0, 0, 0, 0, 0]
    assert m[1] == [-1, 1, 0, 0, 0, 6]
    assert m[2] == [0, -1, 1, 0, 0, 5]
    assert m[4] == [0, 0, 0, -1, 1, 3]
    assert m[5] == [0, 0, 0, 0, -1, 2]


def test_epsilon_matrix_nonsingular_range():
    for g in range(6, 31):
        assert epsilon_matrix_determinant(g) != 0


def test_epsilon_matrix_requires_g_at_least_five():
    with pytest.raises(PreconditionError):
        epsilon_intersection_matrix(4)


def test_reduce_m21_examples():
    m21 = PicSpace.m21()
    D = make_class(m21, {LAMBDA: 12, delta(0): -1, PSI: -8})
    assert reduce_m21(D) == make_class(m21, {LAMBDA: 2, delta(1): 2, PSI: -8})
    assert reduce_m21(DivisorClass.basis_vector(m21, delta(0))) \
        == make_class(m21, {LAMBDA: 10, delta(1): -2})
    lam = DivisorClass.basis_vector(m21, LAMBDA)
    assert reduce_m21(lam) == lam


def test_reduce_m21_idempotent_and_relation_invariant(rng):
    m21 = PicSpace.m21()
    relation = DivisorClass(m21, dict(GENUS2_RELATION))
    for _ in range(150):
        D = rand_class(rng, m21, density=0.8)
        reduced = reduce_m21(D)
        assert reduced.get(delta(0)) == 0
        assert reduce_m21(reduced) == reduced
        t = rand_fraction(rng)
        assert reduce_m21(D + relation.scale(t)) == reduced


def test_wrong_space_rejected():
    D = DivisorClass.zero(PicSpace.mg1(6))
    with pytest.raises(PreconditionError):
        reduce_m21(D)
    with pytest.raises(PreconditionError):
        pullback_i(7, D)
    E = DivisorClass.zero(PicSpace.m21())
    with pytest.raises(PreconditionError):
        pullback_j(6, E)


def test_class_addition_requires_matching_space():
    with pytest.raises(PreconditionError):
        DivisorClass.zero(PicSpace.m21()) + DivisorClass.zero(PicSpace.mg1(3))


def test_parse_class():
    space = PicSpace.mg1(8)
    D = parse_class(space, "delta_6:1, lambda:3/2")
    assert D == make_class(space, {delta(6): 1, LAMBDA: Fraction(3, 2)})
    with pytest.raises(PreconditionError):
        parse_class(space, "nonsense:1")
    with pytest.raises(PreconditionError):
        parse_class(space, "lambda")


def test_determinant_helper_matches_small_cases():
    assert determinant([[2]]) == 2
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[1, 2], [2, 4]]) == 0
