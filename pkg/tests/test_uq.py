"""The quantum action over Laurent polynomials and its specializations."""

from math import comb

import pytest

from prook.diagrams import Subset, all_subsets, compose, empty_diagram, enumerate_planar, identity_diagram
from prook.gl11 import TensorVector, highest_weight_vector
from prook.limits import BoundExceededError
from prook.linalg import SparseMatrix, rank
from prook.rings import LaurentPoly, q_integer, rational
from prook.uq import (
    QGenerator,
    q_commutant_dimension,
    q_diagram_action_matrix,
    q_generator_matrix,
    q_highest_weight_vector,
    q_tensor_basis,
    q_tensor_basis_at,
    q_tensor_basis_rank,
    sigma_exponent_on_pair,
    specialize_matrix,
    validate_specialization_point,
    verify_q_centralizer,
    verify_q_weight_pairs,
    verify_quantum_relations,
)

ONE = LaurentPoly.one()


def single_factor():
    return {tag: q_generator_matrix(tag, 1) for tag in QGenerator} | {"dim": 2}


def combine_factors(mats_a, mats_b, low_bits: int):
    """Tensor two module structures through the coproduct (A in the low bits)."""
    def kron(a, b):
        entries = {}
        for (ra, ca), va in a.entries.items():
            for (rb, cb), vb in b.entries.items():
                entries[(ra | rb << low_bits, ca | cb << low_bits)] = va * vb
        return SparseMatrix(a.rows * b.rows, a.cols * b.cols, entries)

    eye_b = SparseMatrix.identity(mats_b["dim"], ONE)
    out = {"dim": mats_a["dim"] * mats_b["dim"]}
    out[QGenerator.E] = (kron(mats_a[QGenerator.E], mats_b[QGenerator.K_INV])
                         + kron(mats_a[QGenerator.SIGMA], mats_b[QGenerator.E]))
    out[QGenerator.F] = (kron(mats_a[QGenerator.F], eye_b)
                         + kron(mats_a[QGenerator.SIGMA] @ mats_a[QGenerator.K],
                                mats_b[QGenerator.F]))
    for tag in (QGenerator.SIGMA, QGenerator.K, QGenerator.K_INV,
                QGenerator.QH1, QGenerator.QH2, QGenerator.QH1_INV, QGenerator.QH2_INV):
        out[tag] = kron(mats_a[tag], mats_b[tag])
    return out


def test_single_factor_action_table():
    E = q_generator_matrix(QGenerator.E, 1)
    F = q_generator_matrix(QGenerator.F, 1)
    sigma = q_generator_matrix(QGenerator.SIGMA, 1)
    qh1 = q_generator_matrix(QGenerator.QH1, 1)
    qh2 = q_generator_matrix(QGenerator.QH2, 1)
    x, y = 0, 1
    assert E.get(x, y) == ONE and E.get(y, x) == 0
    assert F.get(y, x) == ONE and F.get(x, y) == 0
    assert sigma.get(x, x) == ONE and sigma.get(y, y) == LaurentPoly({0: -1})
    assert qh1.get(x, x) == LaurentPoly.q(1) and qh1.get(y, y) == ONE
    assert qh2.get(x, x) == ONE and qh2.get(y, y) == LaurentPoly.q(1)


def test_coproduct_example_on_two_factors():
    E = q_generator_matrix(QGenerator.E, 2)
    yx = TensorVector.from_word("yx", ONE)
    assert yx.apply(E) == TensorVector.from_word("xx", LaurentPoly.q(-1))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_generator_matrices_match_coproduct_recursion(k):
    """Left- and right-iterated coproducts agree with the closed form."""
    base = single_factor()
    left = base
    for _ in range(k - 1):
        left = combine_factors(left, base, left["dim"].bit_length() - 1)
    right = base
    for _ in range(k - 1):
        right = combine_factors(base, right, 1)
    for tag in QGenerator:
        assert left[tag] == q_generator_matrix(tag, k)
        assert right[tag] == q_generator_matrix(tag, k)


def test_k_acts_as_global_q_power():
    for k in (1, 2, 3):
        eye = SparseMatrix.identity(1 << k, ONE)
        assert q_generator_matrix(QGenerator.K, k) == LaurentPoly.q(k) * eye


def test_highest_weight_vector_examples():
    v = q_highest_weight_vector(Subset.of(2, [1]), 3)
    assert v == (TensorVector.from_word("xxy", LaurentPoly.q(-2))
                 - TensorVector.from_word("yxx", ONE))
    assert q_highest_weight_vector(Subset(0), 1) == TensorVector.from_word("x", ONE)
    assert q_highest_weight_vector(Subset(1), 2) == (
        TensorVector.from_word("xy", LaurentPoly.q(-1))
        - TensorVector.from_word("yx", ONE))


@pytest.mark.parametrize("k", [1, 2, 3, 5, 6])
def test_quantum_relations_reports(k):
    report = verify_quantum_relations(k)
    assert report.passed
    assert report.checks_run == 14


def test_quantum_relations_bound():
    with pytest.raises(BoundExceededError):
        verify_quantum_relations(11)


@pytest.mark.parametrize("k", [1, 2, 3, 6])
def test_q_weight_pair_reports(k):
    report = verify_q_weight_pairs(k)
    assert report.passed
    assert report.parameters["q0"] == "2/1"
    assert any("sigma" in note for note in report.notes)


def test_sigma_eigenvalues_follow_parity():
    # sigma multiplies v_s by (-1)^(k-1-|s|): direct check on worked vectors
    for k in (1, 2, 3, 4):
        sigma = q_generator_matrix(QGenerator.SIGMA, k)
        for s in all_subsets(k - 1):
            v = q_highest_weight_vector(s, k)
            exp_v, exp_fv = sigma_exponent_on_pair(k, len(s))
            sign = LaurentPoly({0: -1 if exp_v else 1})
            assert v.apply(sigma) == v.scale(sign)
            assert exp_fv == (exp_v + 1) % 2


def test_ef_identity_on_highest_weight_vectors():
    for k in (1, 2, 3, 5):
        E = q_generator_matrix(QGenerator.E, k)
        F = q_generator_matrix(QGenerator.F, k)
        for s in all_subsets(k - 1):
            v = q_highest_weight_vector(s, k)
            assert v.apply(F).apply(E) == v.scale(q_integer(k))


@pytest.mark.parametrize("k", range(1, 7))
def test_classical_limit_of_highest_weight_vectors(k):
    # substituting q := 1 recovers the classical vectors coefficient by coefficient
    for s in all_subsets(k - 1):
        quantum = q_highest_weight_vector(s, k)
        classical = highest_weight_vector(s, k)
        assert {m: c.evaluate(1) for m, c in quantum.entries.items()} == \
            {m: rational(c) for m, c in classical.entries.items()}


@pytest.mark.parametrize("k", range(1, 7))
def test_specialization_commutes_with_the_ef_identity(k):
    E = q_generator_matrix(QGenerator.E, k)
    F = q_generator_matrix(QGenerator.F, k)
    symbolic = E @ F + F @ E
    specialized = specialize_matrix(symbolic, 2)
    lhs = specialize_matrix(E, 2) @ specialize_matrix(F, 2) + \
        specialize_matrix(F, 2) @ specialize_matrix(E, 2)
    assert specialized == lhs
    assert specialized == q_integer(k).evaluate(2) * \
        SparseMatrix.identity(1 << k, rational(1))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_specialized_basis_has_full_rank(k):
    assert q_tensor_basis_rank(k, 2) == 1 << k
    subsets, change, inverse = q_tensor_basis_at(k, 2)
    assert change @ inverse == SparseMatrix.identity(1 << k, rational(1))
    assert len(subsets) == 1 << (k - 1)


def test_specialization_point_validation():
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            validate_specialization_point(bad)
    assert validate_specialization_point(rational(1, 2)) == rational(1, 2)
    assert validate_specialization_point(-2) == rational(-2)


def test_q_diagram_action_identity_empty_and_functoriality():
    k = 3
    eye = SparseMatrix.identity(1 << k, rational(1))
    assert q_diagram_action_matrix(identity_diagram(k - 1), k) == eye
    projection = q_diagram_action_matrix(empty_diagram(k - 1), k)
    assert projection @ projection == projection
    assert rank(projection) == 2
    diagrams = enumerate_planar(k - 1)
    matrices = {d: q_diagram_action_matrix(d, k) for d in diagrams}
    for a in diagrams:
        for b in diagrams:
            assert matrices[a] @ matrices[b] == matrices[compose(a, b)]


def test_q_diagram_action_fixes_quantum_basis_vectors():
    k = 3
    subsets, change, _ = q_tensor_basis_at(k, 2)
    cols = change.by_cols()
    half = len(subsets)
    from prook.diagrams import apply_to_subset
    index = {s: j for j, s in enumerate(subsets)}
    for d in enumerate_planar(k - 1):
        action = q_diagram_action_matrix(d, k)
        for j, s in enumerate(subsets):
            image = apply_to_subset(d, s)
            for offset in (0, half):
                got = action.apply(cols[j + offset])
                expected = {} if image is None else cols[index[image] + offset]
                assert got == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_q_commutant_dimension(k):
    expected = comb(2 * (k - 1), k - 1)
    assert q_commutant_dimension(k, 2) == expected
    # a second non-root-of-unity point gives the same answer
    assert q_commutant_dimension(k, rational(-3)) == expected


def test_q_commutant_rejects_roots_of_unity():
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            q_commutant_dimension(2, bad)


def test_q_commutant_bound():
    with pytest.raises(BoundExceededError):
        q_commutant_dimension(9, 2)


def test_q_centralizer_report():
    report = verify_q_centralizer(3)
    assert report.passed
    assert report.parameters == {"k": 3, "q0": "2/1"}
    assert report.checks_run == 2
    assert report.notes


def test_symbolic_basis_columns_are_the_vectors():
    k = 3
    subsets, change = q_tensor_basis(k)
    F = q_generator_matrix(QGenerator.F, k)
    cols = change.by_cols()
    half = len(subsets)
    for j, s in enumerate(subsets):
        v = q_highest_weight_vector(s, k)
        assert cols[j] == v.entries
        assert cols[half + j] == v.apply(F).entries
