"""The superalgebra action on tensor powers and the commuting diagram action."""

from math import comb

import pytest

from prook.diagrams import Subset, all_subsets, compose, empty_diagram, enumerate_planar, identity_diagram
from prook.gl11 import (
    Generator,
    TensorVector,
    WeightLabel,
    commutant_dimension,
    decomposition_table,
    diagram_action_matrix,
    generator_matrix,
    highest_weight_vector,
    mask_from_word,
    tensor_basis,
    tensor_basis_inverse,
    tensor_basis_rank,
    verify_centralizer,
    verify_commuting_action,
    verify_faithful_action,
    verify_tensor_basis,
    verify_weight_pairs,
    word_from_mask,
)
from prook.limits import BoundExceededError
from prook.linalg import SparseMatrix, commutator, rank
from prook.rings import rational


def parity_matrix(k: int) -> SparseMatrix:
    """diag((-1)^(number of y factors)); the grading operator."""
    dim = 1 << k
    return SparseMatrix(dim, dim, {
        (m, m): rational(-1 if m.bit_count() % 2 else 1) for m in range(dim)})


def combine_factors(mats_a, mats_b, low_bits: int):
    """Generator matrices on A (x) B from those on A and B.

    Odd generators act as g (x) 1 + parity (x) g (the graded product rule);
    even generators act factor by factor.  A sits in the low mask bits.
    """
    def kron(a, b):
        entries = {}
        for (ra, ca), va in a.entries.items():
            for (rb, cb), vb in b.entries.items():
                entries[(ra | rb << low_bits, ca | cb << low_bits)] = va * vb
        return SparseMatrix(a.rows * b.rows, a.cols * b.cols, entries)

    eye_a = SparseMatrix.identity(mats_a["dim"], rational(1))
    eye_b = SparseMatrix.identity(mats_b["dim"], rational(1))
    out = {"dim": mats_a["dim"] * mats_b["dim"], "parity": kron(mats_a["parity"], mats_b["parity"])}
    for g in (Generator.E, Generator.F):
        out[g] = kron(mats_a[g], eye_b) + kron(mats_a["parity"], mats_b[g])
    for g in (Generator.H1, Generator.H2):
        out[g] = kron(mats_a[g], eye_b) + kron(eye_a, mats_b[g])
    return out


def single_factor():
    return {
        "dim": 2,
        "parity": parity_matrix(1),
        Generator.E: generator_matrix(Generator.E, 1),
        Generator.F: generator_matrix(Generator.F, 1),
        Generator.H1: generator_matrix(Generator.H1, 1),
        Generator.H2: generator_matrix(Generator.H2, 1),
    }


def test_single_factor_action_table():
    e = generator_matrix(Generator.E, 1)
    f = generator_matrix(Generator.F, 1)
    h1 = generator_matrix(Generator.H1, 1)
    h2 = generator_matrix(Generator.H2, 1)
    x, y = 0, 1
    assert e.get(x, y) == 1 and e.get(y, x) == 0 and e.get(x, x) == 0
    assert f.get(y, x) == 1 and f.get(x, y) == 0
    assert h1.get(x, x) == 1 and h1.get(y, y) == 0
    assert h2.get(y, y) == 1 and h2.get(x, x) == 0


def test_graded_sign_on_two_factors():
    e = generator_matrix(Generator.E, 2)
    yy = TensorVector.from_word("yy", rational(1))
    assert yy.apply(e) == (TensorVector.from_word("xy", rational(1))
                           - TensorVector.from_word("yx", rational(1)))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_generator_matrices_match_graded_recursion(k):
    """Independent oracle: build the action recursively from the 2-dim table."""
    base = single_factor()
    left = base
    for _ in range(k - 1):  # (((V x V) x V) ...) with new factor in high bits
        left = combine_factors(left, base, left["dim"].bit_length() - 1)
    right = base
    for i in range(k - 1):  # (... V x (V x V)) with new factor in low bits
        right = combine_factors(base, right, 1)
    for g in Generator:
        assert left[g] == generator_matrix(g, k)
        assert right[g] == generator_matrix(g, k)


@pytest.mark.parametrize("k", range(1, 11))
def test_superalgebra_relations_on_tensor_powers(k):
    e = generator_matrix(Generator.E, k)
    f = generator_matrix(Generator.F, k)
    h1 = generator_matrix(Generator.H1, k)
    h2 = generator_matrix(Generator.H2, k)
    eye = SparseMatrix.identity(1 << k, rational(1))
    assert (e @ e).is_zero()
    assert (f @ f).is_zero()
    assert e @ f + f @ e == rational(k) * eye
    assert h1 + h2 == rational(k) * eye
    assert commutator(h1, e) == e
    assert commutator(h2, e) == -1 * e
    assert commutator(h1, f) == -1 * f
    assert commutator(h2, f) == f


def test_highest_weight_vector_examples():
    v = highest_weight_vector(Subset.of(3, [1, 3]), 4)
    expected = (TensorVector.from_word("xxyx", rational(1))
                - TensorVector.from_word("yxxx", rational(1)))
    assert v == expected
    assert highest_weight_vector(Subset(0), 1) == TensorVector.from_word("x", rational(1))
    assert highest_weight_vector(Subset(1), 2) == (
        TensorVector.from_word("xy", rational(1))
        - TensorVector.from_word("yx", rational(1)))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
def test_weight_pair_reports(k):
    report = verify_weight_pairs(k)
    assert report.passed
    assert report.checks_run == 9 * (1 << (k - 1))


@pytest.mark.parametrize("k", [1, 2, 3, 6])
def test_tensor_basis_rank(k):
    assert tensor_basis_rank(k) == 1 << k
    assert verify_tensor_basis(k).passed


def test_tensor_basis_bound():
    with pytest.raises(BoundExceededError):
        verify_tensor_basis(12)


def test_basis_change_inverts_exactly():
    for k in (1, 2, 3, 4):
        _, change = tensor_basis(k)
        assert change @ tensor_basis_inverse(k) == \
            SparseMatrix.identity(1 << k, rational(1))


def test_decomposition_tables():
    assert [(str(w), m) for w, m in decomposition_table(1)] == [("L[1,0]", 1)]
    assert [(str(w), m) for w, m in decomposition_table(2)] == \
        [("L[1,1]", 1), ("L[2,0]", 1)]
    assert [(str(w), m) for w, m in decomposition_table(4)] == \
        [("L[1,3]", 1), ("L[2,2]", 3), ("L[3,1]", 3), ("L[4,0]", 1)]


@pytest.mark.parametrize("k", range(1, 11))
def test_decomposition_multiplicities(k):
    table = decomposition_table(k)
    for index, (label, mult) in enumerate(table):
        assert label == WeightLabel(index + 1, k - 1 - index)
        assert label.m + label.n == k
        assert mult == comb(k - 1, index)
    assert sum(2 * mult for _, mult in table) == 1 << k


def test_diagram_action_identity_and_empty():
    k = 3
    eye = SparseMatrix.identity(1 << k, rational(1))
    assert diagram_action_matrix(identity_diagram(k - 1), k) == eye
    projection = diagram_action_matrix(empty_diagram(k - 1), k)
    assert projection @ projection == projection
    assert rank(projection) == 2
    # it fixes the s = {} pair and kills every other basis pair
    subsets, change = tensor_basis(k)
    half = len(subsets)
    cols = change.by_cols()
    for j, s in enumerate(subsets):
        for column in (j, half + j):
            image = projection.apply(cols[column])
            if len(s) == 0:
                assert image == cols[column]
            else:
                assert image == {}


def test_diagram_action_matches_subset_action():
    k = 4
    subsets, change = tensor_basis(k)
    half = len(subsets)
    cols = change.by_cols()
    index = {s: j for j, s in enumerate(subsets)}
    from prook.diagrams import apply_to_subset
    for d in enumerate_planar(k - 1)[:12]:
        action = diagram_action_matrix(d, k)
        for j, s in enumerate(subsets):
            image = apply_to_subset(d, s)
            for offset in (0, half):
                got = action.apply(cols[j + offset])
                expected = {} if image is None else cols[index[image] + offset]
                assert got == expected


def test_diagram_action_is_functorial_exhaustively():
    k = 4
    diagrams = enumerate_planar(k - 1)
    matrices = {d: diagram_action_matrix(d, k) for d in diagrams}
    for a in diagrams:
        for b in diagrams:
            assert matrices[a] @ matrices[b] == matrices[compose(a, b)]


def test_diagram_action_size_check():
    with pytest.raises(ValueError):
        diagram_action_matrix(identity_diagram(3), 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_commuting_action_reports(k):
    report = verify_commuting_action(k)
    assert report.passed
    assert report.parameters["mode"] == "exhaustive"
    assert report.checks_run == 4 * comb(2 * (k - 1), k - 1)


def test_commuting_action_sampled_mode():
    report = verify_commuting_action(6, sample=6, seed=11)
    assert report.passed
    assert report.parameters["mode"] == "sampled"
    assert report.checks_run == 24


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_faithful_action_and_commutant_dimensions(k):
    report = verify_faithful_action(k)
    assert report.passed
    expected = comb(2 * (k - 1), k - 1)
    assert commutant_dimension(k) == expected


def test_commutant_bound_error():
    with pytest.raises(BoundExceededError):
        commutant_dimension(9)


def test_centralizer_report():
    report = verify_centralizer(3)
    assert report.passed
    assert report.checks_run == 2


def test_mask_and_word_round_trip():
    assert mask_from_word("xyxx") == 0b0010
    assert word_from_mask(2, 4) == "xyxx"
    for mask in range(16):
        assert mask_from_word(word_from_mask(mask, 4)) == mask
    with pytest.raises(ValueError):
        mask_from_word("xz")


def test_tensor_vector_json_round_trip():
    v = TensorVector(4, {mask_from_word("xyxx"): rational(1)})
    blob = v.to_json()
    assert blob == {"k": 4, "entries": [{"mask": "0b0100", "coeff": "1/1"}]}
    assert TensorVector.from_json(blob) == v
    with pytest.raises(ValueError):
        TensorVector.from_json({"k": 3, "entries": [{"mask": "0b0100", "coeff": "1/1"}]})


def test_tensor_vector_arithmetic():
    a = TensorVector.from_word("xy", rational(2))
    b = TensorVector.from_word("xy", rational(-2))
    assert (a + b).is_zero()
    assert a.scale(rational(1, 2)) == TensorVector.from_word("xy", rational(1))
    with pytest.raises(ValueError):
        TensorVector(1, {5: rational(1)})
