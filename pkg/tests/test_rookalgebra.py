"""The diagram algebra: products, matrix units, subset modules, certificates."""

import random
from math import comb

import pytest

from prook.diagrams import (
    Subset,
    canonical_planar,
    compose,
    empty_diagram,
    enumerate_planar,
    identity_diagram,
    make_diagram,
    subdiagrams,
)
from prook.limits import BoundExceededError
from prook.linalg import SparseMatrix
from prook.rings import rational
from prook.rookalgebra import (
    AlgebraElement,
    SubsetVector,
    matrix_unit,
    matrix_unit_product_target,
    module_action_matrix,
    module_basis,
    verify_irreducibility,
    verify_matrix_unit_rule,
    verify_semisimplicity,
)


def random_element(n: int, rng: random.Random) -> AlgebraElement:
    diagrams = enumerate_planar(n)
    terms = {}
    for _ in range(rng.randint(0, 4)):
        terms[rng.choice(diagrams)] = rational(rng.randint(-3, 3))
    return AlgebraElement(n, terms)


def test_single_term_product_is_composition():
    d1 = make_diagram(5, [(1, 2), (2, 5), (5, 3)])
    d2 = make_diagram(5, [(2, 1), (4, 2)])
    product = AlgebraElement.from_diagram(d1) * AlgebraElement.from_diagram(d2)
    assert product == AlgebraElement.from_diagram(compose(d1, d2))


def test_unit_element():
    rng = random.Random(3)
    for n in (0, 1, 3):
        one = AlgebraElement.unit(n)
        for _ in range(5):
            a = random_element(n, rng)
            assert one * a == a
            assert a * one == a


def test_distributivity_merges_like_terms():
    diagrams = enumerate_planar(2)
    d1, d2, d3 = diagrams[1], diagrams[2], diagrams[3]
    left = (AlgebraElement.from_diagram(d1) + AlgebraElement.from_diagram(d2)) * \
        AlgebraElement.from_diagram(d3)
    right = AlgebraElement.from_diagram(compose(d1, d3)) + \
        AlgebraElement.from_diagram(compose(d2, d3))
    assert left == right


def test_product_associative_exhaustive_basis():
    for n in (0, 1, 2):
        elements = [AlgebraElement.from_diagram(d) for d in enumerate_planar(n)]
        for a in elements:
            for b in elements:
                ab = a * b
                for c in elements:
                    assert ab * c == a * (b * c)


def test_product_associative_random_combinations():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(0, 4)
        a, b, c = (random_element(n, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_scalar_and_additive_structure():
    rng = random.Random(5)
    a = random_element(3, rng)
    b = random_element(3, rng)
    assert a + b == b + a
    assert a - a == AlgebraElement.zero(3)
    assert 0 * a == AlgebraElement.zero(3)
    assert rational(1, 2) * (2 * a) == a


def test_matrix_unit_examples():
    assert matrix_unit(empty_diagram(4)) == AlgebraElement.from_diagram(empty_diagram(4))
    d_one = make_diagram(3, [(2, 2)])
    assert matrix_unit(d_one) == (
        AlgebraElement.from_diagram(d_one)
        - AlgebraElement.from_diagram(empty_diagram(3))
    )
    d = make_diagram(5, [(2, 1), (4, 2)])
    expected = (
        AlgebraElement.from_diagram(d)
        - AlgebraElement.from_diagram(make_diagram(5, [(2, 1)]))
        - AlgebraElement.from_diagram(make_diagram(5, [(4, 2)]))
        + AlgebraElement.from_diagram(empty_diagram(5))
    )
    assert matrix_unit(d) == expected


@pytest.mark.parametrize("n", range(5))
def test_matrix_unit_inverts_by_summation(n):
    # summing X over all sub-diagrams recovers the diagram itself
    for d in enumerate_planar(n):
        total = AlgebraElement.zero(n)
        for sub, _ in subdiagrams(d):
            total = total + matrix_unit(sub)
        assert total == AlgebraElement.from_diagram(d)


def test_matrix_unit_rule_exhaustive_small():
    for n in (0, 1, 2, 3):
        report = verify_matrix_unit_rule(n)
        assert report.passed
        assert report.checks_run == comb(2 * n, n) ** 2


def test_matrix_unit_rule_sampled():
    report = verify_matrix_unit_rule(4, seed=123)
    assert report.passed
    assert report.parameters["mode"] == "sampled"
    assert report.checks_run == 1000


def test_matrix_unit_rule_bound():
    with pytest.raises(BoundExceededError):
        verify_matrix_unit_rule(9)


def test_matrix_unit_delta_zero_case():
    # mismatched supports multiply to zero
    d1 = canonical_planar(3, [1], [1])
    d2 = canonical_planar(3, [2], [2])
    assert set(d1.domain) != set(d2.image)
    assert (matrix_unit(d1) * matrix_unit(d2)).is_zero()
    assert matrix_unit_product_target(d1, d2) is None


def test_matrix_unit_delta_nonzero_case():
    d = canonical_planar(4, [1, 2], [3, 4])
    target = matrix_unit_product_target(d, d)
    assert target is None  # domain {1,2} vs image {3,4}
    d1 = canonical_planar(4, [3, 4], [1, 2])  # domain {3,4} -> image {1,2}
    target = matrix_unit_product_target(d1, d)
    assert target == canonical_planar(4, [1, 2], [1, 2])
    assert matrix_unit(d1) * matrix_unit(d) == matrix_unit(target)


def test_module_action_examples():
    n = 5
    d = canonical_planar(n, Subset.of(n, [1, 2, 5]), Subset.of(n, [2, 3, 4]))
    m = module_action_matrix(d, 2)
    basis = list(module_basis(n, 2))
    col = basis.index(Subset.of(n, [2, 5]))
    row = basis.index(Subset.of(n, [3, 4]))
    assert m.get(row, col) == 1
    assert sum(1 for (r, c) in m.entries if c == col) == 1
    dead = basis.index(Subset.of(n, [4, 5]))
    assert all(c != dead for (_, c) in m.entries)


def test_module_action_identity_and_size_zero():
    assert module_action_matrix(identity_diagram(4), 2) == \
        SparseMatrix.identity(comb(4, 2), rational(1))
    for d in enumerate_planar(3):
        assert module_action_matrix(d, 0) == SparseMatrix.identity(1, rational(1))


def test_module_action_is_multiplicative():
    for n in (0, 1, 2, 3):
        diagrams = enumerate_planar(n)
        for size in range(n + 1):
            matrices = {d: module_action_matrix(d, size) for d in diagrams}
            for a in diagrams:
                for b in diagrams:
                    assert matrices[a] @ matrices[b] == \
                        module_action_matrix(compose(a, b), size)


def test_subset_vector_matches_matrix_action():
    n = 4
    rng = random.Random(2)
    basis = module_basis(n, 2)
    for d in rng.sample(enumerate_planar(n), 10):
        m = module_action_matrix(d, 2)
        for j, s in enumerate(basis):
            acted = SubsetVector.basis(s).act(d)
            column = {basis[r]: v for (r, c), v in m.entries.items() if c == j}
            assert acted.entries == column


def test_irreducibility_reports():
    assert verify_irreducibility(3, 1).passed  # span dimension 9
    assert verify_irreducibility(4, 2).passed  # span dimension 36
    for size in range(4):
        assert verify_irreducibility(3, size).passed


def test_semisimplicity_reports():
    for n in range(5):
        report = verify_semisimplicity(n)
        assert report.passed
    with pytest.raises(BoundExceededError):
        verify_semisimplicity(8)


def test_algebra_element_json_round_trip():
    d = make_diagram(3, [(1, 2)])
    element = AlgebraElement(3, {d: rational(-1, 2),
                                 identity_diagram(3): rational(2)})
    blob = element.to_json()
    assert blob["n"] == 3
    assert [term["coeff"] for term in blob["terms"]] == ["-1/2", "2/1"]
    assert AlgebraElement.from_json(blob) == element


def test_algebra_element_size_check():
    with pytest.raises(ValueError):
        AlgebraElement(3, {identity_diagram(2): rational(1)})
    with pytest.raises(ValueError):
        AlgebraElement.unit(2) * AlgebraElement.unit(3)
