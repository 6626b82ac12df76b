"""The planar rook algebra: linear combinations of diagrams, matrix units,
and the subset modules.

The algebra has the diagrams as a basis; multiplication extends diagram
composition bilinearly, and the identity diagram is the unit.  The matrix
units X_d (alternating sums over edge deletions) multiply by the rule

    X_{d1} * X_{d2} = [domain(d1) == image(d2)] * X_{d3},

where d3 is the planar diagram with bottom set domain(d2) and top set
image(d1).  The subset module splits into one irreducible piece for each
edge count l, spanned by symbols m_s over the size-l subsets; a diagram acts
by m_s -> m_{d(s)} when s lies in its domain and kills m_s otherwise.
Irreducibility is certified by the Burnside criterion (the action matrices
span the full endomorphism algebra), and the joint action over all l is
faithful, which together with the count sum(C(n,l)^2) = C(2n,n) certifies
that the algebra is the direct sum of those matrix blocks.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from .diagrams import (
    PlanarRookDiagram,
    RookDiagram,
    Subset,
    apply_to_subset,
    canonical_planar,
    compose,
    diagram_sort_key,
    enumerate_planar,
    identity_diagram,
    make_diagram,
    subdiagrams,
    subsets_of_size,
)
from .limits import DEFAULT_PAIR_SAMPLE, DEFAULT_ROOK_N, EXHAUSTIVE_PAIRS_N, check_bound
from .linalg import SparseMatrix, rank
from .rings import Rational, rational, rational_from_str, rational_to_str
from .reports import ReportBuilder, VerificationReport


class AlgebraElement:
    """A finite rational linear combination of rook diagrams of a fixed size."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        data = {}
        if terms:
            for diagram, coeff in terms.items():
                if diagram.n != n:
                    raise ValueError("diagram on %d vertices in an n=%d element"
                                     % (diagram.n, n))
                coeff = coeff if isinstance(coeff, Rational) else rational(coeff)
                if coeff:
                    data[diagram] = coeff
        self.n = n
        self.terms = data

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "AlgebraElement":
        return cls(n, {identity_diagram(n): 1})

    @classmethod
    def from_diagram(cls, diagram: RookDiagram, coeff=1) -> "AlgebraElement":
        return cls(diagram.n, {diagram: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.n != other.n:
            raise ValueError("size mismatch")
        data = dict(self.terms)
        for diagram, coeff in other.terms.items():
            total = data.get(diagram, 0) + coeff
            if total:
                data[diagram] = total
            elif diagram in data:
                del data[diagram]
        out = AlgebraElement(self.n)
        out.terms = data
        return out

    def __neg__(self) -> "AlgebraElement":
        out = AlgebraElement(self.n)
        out.terms = {d: -c for d, c in self.terms.items()}
        return out

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            if self.n != other.n:
                raise ValueError("size mismatch")
            data = {}
            for d1, c1 in self.terms.items():
                for d2, c2 in other.terms.items():
                    product = compose(d1, d2)
                    total = data.get(product, 0) + c1 * c2
                    if total:
                        data[product] = total
                    elif product in data:
                        del data[product]
            out = AlgebraElement(self.n)
            out.terms = data
            return out
        coeff = rational(other)
        if not coeff:
            return AlgebraElement(self.n)
        out = AlgebraElement(self.n)
        out.terms = {d: c * coeff for d, c in self.terms.items()}
        return out

    def __rmul__(self, other):
        return self * other

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: diagram_sort_key(item[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "AlgebraElement(%d, 0)" % self.n
        bits = ["%s * %r" % (c, d) for d, c in self.sorted_terms()]
        return "AlgebraElement(%d, %s)" % (self.n, " + ".join(bits))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"diagram": d.to_json(), "coeff": rational_to_str(c)}
                for d, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        n = int(data["n"])
        terms = {}
        for item in data["terms"]:
            diagram = RookDiagram.from_json(item["diagram"])
            coeff = rational_from_str(item["coeff"])
            terms[diagram] = terms.get(diagram, 0) + coeff
        return cls(n, terms)


class SubsetVector:
    """A linear combination of subset symbols m_s, acted on by diagrams."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries=None):
        data = {}
        if entries:
            for s, coeff in entries.items():
                if s.n != n:
                    raise ValueError("subset of {1..%d} in an n=%d vector" % (s.n, n))
                if coeff:
                    data[s] = coeff
        self.n = n
        self.entries = data

    @classmethod
    def basis(cls, s: Subset) -> "SubsetVector":
        return cls(s.n, {s: rational(1)})

    def act(self, d: RookDiagram) -> "SubsetVector":
        """Apply a diagram: m_s -> m_{d(s)} if s is inside the domain, else 0."""
        data = {}
        for s, coeff in self.entries.items():
            image = apply_to_subset(d, s)
            if image is None:
                continue
            total = data.get(image, 0) + coeff
            if total:
                data[image] = total
            elif image in data:
                del data[image]
        out = SubsetVector(self.n)
        out.entries = data
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubsetVector):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __repr__(self) -> str:
        items = ", ".join("%r: %s" % (s, c) for s, c in self.entries.items())
        return "SubsetVector(%d, {%s})" % (self.n, items)


def algebra_product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of diagram composition (b acts first)."""
    return a * b


def matrix_unit(d: PlanarRookDiagram) -> AlgebraElement:
    """X_d: the sum over edge deletions of d with sign (-1)^(deleted count)."""
    terms = {}
    for sub, deleted in subdiagrams(d):
        terms[sub] = rational(1) if deleted % 2 == 0 else rational(-1)
    return AlgebraElement(d.n, terms)


def matrix_unit_product_target(d1: PlanarRookDiagram, d2: PlanarRookDiagram):
    """The expected X_{d1} X_{d2}: None for zero, else the composite label.

    The product survives exactly when domain(d1) == image(d2), in which case
    it is the matrix unit of the planar diagram with bottom set domain(d2)
    and top set image(d1).
    """
    if set(d1.domain) != set(d2.image):
        return None
    return canonical_planar(d1.n, Subset.of(d1.n, d2.domain), Subset.of(d1.n, d1.image))


def verify_matrix_unit_rule(n: int, sample: int | None = None, seed: int = 0) -> VerificationReport:
    """Check the matrix-unit product rule over diagram pairs.

    Exhaustive for small n; above EXHAUSTIVE_PAIRS_N a seeded random sample
    of pairs is used (default size DEFAULT_PAIR_SAMPLE).
    """
    check_bound("n", n, DEFAULT_ROOK_N, "pair count C(2n,n)^2 with 2^edges-term products")
    diagrams = enumerate_planar(n)
    exhaustive = n <= EXHAUSTIVE_PAIRS_N and sample is None
    if exhaustive:
        pairs = [(d1, d2) for d1 in diagrams for d2 in diagrams]
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        count = DEFAULT_PAIR_SAMPLE if sample is None else sample
        pairs = [(rng.choice(diagrams), rng.choice(diagrams)) for _ in range(count)]
        mode = "sampled"
    builder = ReportBuilder("matrix-unit-rule", {"n": n, "mode": mode})
    for d1, d2 in pairs:
        product = matrix_unit(d1) * matrix_unit(d2)
        target = matrix_unit_product_target(d1, d2)
        expected = AlgebraElement.zero(n) if target is None else matrix_unit(target)
        if not builder.check(
            product == expected,
            lambda d1=d1, d2=d2, product=product: {
                "d1": d1.to_json(),
                "d2": d2.to_json(),
                "product": product.to_json(),
            },
        ):
            break
    return builder.finish()


def module_basis(n: int, size: int):
    """The ordered m_s basis of the size-l subset module (lexicographic)."""
    return subsets_of_size(n, size)


def module_action_matrix(d: RookDiagram, size: int) -> SparseMatrix:
    """The matrix of a diagram on the size-l subset module.

    Columns follow the lexicographic subset order; a subset outside the
    diagram's domain contributes a zero column.
    """
    if not 0 <= size <= d.n:
        raise ValueError("subset size must lie in 0..%d" % d.n)
    basis = module_basis(d.n, size)
    index = {s: i for i, s in enumerate(basis)}
    entries = {}
    for j, s in enumerate(basis):
        image = apply_to_subset(d, s)
        if image is not None:
            entries[(index[image], j)] = rational(1)
    dim = len(basis)
    return SparseMatrix(dim, dim, entries)


def _span_dimension(n: int, size: int) -> int:
    """Dimension of the span of all diagram action matrices on one module."""
    dim = comb(n, size)
    rows = []
    for d in enumerate_planar(n):
        rows.append(module_action_matrix(d, size).flatten())
    return rank(SparseMatrix.from_row_dicts(rows, dim * dim))


def verify_irreducibility(n: int, size: int) -> VerificationReport:
    """Burnside certificate: the action matrices span the full matrix algebra."""
    check_bound("n", n, DEFAULT_ROOK_N, "rank of C(2n,n) stacked C(n,l)^2-vectors")
    builder = ReportBuilder("rook-module-irreducibility", {"n": n, "size": size})
    expected = comb(n, size) ** 2
    span = _span_dimension(n, size)
    builder.check(
        span == expected,
        lambda: {"span_dimension": span, "expected": expected},
    )
    return builder.finish()


def verify_semisimplicity(n: int) -> VerificationReport:
    """Certify the block decomposition of the whole algebra.

    (a) the numeric identity sum(C(n,l)^2) = C(2n,n) = number of diagrams;
    (b) the joint action on all subset modules is faithful (the stacked
        coordinate matrix of all diagrams has full row rank).
    Together these pin the algebra down as the direct sum of the C(n,l)-sized
    matrix blocks, one per edge count.
    """
    check_bound("n", n, DEFAULT_ROOK_N, "rank of a C(2n,n) square coordinate matrix")
    builder = ReportBuilder("rook-semisimplicity", {"n": n})
    diagrams = enumerate_planar(n)
    block_total = sum(comb(n, size) ** 2 for size in range(n + 1))
    builder.check(
        block_total == comb(2 * n, n) == len(diagrams),
        lambda: {"sum_of_squares": block_total, "diagram_count": len(diagrams)},
    )
    if builder.failed:
        return builder.finish()
    offsets = []
    offset = 0
    for size in range(n + 1):
        offsets.append(offset)
        offset += comb(n, size) ** 2
    rows = []
    for d in diagrams:
        row = {}
        for size in range(n + 1):
            base = offsets[size]
            for key, value in module_action_matrix(d, size).flatten().items():
                row[base + key] = value
        rows.append(row)
    joint_rank = rank(SparseMatrix.from_row_dicts(rows, offset))
    builder.check(
        joint_rank == len(diagrams),
        lambda: {"joint_rank": joint_rank, "diagram_count": len(diagrams)},
    )
    return builder.finish()
