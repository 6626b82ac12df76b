"""Tensor powers of the natural 2-dimensional gl(1|1)-module and the
commuting planar rook action.

The superalgebra has basis e, f (odd) and h1, h2 (even), acting on the
2-dimensional space V spanned by an even vector x and an odd vector y:

    e x = 0, e y = x,   f x = y, f y = 0,
    h1 x = x, h1 y = 0,   h2 x = 0, h2 y = y.

On a k-fold tensor product an element acts factor by factor with the graded
sign rule: an odd operator passing an odd factor picks up a minus sign, so e
and f act on factor i with sign (-1)^(number of y's strictly left of i),
while h1 and h2 are diagonal and count x's and y's.

Basis tensors are encoded as k-bit masks: bit i-1 is factor i, with 0 = x
and 1 = y (leftmost factor = lowest bit).

For each subset s of {1..k-1} the vector v_s = e(y (x) u_s), where u_s has
x's at positions of s and y's elsewhere, is a highest weight vector, and
{v_s, f v_s} over all s is a basis of the tensor space.  Diagrams on k-1
vertices act by d v_s = v_{d(s)} and d(f v_s) = f v_{d(s)} (zero when s is
outside the domain); the resulting matrices commute with the superalgebra,
are linearly independent, and span the full commutant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from .diagrams import RookDiagram, Subset, all_subsets, apply_to_subset, enumerate_planar
from .limits import (
    DEFAULT_COMMUTANT_K,
    DEFAULT_DIAGRAM_K,
    DEFAULT_DIAGRAM_SAMPLE,
    DEFAULT_TENSOR_K,
    check_bound,
)
from .linalg import SparseMatrix, commutator, invert, nullspace_dimension, rank
from .reports import ReportBuilder, VerificationReport
from .rings import Rational, rational, rational_from_str, rational_to_str


class Generator(Enum):
    E = "e"
    F = "f"
    H1 = "h1"
    H2 = "h2"


def tensor_dim(k: int) -> int:
    return 1 << k


def y_count(mask: int) -> int:
    """Number of y factors (set bits) in a basis mask."""
    return mask.bit_count()


def x_count(k: int, mask: int) -> int:
    return k - mask.bit_count()


def mask_from_word(word: str) -> int:
    """Encode a word in the letters x/y, leftmost letter = factor 1."""
    mask = 0
    for i, letter in enumerate(word):
        if letter == "y":
            mask |= 1 << i
        elif letter != "x":
            raise ValueError("tensor words use only 'x' and 'y', got %r" % word)
    return mask

def word_from_mask(mask: int, k: int) -> str:
    return "".join("y" if mask >> i & 1 else "x" for i in range(k))


class TensorVector:
    """A sparse vector in the 2^k-dimensional tensor space.

    Entries map basis masks to coefficients; the coefficient ring may be the
    rationals or Laurent polynomials.
    """

    __slots__ = ("k", "entries")

    def __init__(self, k: int, entries=None):
        if k < 0:
            raise ValueError("k must be nonnegative")
        data = {}
        if entries:
            top = 1 << k
            for mask, coeff in entries.items():
                if not 0 <= mask < top:
                    raise ValueError("mask %r out of range for k=%d" % (mask, k))
                if coeff:
                    data[mask] = coeff
        self.k = k
        self.entries = data

    @classmethod
    def zero(cls, k: int) -> "TensorVector":
        return cls(k)

    @classmethod
    def basis(cls, k: int, mask: int, coeff=1) -> "TensorVector":
        return cls(k, {mask: coeff})

    @classmethod
    def from_word(cls, word: str, coeff=1) -> "TensorVector":
        return cls(len(word), {mask_from_word(word): coeff})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.k == other.k and self.entries == other.entries

    def __add__(self, other: "TensorVector") -> "TensorVector":
        if self.k != other.k:
            raise ValueError("tensor size mismatch")
        data = dict(self.entries)
        for mask, coeff in other.entries.items():
            total = data.get(mask, 0) + coeff
            if total:
                data[mask] = total
            elif mask in data:
                del data[mask]
        out = TensorVector(self.k)
        out.entries = data
        return out

    def __neg__(self) -> "TensorVector":
        out = TensorVector(self.k)
        out.entries = {mask: -coeff for mask, coeff in self.entries.items()}
        return out

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def scale(self, factor) -> "TensorVector":
        if not factor:
            return TensorVector(self.k)
        out = TensorVector(self.k)
        out.entries = {mask: factor * coeff for mask, coeff in self.entries.items()}
        return out

    def apply(self, matrix: SparseMatrix) -> "TensorVector":
        if matrix.cols != 1 << self.k:
            raise ValueError("matrix size does not match tensor space")
        out = TensorVector(self.k)
        out.entries = matrix.apply(self.entries)
        return out

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        bits = []
        for mask in sorted(self.entries):
            bits.append("%s*%s" % (self.entries[mask], word_from_mask(mask, self.k)))
        return " + ".join(bits)

    def __repr__(self) -> str:
        return "TensorVector(%d, {%s})" % (
            self.k,
            ", ".join("%s: %s" % (word_from_mask(m, self.k), c)
                      for m, c in sorted(self.entries.items())))

    def to_json(self, coeff_to_json=None) -> dict:
        to_str = coeff_to_json or rational_to_str
        return {
            "k": self.k,
            "entries": [
                {"mask": "0b" + "".join("1" if mask >> i & 1 else "0" for i in range(self.k)),
                 "coeff": to_str(self.entries[mask])}
                for mask in sorted(self.entries)
            ],
        }

    @classmethod
    def from_json(cls, data: dict, coeff_from_json=None) -> "TensorVector":
        parse = coeff_from_json or rational_from_str
        k = int(data["k"])
        entries = {}
        for item in data["entries"]:
            bits = item["mask"]
            if bits.startswith("0b"):
                bits = bits[2:]
            if len(bits) != k:
                raise ValueError("mask %r must have %d bits" % (item["mask"], k))
            mask = 0
            for i, bit in enumerate(bits):
                if bit == "1":
                    mask |= 1 << i
                elif bit != "0":
                    raise ValueError("bad mask %r" % (item["mask"],))
            entries[mask] = parse(item["coeff"])
        return cls(k, entries)


@dataclass(frozen=True)
class WeightLabel:
    """The highest weight [m, n]: the h1 and h2 eigenvalues."""

    m: int
    n: int

    def __str__(self) -> str:
        return "L[%d,%d]" % (self.m, self.n)


def _sign_before(mask: int, i: int) -> int:
    """(-1)^(number of y factors strictly left of factor i)."""
    return -1 if (mask & ((1 << (i - 1)) - 1)).bit_count() % 2 else 1


@lru_cache(maxsize=None)
def generator_matrix(g: Generator, k: int) -> SparseMatrix:
    """The 2^k x 2^k matrix of a superalgebra generator on the tensor power."""
    if k < 1:
        raise ValueError("k must be at least 1")
    dim = 1 << k
    entries = {}
    if g is Generator.H1:
        for mask in range(dim):
            count = k - mask.bit_count()
            if count:
                entries[(mask, mask)] = rational(count)
    elif g is Generator.H2:
        for mask in range(dim):
            count = mask.bit_count()
            if count:
                entries[(mask, mask)] = rational(count)
    elif g is Generator.E:
        # e turns one y into x, with the prefix sign
        for mask in range(dim):
            for i in range(1, k + 1):
                bit = 1 << (i - 1)
                if mask & bit:
                    entries[(mask ^ bit, mask)] = rational(_sign_before(mask, i))
    else:
        # f turns one x into y, with the prefix sign
        for mask in range(dim):
            for i in range(1, k + 1):
                bit = 1 << (i - 1)
                if not mask & bit:
                    entries[(mask | bit, mask)] = rational(_sign_before(mask, i))
    return SparseMatrix(dim, dim, entries)


def subset_mask(s: Subset, k: int) -> int:
    """The mask of y (x) u_s: factor 1 is y, factor i+1 is x exactly for i in s."""
    if s.n != k - 1:
        raise ValueError("subset must live on {1..%d}" % (k - 1))
    mask = 1  # leading y
    for i in range(1, k):
        if i not in s:
            mask |= 1 << i
    return mask


def highest_weight_vector(s: Subset, k: int) -> TensorVector:
    """v_s = e(y (x) u_s); nonzero with x (x) u_s as one of its terms."""
    start = TensorVector.basis(k, subset_mask(s, k), rational(1))
    return start.apply(generator_matrix(Generator.E, k))


@lru_cache(maxsize=None)
def tensor_basis(k: int):
    """The basis-change matrix from {v_s} u {f v_s} coordinates to masks.

    Returns (subsets, matrix): subsets of {1..k-1} ordered by size then
    lexicographically; column j is v_{subsets[j]}, column 2^(k-1)+j is
    f v_{subsets[j]}.
    """
    subsets = all_subsets(k - 1)
    half = len(subsets)
    f_matrix = generator_matrix(Generator.F, k)
    entries = {}
    for j, s in enumerate(subsets):
        v = highest_weight_vector(s, k)
        for mask, coeff in v.entries.items():
            entries[(mask, j)] = coeff
        fv = v.apply(f_matrix)
        for mask, coeff in fv.entries.items():
            entries[(mask, half + j)] = coeff
    return subsets, SparseMatrix(1 << k, 1 << k, entries)


@lru_cache(maxsize=None)
def tensor_basis_rank(k: int) -> int:
    _, matrix = tensor_basis(k)
    return rank(matrix)


@lru_cache(maxsize=None)
def tensor_basis_inverse(k: int) -> SparseMatrix:
    _, matrix = tensor_basis(k)
    return invert(matrix)


def verify_weight_pairs(k: int) -> VerificationReport:
    """Check that each pair (v_s, f v_s) spans a 2-dimensional submodule.

    For every subset s: e v_s = 0, f(f v_s) = 0, e(f v_s) = k v_s, and the
    h1/h2 eigenvalues are (|s|+1, k-1-|s|) on v_s and (|s|, k-|s|) on f v_s.
    """
    builder = ReportBuilder("gl-weight-pairs", {"k": k})
    e = generator_matrix(Generator.E, k)
    f = generator_matrix(Generator.F, k)
    h1 = generator_matrix(Generator.H1, k)
    h2 = generator_matrix(Generator.H2, k)
    for s in all_subsets(k - 1):
        v = highest_weight_vector(s, k)
        fv = v.apply(f)
        size = len(s)
        checks = [
            ("v_s is nonzero", not v.is_zero()),
            ("e v_s = 0", v.apply(e).is_zero()),
            ("f f v_s = 0", fv.apply(f).is_zero()),
            ("e f v_s = k v_s", fv.apply(e) == v.scale(rational(k))),
            ("f v_s is nonzero", not fv.is_zero()),
            ("h1 v_s", v.apply(h1) == v.scale(rational(size + 1))),
            ("h2 v_s", v.apply(h2) == v.scale(rational(k - 1 - size))),
            ("h1 f v_s", fv.apply(h1) == fv.scale(rational(size))),
            ("h2 f v_s", fv.apply(h2) == fv.scale(rational(k - size))),
        ]
        for label, ok in checks:
            if not builder.check(ok, lambda s=s, label=label: {
                    "s": s.to_json(), "identity": label}):
                return builder.finish()
    return builder.finish()


def verify_tensor_basis(k: int) -> VerificationReport:
    """Check that the 2^k vectors {v_s, f v_s} form a basis (full rank).

    The change-of-basis matrix and its inverse are available through
    tensor_basis(k) and tensor_basis_inverse(k).
    """
    check_bound("k", k, DEFAULT_TENSOR_K, "rank of a 2^k square matrix")
    builder = ReportBuilder("gl-tensor-basis", {"k": k})
    r = tensor_basis_rank(k)
    builder.check(r == 1 << k, lambda: {"rank": r, "expected": 1 << k})
    return builder.finish()


def decomposition_table(k: int):
    """Multiplicities of the irreducible summands of the k-th tensor power.

    Returns [(WeightLabel(l+1, k-1-l), multiplicity)] for l = 0..k-1, with
    the multiplicity counted directly as the number of subsets of size l.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    counts = [0] * k
    for s in all_subsets(k - 1):
        counts[len(s)] += 1
    return [(WeightLabel(size + 1, k - 1 - size), counts[size]) for size in range(k)]


@lru_cache(maxsize=None)
def _subset_index(k: int) -> dict:
    return {s: j for j, s in enumerate(all_subsets(k - 1))}


def _pair_action_matrix(d: RookDiagram, k: int) -> SparseMatrix:
    """The action of a diagram in (v_s, f v_s) coordinates: a 0/1 matrix."""
    index = _subset_index(k)
    half = len(index)
    entries = {}
    for s, j in index.items():
        image = apply_to_subset(d, s)
        if image is None:
            continue
        i = index[image]
        entries[(i, j)] = rational(1)
        entries[(half + i, half + j)] = rational(1)
    return SparseMatrix(2 * half, 2 * half, entries)


def diagram_action_matrix(d: RookDiagram, k: int) -> SparseMatrix:
    """The matrix of a diagram on the tensor power, in mask coordinates.

    In the {v_s, f v_s} basis the diagram permutes (or kills) basis vectors;
    conjugating by the basis change expresses it on the standard tensors.
    """
    if d.n != k - 1:
        raise ValueError("diagram on %d vertices cannot act for k=%d" % (d.n, k))
    _, change = tensor_basis(k)
    return change @ _pair_action_matrix(d, k) @ tensor_basis_inverse(k)


def verify_commuting_action(k: int, sample: int | None = None, seed: int = 0) -> VerificationReport:
    """Check that every diagram matrix commutes with all four generators.

    Exhaustive over the monoid up to the diagram bound; sampled above it.
    """
    diagrams = enumerate_planar(k - 1)
    if k <= DEFAULT_DIAGRAM_K and sample is None:
        chosen = diagrams
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        count = DEFAULT_DIAGRAM_SAMPLE if sample is None else sample
        chosen = tuple(rng.choice(diagrams) for _ in range(count))
        mode = "sampled"
    builder = ReportBuilder("gl-commuting-action", {"k": k, "mode": mode})
    generators = [(g, generator_matrix(g, k)) for g in Generator]
    for d in chosen:
        action = diagram_action_matrix(d, k)
        for g, matrix in generators:
            if not builder.check(
                commutator(action, matrix).is_zero(),
                lambda d=d, g=g: {"diagram": d.to_json(), "generator": g.value},
            ):
                return builder.finish()
    return builder.finish()


def verify_faithful_action(k: int) -> VerificationReport:
    """Check that the diagram matrices are linearly independent.

    The span of the monoid inside End(V^(x)k) then has dimension C(2(k-1), k-1),
    the full diagram count.
    """
    check_bound("k", k, DEFAULT_DIAGRAM_K, "rank of C(2(k-1),k-1) stacked 4^k-vectors")
    builder = ReportBuilder("gl-faithful-action", {"k": k})
    diagrams = enumerate_planar(k - 1)
    rows = [diagram_action_matrix(d, k).flatten() for d in diagrams]
    r = rank(SparseMatrix.from_row_dicts(rows, 1 << (2 * k)))
    builder.check(
        r == len(diagrams) == comb(2 * (k - 1), k - 1),
        lambda: {"rank": r, "diagram_count": len(diagrams)},
    )
    return builder.finish()


def commutant_constraints(matrices) -> tuple:
    """Rows of the linear system [X, M] = 0 for every M, over vec(X).

    X is N x N with unknown (i, j) at index i*N + j; each matrix contributes
    the equations (X M - M X)[i, j] = 0.
    """
    rows = []
    size = None
    for matrix in matrices:
        if matrix.rows != matrix.cols:
            raise ValueError("commutant constraints need square matrices")
        if size is None:
            size = matrix.rows
        elif matrix.rows != size:
            raise ValueError("matrices must share a size")
        by_rows = matrix.by_rows()
        by_cols = matrix.by_cols()
        for i in range(size):
            m_row = by_rows.get(i, {})
            for j in range(size):
                m_col = by_cols.get(j, {})
                row = {}
                for m, value in m_col.items():
                    # X[i, m] * M[m, j]
                    key = i * size + m
                    total = row.get(key, 0) + value
                    if total:
                        row[key] = total
                    elif key in row:
                        del row[key]
                for m, value in m_row.items():
                    # -M[i, m] * X[m, j]
                    key = m * size + j
                    total = row.get(key, 0) - value
                    if total:
                        row[key] = total
                    elif key in row:
                        del row[key]
                if row:
                    rows.append(row)
    return tuple(rows), (size or 0) ** 2


def commutant_dimension(k: int) -> int:
    """Dimension of the joint commutant of the four generator matrices.

    Checking the generators suffices: they generate the image of the whole
    enveloping algebra inside End(V^(x)k).
    """
    check_bound("k", k, DEFAULT_COMMUTANT_K, "nullspace over 4^k unknowns")
    matrices = [generator_matrix(g, k) for g in Generator]
    rows, unknowns = commutant_constraints(matrices)
    system = SparseMatrix.from_row_dicts(list(rows), unknowns)
    return nullspace_dimension(system)


def verify_centralizer(k: int) -> VerificationReport:
    """Certify that the diagram matrices fill the whole commutant.

    The diagram matrices are linearly independent (rank = C(2(k-1), k-1),
    the diagram count) and the independently computed commutant of the four
    generator matrices has that same dimension; since the diagram matrices
    commute with the generators, the two spaces coincide.
    """
    check_bound("k", k, DEFAULT_COMMUTANT_K, "nullspace over 4^k unknowns")
    builder = ReportBuilder("gl-centralizer", {"k": k})
    diagrams = enumerate_planar(k - 1)
    expected = comb(2 * (k - 1), k - 1)
    rows = [diagram_action_matrix(d, k).flatten() for d in diagrams]
    span = rank(SparseMatrix.from_row_dicts(rows, 1 << (2 * k)))
    builder.check(
        span == len(diagrams) == expected,
        lambda: {"diagram_span": span, "diagram_count": len(diagrams),
                 "expected": expected},
    )
    if builder.failed:
        return builder.finish()
    dim = commutant_dimension(k)
    builder.check(
        dim == expected,
        lambda: {"commutant_dimension": dim, "expected": expected},
    )
    return builder.finish()
