"""Colored permutation diagrams and their dictionary with planar rook diagrams.

A colored permutation diagram on k strands is a permutation of {1..k} whose
strands each carry a sign, + or -, such that no two strands of the same
color cross and the first strand runs straight down with color +.  Such a
diagram is determined by its pair of boundary label sequences (top, bottom):
matching the i-th + on top to the i-th + on the bottom (and likewise for -)
is the only same-color-noncrossing wiring.

Deleting the first strand and every - strand, and shifting labels down by
one, yields a planar rook diagram on k-1 vertices; the inverse map restores
+ labels at position 1 and one step above each edge endpoint.  Under this
dictionary the diagrams multiply exactly like the matrix units X_d of the
planar rook algebra: the product of two colored diagrams survives only when
the inner labels agree, and then equals the diagram wired from the outer
labels.
"""

from __future__ import annotations

from itertools import product as iter_product
from math import comb

from .diagrams import PlanarRookDiagram, RookDiagram, Subset, enumerate_planar
from .limits import DEFAULT_DIAGRAM_K, DEFAULT_QUANTUM_K, check_bound
from .reports import ReportBuilder, VerificationReport
from .rookalgebra import AlgebraElement, matrix_unit, matrix_unit_product_target


class InvalidLabelError(ValueError):
    """Raised for sign-sequence pairs that label no diagram."""


_COLOR_ALIASES = {"+": "+", "-": "-", "−": "-"}


def _normalize_sign(sign: str) -> str:
    try:
        return _COLOR_ALIASES[sign]
    except KeyError:
        raise InvalidLabelError("signs must be '+' or '-', got %r" % (sign,)) from None


class SignSequence:
    """A length-k sequence of +/- signs whose first entry is +."""

    __slots__ = ("k", "signs")

    def __init__(self, signs):
        if isinstance(signs, SignSequence):
            signs = signs.signs
        normalized = "".join(_normalize_sign(s) for s in signs)
        if not normalized:
            raise InvalidLabelError("sign sequences must be nonempty")
        if normalized[0] != "+":
            raise InvalidLabelError("sign sequences must start with '+', got %r" % normalized)
        self.k = len(normalized)
        self.signs = normalized

    def minus_count(self) -> int:
        return self.signs.count("-")

    def positions_of(self, sign: str) -> tuple:
        sign = _normalize_sign(sign)
        return tuple(i + 1 for i, s in enumerate(self.signs) if s == sign)

    def __len__(self) -> int:
        return self.k

    def __getitem__(self, position: int) -> str:
        """The sign at a 1-based position."""
        if not 1 <= position <= self.k:
            raise IndexError(position)
        return self.signs[position - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignSequence):
            return NotImplemented
        return self.signs == other.signs

    def __hash__(self) -> int:
        return hash(self.signs)

    def __repr__(self) -> str:
        return "SignSequence(%r)" % self.signs

    def to_json(self) -> dict:
        return {"k": self.k, "signs": self.signs}

    @classmethod
    def from_json(cls, data: dict) -> "SignSequence":
        seq = cls(data["signs"])
        if int(data.get("k", seq.k)) != seq.k:
            raise InvalidLabelError("length field disagrees with the signs string")
        return seq


def all_sign_sequences(k: int):
    """Every admissible sequence of length k (first sign +), lexicographic."""
    return tuple(SignSequence("+" + "".join(tail))
                 for tail in iter_product("+-", repeat=k - 1))


class ColoredPermDiagram:
    """A permutation of {1..k} with signed strands, same-color noncrossing."""

    __slots__ = ("k", "strands")

    def __init__(self, k: int, strands):
        normalized = []
        for top, bottom, color in strands:
            if not (1 <= top <= k and 1 <= bottom <= k):
                raise InvalidLabelError("strand (%r, %r) out of range" % (top, bottom))
            normalized.append((top, bottom, _normalize_sign(color)))
        normalized.sort()
        if [s[0] for s in normalized] != list(range(1, k + 1)):
            raise InvalidLabelError("top endpoints must be a permutation of 1..%d" % k)
        if sorted(s[1] for s in normalized) != list(range(1, k + 1)):
            raise InvalidLabelError("bottom endpoints must be a permutation of 1..%d" % k)
        if normalized and normalized[0] != (1, 1, "+"):
            raise InvalidLabelError("the first strand must run 1 -> 1 with color '+'")
        for color in ("+", "-"):
            chain = [(t, b) for t, b, c in normalized if c == color]
            for (t1, b1), (t2, b2) in zip(chain, chain[1:]):
                if b1 > b2:  # chain is sorted by top, so this is a crossing
                    raise InvalidLabelError(
                        "same-color strands (%d,%d) and (%d,%d) cross" % (t1, b1, t2, b2))
        self.k = k
        self.strands = tuple(normalized)

    @property
    def top_labels(self) -> SignSequence:
        colors = [""] * self.k
        for top, _, color in self.strands:
            colors[top - 1] = color
        return SignSequence("".join(colors))

    @property
    def bottom_labels(self) -> SignSequence:
        colors = [""] * self.k
        for _, bottom, color in self.strands:
            colors[bottom - 1] = color
        return SignSequence("".join(colors))

    def bottom_of(self, top: int) -> int:
        return self.strands[top - 1][1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredPermDiagram):
            return NotImplemented
        return self.k == other.k and self.strands == other.strands

    def __hash__(self) -> int:
        return hash((self.k, self.strands))

    def __repr__(self) -> str:
        return "ColoredPermDiagram(%d, %r)" % (self.k, list(self.strands))

    def to_json(self) -> dict:
        return {"k": self.k, "strands": [[t, b, c] for t, b, c in self.strands]}

    @classmethod
    def from_json(cls, data: dict) -> "ColoredPermDiagram":
        return cls(int(data["k"]),
                   [(int(t), int(b), c) for t, b, c in data["strands"]])


def colored_from_labels(theta: SignSequence, eta: SignSequence) -> ColoredPermDiagram:
    """The unique colored diagram with top labels theta and bottom labels eta."""
    theta = SignSequence(theta)
    eta = SignSequence(eta)
    if theta.k != eta.k:
        raise InvalidLabelError("label lengths differ: %d vs %d" % (theta.k, eta.k))
    if theta.minus_count() != eta.minus_count():
        raise InvalidLabelError(
            "label pair has %d vs %d minus signs; such a pair labels nothing"
            % (theta.minus_count(), eta.minus_count()))
    strands = []
    for color in ("+", "-"):
        for top, bottom in zip(theta.positions_of(color), eta.positions_of(color)):
            strands.append((top, bottom, color))
    return ColoredPermDiagram(theta.k, strands)


def to_planar_rook(cd: ColoredPermDiagram) -> PlanarRookDiagram:
    """Drop the first strand and the - strands; shift labels down by one."""
    edges = [(bottom - 1, top - 1)
             for top, bottom, color in cd.strands
             if color == "+" and top >= 2]
    return PlanarRookDiagram(cd.k - 1, edges)


def from_planar_rook(d: RookDiagram) -> tuple:
    """The label pair (top, bottom) of the colored diagram over a planar d.

    + signs sit at position 1 and one above each edge endpoint; the round
    trip through to_planar_rook returns d.
    """
    if not d.is_planar:
        raise InvalidLabelError("only planar diagrams correspond to colored diagrams")
    k = d.n + 1
    top = ["-"] * k
    bottom = ["-"] * k
    top[0] = "+"
    bottom[0] = "+"
    for b, t in d.edges:
        top[t] = "+"
        bottom[b] = "+"
    return SignSequence("".join(top)), SignSequence("".join(bottom))


def enumerate_colored(k: int):
    """All colored diagrams on k strands, in the planar enumeration order."""
    return tuple(colored_from_labels(*from_planar_rook(d))
                 for d in enumerate_planar(k - 1))


def compose_colored(c1: ColoredPermDiagram, c2: ColoredPermDiagram) -> ColoredPermDiagram:
    """Stack c2 below c1, following strands through the matching boundary.

    Defined only when the bottom labels of c1 equal the top labels of c2,
    so every junction joins strands of one color.
    """
    if c1.k != c2.k:
        raise InvalidLabelError("strand counts differ")
    if c1.bottom_labels != c2.top_labels:
        raise InvalidLabelError("boundary labels do not match; the product is zero")
    strands = [(top, c2.bottom_of(middle), color)
               for top, middle, color in c1.strands]
    return ColoredPermDiagram(c1.k, strands)


def verify_bijection(k: int) -> VerificationReport:
    """Round-trip the two translations over every object on both sides.

    Also recounts the colored diagrams directly from their label pairs and
    matches the count against the planar diagram count C(2(k-1), k-1).
    """
    check_bound("k", k, DEFAULT_QUANTUM_K, "C(2(k-1),k-1) round trips")
    builder = ReportBuilder("bridge-bijection", {"k": k})
    diagrams = enumerate_planar(k - 1)
    for d in diagrams:
        theta, eta = from_planar_rook(d)
        back = to_planar_rook(colored_from_labels(theta, eta))
        if not builder.check(back == d, lambda d=d, back=back: {
                "diagram": d.to_json(), "round_trip": back.to_json()}):
            return builder.finish()
    label_pairs = 0
    for theta in all_sign_sequences(k):
        for eta in all_sign_sequences(k):
            if theta.minus_count() != eta.minus_count():
                continue
            label_pairs += 1
            cd = colored_from_labels(theta, eta)
            if not builder.check(
                (cd.top_labels, cd.bottom_labels) == (theta, eta)
                and from_planar_rook(to_planar_rook(cd)) == (theta, eta),
                lambda theta=theta, eta=eta: {
                    "theta": theta.signs, "eta": eta.signs},
            ):
                return builder.finish()
    expected = comb(2 * (k - 1), k - 1)
    builder.check(
        label_pairs == len(diagrams) == expected,
        lambda: {"label_pairs": label_pairs, "planar_count": len(diagrams),
                 "expected": expected},
    )
    return builder.finish()


def verify_isomorphism(k: int) -> VerificationReport:
    """Full dictionary check: bijection, product rule, and concatenation.

    For every ordered pair of colored diagrams: the inner labels agree
    exactly when the corresponding matrix-unit supports match; the matrix
    units multiply (by concrete expansion in the diagram algebra) to the
    matrix unit of the outer-label diagram or to zero; and label-compatible
    colored diagrams concatenate to the diagram wired from the outer labels.
    """
    check_bound("k", k, DEFAULT_DIAGRAM_K, "C(2(k-1),k-1)^2 expanded matrix-unit products")
    bijection = verify_bijection(k)
    if not bijection.passed:
        return bijection
    builder = ReportBuilder("bridge-isomorphism", {"k": k})
    builder.checks_run = bijection.checks_run
    colored = enumerate_colored(k)
    units = {cd: matrix_unit(to_planar_rook(cd)) for cd in colored}
    for c1 in colored:
        d1 = to_planar_rook(c1)
        for c2 in colored:
            d2 = to_planar_rook(c2)
            labels_match = c1.bottom_labels == c2.top_labels
            supports_match = set(d1.domain) == set(d2.image)
            product = units[c1] * units[c2]
            witness = lambda c1=c1, c2=c2, product=product: {
                "left": c1.to_json(), "right": c2.to_json(),
                "product": product.to_json()}
            if not builder.check(labels_match == supports_match, witness):
                return builder.finish()
            if labels_match:
                outer = colored_from_labels(c1.top_labels, c2.bottom_labels)
                expected = matrix_unit(to_planar_rook(outer))
                target = matrix_unit_product_target(d1, d2)
                ok = (
                    product == expected
                    and target == to_planar_rook(outer)
                    and compose_colored(c1, c2) == outer
                )
                if not builder.check(ok, witness):
                    return builder.finish()
            else:
                if not builder.check(product.is_zero(), witness):
                    return builder.finish()
    return builder.finish()
