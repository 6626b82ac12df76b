"""Rook diagrams, the planar rook monoid, and the subset action.

A rook diagram on n vertices per row is a partial injection of {1..n}: a set
of edges joining distinct bottom vertices to distinct top vertices.  Reading
an edge (b, t) as "b maps to t", the diagram is a bijection from its bottom
endpoint set onto its top endpoint set.  A diagram is planar when no two
edges cross, i.e. when the map is order-preserving.

Composition stacks diagrams: compose(d1, d2) applies d2 first and keeps the
strands that travel all the way through.  For each pair of equal-sized
subsets there is exactly one planar diagram joining them (i-th smallest to
i-th smallest), so the planar diagrams with exactly l edges number C(n, l)^2
and the whole monoid has C(2n, n) elements.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations


class InvalidDiagramError(ValueError):
    """Raised for edge lists that do not define a partial injection."""


class Subset:
    """A subset of {1..n}, stored as a strictly increasing tuple."""

    __slots__ = ("n", "members")

    def __init__(self, n: int, members=()):
        members = tuple(members)
        if n < 0:
            raise ValueError("ground set size must be nonnegative")
        previous = 0
        for v in members:
            if not isinstance(v, int) or v <= previous or v > n:
                raise ValueError(
                    "members must be strictly increasing integers in 1..%d, got %r"
                    % (n, list(members)))
            previous = v
        self.n = n
        self.members = members

    @classmethod
    def of(cls, n: int, iterable) -> "Subset":
        """Build a subset from any iterable of distinct labels."""
        return cls(n, sorted(iterable))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members

    def issubset(self, other) -> bool:
        other = set(other)
        return all(v in other for v in self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.n, self.members))

    def __repr__(self) -> str:
        return "Subset(%d, %r)" % (self.n, list(self.members))

    def to_json(self) -> dict:
        return {"n": self.n, "members": list(self.members)}

    @classmethod
    def from_json(cls, data: dict) -> "Subset":
        return cls(int(data["n"]), tuple(int(v) for v in data["members"]))


def subsets_of_size(n: int, size: int):
    """All size-element subsets of {1..n} in lexicographic order."""
    return tuple(Subset(n, combo) for combo in combinations(range(1, n + 1), size))


@lru_cache(maxsize=None)
def all_subsets(n: int):
    """All subsets of {1..n}, ordered by size then lexicographically."""
    out = []
    for size in range(n + 1):
        out.extend(subsets_of_size(n, size))
    return tuple(out)


class RookDiagram:
    """A partial injection on {1..n} as a bottom-sorted edge list."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise InvalidDiagramError("vertex count must be nonnegative")
        normalized = []
        for edge in edges:
            b, t = edge
            if not (isinstance(b, int) and isinstance(t, int)):
                raise InvalidDiagramError("vertex labels must be integers, got %r" % (edge,))
            if not (1 <= b <= n and 1 <= t <= n):
                raise InvalidDiagramError(
                    "edge %r out of range for n=%d" % ((b, t), n))
            normalized.append((b, t))
        normalized.sort()
        bottoms = [b for b, _ in normalized]
        tops = [t for _, t in normalized]
        if len(set(bottoms)) != len(bottoms):
            raise InvalidDiagramError("duplicate bottom endpoint in %r" % (normalized,))
        if len(set(tops)) != len(tops):
            raise InvalidDiagramError("duplicate top endpoint in %r" % (normalized,))
        self.n = n
        self.edges = tuple(normalized)

    @property
    def domain(self) -> tuple:
        """Bottom endpoints (the domain of the partial map), ascending."""
        return tuple(b for b, _ in self.edges)

    @property
    def image(self) -> tuple:
        """Top endpoints (the image of the partial map), ascending."""
        return tuple(sorted(t for _, t in self.edges))

    @property
    def mapping(self) -> dict:
        return {b: t for b, t in self.edges}

    def apply(self, vertex: int):
        """The image of a bottom vertex, or None when unmatched."""
        for b, t in self.edges:
            if b == vertex:
                return t
        return None

    @property
    def is_planar(self) -> bool:
        """True when the map is order-preserving (no crossing edges)."""
        tops = [t for _, t in self.edges]
        return all(tops[i] < tops[i + 1] for i in range(len(tops) - 1))

    def edge_count(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RookDiagram):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return "%s(%d, %r)" % (type(self).__name__, self.n, list(self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(edge) for edge in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "RookDiagram":
        edges = tuple((int(b), int(t)) for b, t in data["edges"])
        return make_diagram(int(data["n"]), edges)


class PlanarRookDiagram(RookDiagram):
    """A rook diagram whose partial map is order-preserving."""

    __slots__ = ()

    def __init__(self, n: int, edges=()):
        super().__init__(n, edges)
        if not self.is_planar:
            raise InvalidDiagramError("edges %r cross; not a planar diagram" % (list(self.edges),))


def make_diagram(n: int, edges) -> RookDiagram:
    """Validate and normalize an edge list; planar inputs get the planar type."""
    diagram = RookDiagram(n, edges)
    if diagram.is_planar:
        return PlanarRookDiagram(n, diagram.edges)
    return diagram


def identity_diagram(n: int) -> PlanarRookDiagram:
    return PlanarRookDiagram(n, [(i, i) for i in range(1, n + 1)])


def empty_diagram(n: int) -> PlanarRookDiagram:
    return PlanarRookDiagram(n, ())


def compose(d1: RookDiagram, d2: RookDiagram) -> RookDiagram:
    """Stack d2 below d1: the composite maps b to d1(d2(b)) where defined."""
    if d1.n != d2.n:
        raise ValueError("size mismatch: cannot compose diagrams on %d and %d vertices"
                         % (d1.n, d2.n))
    upper = d1.mapping
    edges = []
    for b, mid in d2.edges:
        top = upper.get(mid)
        if top is not None:
            edges.append((b, top))
    return make_diagram(d1.n, edges)


def canonical_planar(n: int, bottom, top) -> PlanarRookDiagram:
    """The unique planar diagram joining two equal-sized subsets.

    The i-th smallest bottom member is joined to the i-th smallest top member.
    """
    bottom = bottom if isinstance(bottom, Subset) else Subset.of(n, bottom)
    top = top if isinstance(top, Subset) else Subset.of(n, top)
    if bottom.n != n or top.n != n:
        raise InvalidDiagramError("subsets live on the wrong ground set")
    if len(bottom) != len(top):
        raise InvalidDiagramError(
            "cardinality mismatch: |bottom|=%d, |top|=%d" % (len(bottom), len(top)))
    return PlanarRookDiagram(n, list(zip(bottom.members, top.members)))


@lru_cache(maxsize=None)
def enumerate_planar(n: int, edge_count=None):
    """All planar diagrams on n vertices, optionally with a fixed edge count.

    Deterministic order: edge count, then bottom subset, then top subset,
    each lexicographic.  The full count is C(2n, n); for a fixed edge count
    l it is C(n, l)^2.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if edge_count is not None and not 0 <= edge_count <= n:
        raise ValueError("edge count must lie in 0..%d" % n)
    sizes = range(n + 1) if edge_count is None else (edge_count,)
    out = []
    for size in sizes:
        for bottom in combinations(range(1, n + 1), size):
            for top in combinations(range(1, n + 1), size):
                out.append(PlanarRookDiagram(n, list(zip(bottom, top))))
    return tuple(out)


def apply_to_subset(d: RookDiagram, s: Subset):
    """The image d(s) when s lies inside the domain of d, else None.

    None encodes the zero of the subset module, not an error.
    """
    if s.n != d.n:
        raise ValueError("subset lives on %d vertices, diagram on %d" % (s.n, d.n))
    mapping = d.mapping
    images = []
    for v in s:
        t = mapping.get(v)
        if t is None:
            return None
        images.append(t)
    return Subset.of(d.n, images)


def subdiagrams(d: RookDiagram):
    """All 2^edges sub-diagrams of d paired with how many edges were deleted.

    Ordered by kept-edge count descending (d itself first), then by the
    lexicographic order of the kept edge combination.
    """
    total = len(d.edges)
    out = []
    for kept in range(total, -1, -1):
        for combo in combinations(d.edges, kept):
            out.append((make_diagram(d.n, combo), total - kept))
    return out


def diagram_sort_key(d: RookDiagram):
    """Sort key matching the enumeration order (edge count, bottoms, tops)."""
    return (len(d.edges), d.domain, d.image, d.edges)
