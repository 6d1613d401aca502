"""Edges, uniform families and the basic operators on them.

Vertices are 1-based everywhere in the public interface. Internally an edge
is an ``int`` bitmask with bit ``v - 1`` set for vertex ``v``; numeric order
of these masks is exactly colex order, which is the iteration order of every
:class:`Family`.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations

from .errors import InvalidArgumentError, InvalidArityError, InvalidVertexError

MAX_N = 64


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def prefix_mask(i: int) -> int:
    """Mask of ``[i] = {1, ..., i}``."""
    return (1 << i) - 1 if i > 0 else 0


def all_k_subsets(n: int, k: int) -> list[int]:
    """Masks of every k-subset of [n], in colex order."""
    return sorted(mask_of(c) for c in combinations(range(1, n + 1), k))


class Edge(tuple):
    """A canonical edge: strictly increasing positive vertex labels.

    ``Edge([3, 1, 2])`` normalizes to ``Edge((1, 2, 3))``; repeated vertices
    are rejected.
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int]):
        vs = tuple(sorted(int(v) for v in vertices))
        if not vs:
            raise InvalidArgumentError("an edge needs at least one vertex")
        if vs[0] < 1:
            raise InvalidVertexError(f"vertex labels start at 1, got {vs[0]}")
        if vs[-1] > MAX_N:
            raise InvalidVertexError(f"vertex {vs[-1]} exceeds the limit n <= {MAX_N}")
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise InvalidArgumentError(f"repeated vertex {a} in edge")
        return super().__new__(cls, vs)

    @classmethod
    def from_mask(cls, mask: int) -> Edge:
        return tuple.__new__(cls, vertices_of(mask))

    @classmethod
    def parse(cls, text: str) -> Edge:
        return cls(int(tok) for tok in text.replace(",", " ").split())

    @property
    def k(self) -> int:
        return len(self)

    @property
    def mask(self) -> int:
        return mask_of(self)

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return "Edge({" + ",".join(map(str, self)) + "})"


def _to_mask(item) -> int:
    if isinstance(item, int):
        return item
    return Edge(item).mask


class Family:
    """An immutable k-uniform family of edges over the ground set [n].

    Edges may be given as :class:`Edge` objects, plain vertex iterables, or
    (via :meth:`from_masks`) raw bitmasks. Iteration is in colex order.
    """

    __slots__ = ("n", "k", "_masks", "_set")

    def __init__(self, n: int, k: int, edges: Iterable = ()):
        if not 1 <= n <= MAX_N:
            raise InvalidArgumentError(f"ground set size must be in 1..{MAX_N}, got {n}")
        if k < 1:
            raise InvalidArityError(f"uniformity must be positive, got {k}")
        full = prefix_mask(n)
        masks = set()
        for item in edges:
            m = _to_mask(item)
            if m <= 0 or m & ~full:
                raise InvalidVertexError(f"edge {vertices_of(m)} not inside [{n}]")
            if m.bit_count() != k:
                raise InvalidArityError(f"edge {vertices_of(m)} has arity {m.bit_count()}, expected {k}")
            masks.add(m)
        self.n = n
        self.k = k
        self._set = frozenset(masks)
        self._masks = tuple(sorted(masks))

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> Family:
        return cls(n, k, masks)

    @classmethod
    def _trusted(cls, n: int, k: int, masks: Iterable[int]) -> Family:
        # caller guarantees masks are valid k-subsets of [n]
        obj = object.__new__(cls)
        obj.n = n
        obj.k = k
        obj._set = frozenset(masks)
        obj._masks = tuple(sorted(obj._set))
        return obj

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def mask_set(self) -> frozenset[int]:
        return self._set

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge.from_mask(m) for m in self._masks)

    def __iter__(self) -> Iterator[Edge]:
        return (Edge.from_mask(m) for m in self._masks)

    def __len__(self) -> int:
        return len(self._masks)

    def __contains__(self, item) -> bool:
        try:
            return _to_mask(item) in self._set
        except (InvalidArgumentError, InvalidVertexError):
            return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return (self.n, self.k, self._set) == (other.n, other.k, other._set)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self._set))

    def __le__(self, other: Family) -> bool:
        return self.k == other.k and self._set <= other._set

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self)
        return f"Family(n={self.n}, k={self.k}, [{body}])"

    def vertex_union(self) -> int:
        m = 0
        for e in self._masks:
            m |= e
        return m

    def with_edges(self, edges: Iterable) -> Family:
        return Family(self.n, self.k, list(self._masks) + [_to_mask(e) for e in edges])


def _vertex_set_mask(n: int, t: Iterable[int]) -> int:
    m = 0
    for v in t:
        if not 1 <= v <= n:
            raise InvalidVertexError(f"vertex {v} not in [1, {n}]")
        m |= 1 << (v - 1)
    return m


def shadow(f: Family) -> Family:
    """All 2-subsets contained in some edge of a 3-uniform family."""
    if f.k != 3:
        raise InvalidArityError(f"shadow is defined here for 3-graphs, got k={f.k}")
    out = set()
    for e in f.masks:
        low = e & -e
        rest = e ^ low
        mid = rest & -rest
        high = rest ^ mid
        out.add(low | mid)
        out.add(low | high)
        out.add(mid | high)
    return Family._trusted(f.n, 2, out)


def link(f: Family, v: int) -> Family:
    """The (k-1)-uniform neighbourhood ``{e : e + v in f}`` of vertex v."""
    if not 1 <= v <= f.n:
        raise InvalidVertexError(f"vertex {v} not in [1, {f.n}]")
    if f.k < 2:
        raise InvalidArityError("link needs k >= 2")
    bit = 1 << (v - 1)
    return Family._trusted(f.n, f.k - 1, (e ^ bit for e in f.masks if e & bit))


def delete_vertices(f: Family, t: Iterable[int]) -> Family:
    """Edges avoiding ``t``; the ground set [n] is kept, so deleted vertices
    simply become isolated."""
    tm = _vertex_set_mask(f.n, t)
    if not tm:
        return f
    return Family._trusted(f.n, f.k, (e for e in f.masks if not e & tm))


def delete_prefix(f: Family, i: int) -> Family:
    """``f - [i]``; ``i = 0`` is the identity."""
    return delete_vertices(f, range(1, i + 1))


def restrict(f: Family, x: Iterable[int]) -> Family:
    """Induced subfamily: edges contained in ``x``."""
    xm = _vertex_set_mask(f.n, x)
    return Family._trusted(f.n, f.k, (e for e in f.masks if not e & ~xm))


def union_size(edges: Iterable) -> int:
    m = 0
    seen = False
    for e in edges:
        m |= _to_mask(e)
        seen = True
    if not seen:
        raise InvalidArgumentError("union_size of an empty edge list")
    return m.bit_count()
