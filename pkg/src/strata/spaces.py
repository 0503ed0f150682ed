"""Finite T0-spaces: face posets of simplicial complexes and general finite posets.

A finite T0-space is stored as a poset over densely indexed elements.  All
subset bookkeeping uses integer bitmasks keyed by element index, since every
space we care about is small (at most a few thousand elements).  The minimal
open neighborhood of ``x`` is the up-set ``B_x = {y : y >= x}``; open sets are
exactly the up-closed ones and closed sets the down-closed ones (Alexandroff
topology).
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence


class MalformedInputError(ValueError):
    """Raised for inputs that do not describe a simplicial complex or poset."""


class NotOpenError(ValueError):
    """Raised when an operation requires an up-closed (open) subspace."""


class EmptySubspaceError(ValueError):
    """Raised when asking for the dimension of an empty space."""


Simplex = tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Canonicalize a vertex collection into a simplex tuple.

    Vertices must be distinct non-negative integers; the result is sorted
    ascending.
    """
    vs = tuple(sorted(int(v) for v in vertices))
    if not vs:
        raise MalformedInputError("a simplex needs at least one vertex")
    if any(v < 0 for v in vs):
        raise MalformedInputError(f"negative vertex id in {vs}")
    if len(set(vs)) != len(vs):
        raise MalformedInputError(f"duplicate vertices in simplex {vs}")
    return vs


def simplex_dim(s: Simplex) -> int:
    return len(s) - 1


def faces_of(s: Simplex) -> Iterator[Simplex]:
    """All non-empty faces of ``s``, including ``s`` itself."""
    for k in range(1, len(s) + 1):
        yield from itertools.combinations(s, k)


@dataclass(frozen=True)
class FiniteSpace:
    """A finite poset with the Alexandroff topology.

    elements are canonically ordered (a linear extension of the order, so
    ``i < j`` whenever ``elements[i] < elements[j]``).  ``up[i]`` /
    ``down[i]`` are bitmasks of ``{y : y >= x_i}`` / ``{y : y <= x_i}``;
    ``covering_pairs`` holds the index pairs of the Hasse diagram.
    """

    elements: tuple[Hashable, ...]
    up: tuple[int, ...]
    down: tuple[int, ...]
    covering_pairs: tuple[tuple[int, int], ...]
    is_face_poset: bool = False
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({e: i for i, e in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, element) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise KeyError(f"{element!r} is not an element of this space") from None

    def leq(self, x, y) -> bool:
        """Whether x <= y in the partial order (by label)."""
        return bool(self.up[self.index(x)] >> self.index(y) & 1)

    def up_strict(self, i: int) -> int:
        return self.up[i] & ~(1 << i)

    def down_strict(self, i: int) -> int:
        return self.down[i] & ~(1 << i)

    def covers_of(self, i: int) -> list[int]:
        """Indices covering element i (immediate successors)."""
        ups = self.up_strict(i)
        return [j for j in iter_bits(ups) if ups & self.down_strict(j) == 0]

    def mask_of(self, labels: Iterable) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.elements[i] for i in iter_bits(mask))

    def subspace(self, labels: Iterable) -> "Subspace":
        return Subspace(self, self.mask_of(labels))

    def full_subspace(self) -> "Subspace":
        return Subspace(self, self.full_mask)


@dataclass(frozen=True)
class Subspace:
    """A subset of a FiniteSpace with the induced order and topology."""

    space: FiniteSpace
    mask: int

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, label) -> bool:
        return bool(self.mask >> self.space.index(label) & 1)

    def indices(self) -> list[int]:
        return list(iter_bits(self.mask))

    def labels(self) -> tuple:
        return self.space.labels_of(self.mask)

    def is_open(self) -> bool:
        return all(self.space.up[i] & ~self.mask == 0 for i in iter_bits(self.mask))

    def is_closed(self) -> bool:
        return all(self.space.down[i] & ~self.mask == 0 for i in iter_bits(self.mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# constructors


def build_from_maximal_simplices(max_simplices: Sequence[Iterable[int]]) -> FiniteSpace:
    """Face poset of the simplicial complex generated by the given simplices.

    Elements are all non-empty faces, sorted by (dimension, vertex tuple);
    covering pairs are the codimension-1 face relations.
    """
    if not max_simplices:
        raise MalformedInputError("need at least one maximal simplex")
    gens = [as_simplex(s) for s in max_simplices]
    simplices: set[Simplex] = set()
    for g in gens:
        simplices.update(faces_of(g))
    elements = tuple(sorted(simplices, key=lambda s: (len(s), s)))
    index = {s: i for i, s in enumerate(elements)}
    n = len(elements)
    sets = [frozenset(s) for s in elements]
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if sets[i] <= sets[j]:
                up[i] |= 1 << j
    down = _transpose_masks(up, n)
    covering = []
    for j, s in enumerate(elements):
        if len(s) == 1:
            continue
        for k in range(len(s)):
            face = s[:k] + s[k + 1:]
            covering.append((index[face], j))
    covering.sort()
    return FiniteSpace(elements, tuple(up), tuple(down), tuple(covering),
                       is_face_poset=True)


def from_relations(elements: Sequence[Hashable],
                   relations: Iterable[tuple[Hashable, Hashable]]) -> FiniteSpace:
    """General finite poset from order-generating pairs (x, y) meaning x < y.

    The reflexive-transitive closure is taken; covering pairs are recomputed,
    so the input pairs need not be covering relations themselves.  Cycles are
    rejected (the order would not be antisymmetric).
    """
    elems = list(elements)
    if len(set(elems)) != len(elems):
        raise MalformedInputError("duplicate elements")
    pos = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    succ = [set() for _ in range(n)]
    for a, b in relations:
        if a not in pos or b not in pos:
            raise MalformedInputError(f"relation ({a!r}, {b!r}) uses unknown elements")
        if a == b:
            continue
        succ[pos[a]].add(pos[b])

    order = _topo_order(succ)
    up = [0] * n
    for i in reversed(order):
        m = 1 << i
        for j in succ[i]:
            m |= up[j]
        up[i] = m

    elements_sorted = tuple(elems[i] for i in order)
    remap = {old: new for new, old in enumerate(order)}
    up_sorted = [0] * n
    for old, m in enumerate(up):
        nm = 0
        for j in iter_bits(m):
            nm |= 1 << remap[j]
        up_sorted[remap[old]] = nm
    down_sorted = _transpose_masks(up_sorted, n)
    covering = []
    for i in range(n):
        usi = up_sorted[i] & ~(1 << i)
        for j in iter_bits(usi):
            if usi & (down_sorted[j] & ~(1 << j)) == 0:
                covering.append((i, j))
    covering.sort()
    return FiniteSpace(elements_sorted, tuple(up_sorted), tuple(down_sorted),
                       tuple(covering), is_face_poset=False)


def _topo_order(succ: list[set[int]]) -> list[int]:
    n = len(succ)
    indeg = [0] * n
    for s in succ:
        for j in s:
            indeg[j] += 1
    order: list[int] = []
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        for j in sorted(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    if len(order) != n:
        raise MalformedInputError("relations contain a cycle")
    return order


def _transpose_masks(up: Sequence[int], n: int) -> tuple[int, ...]:
    down = [0] * n
    for i in range(n):
        for j in iter_bits(up[i]):
            down[j] |= 1 << i
    return tuple(down)


# ---------------------------------------------------------------------------
# neighborhood operators


def min_open_nbhd(space: FiniteSpace, x) -> Subspace:
    """Minimal open neighborhood B_x = {y : y >= x} (the open star)."""
    return Subspace(space, space.up[space.index(x)])


def star(space: FiniteSpace, s: Subspace | int) -> Subspace:
    """Smallest open set containing the subset: union of the members' B_x."""
    mask = s.mask if isinstance(s, Subspace) else s
    out = 0
    for i in iter_bits(mask):
        out |= space.up[i]
    return Subspace(space, out)


def closure(space: FiniteSpace, s: Subspace | int) -> Subspace:
    """Down-set of the subset: the smallest closed set containing it."""
    mask = s.mask if isinstance(s, Subspace) else s
    out = 0
    for i in iter_bits(mask):
        out |= space.down[i]
    return Subspace(space, out)


def link_of_open(space: FiniteSpace, u: Subspace) -> Subspace:
    """closure(U) - U for an open (up-closed) U."""
    if not u.is_open():
        raise NotOpenError("link is only defined for open subspaces")
    return Subspace(space, closure(space, u).mask & ~u.mask)


def induced_covers(space: FiniteSpace, mask: int, i: int) -> Iterator[int]:
    """Indices covering i within the induced poset on ``mask``."""
    upm = space.up_strict(i) & mask
    for j in iter_bits(upm):
        if upm & space.down_strict(j) == 0:
            yield j


def _space_mask(obj: FiniteSpace | Subspace) -> tuple[FiniteSpace, int]:
    if isinstance(obj, Subspace):
        return obj.space, obj.mask
    return obj, obj.full_mask


def dimension(obj: FiniteSpace | Subspace) -> int:
    """Length of the longest chain minus one; -1 for the empty subspace."""
    space, mask = _space_mask(obj)
    if mask == 0:
        if isinstance(obj, FiniteSpace):
            raise EmptySubspaceError("dimension of the empty space is undefined")
        return -1
    longest = {}
    for i in reversed(range(len(space.elements))):
        if not mask >> i & 1:
            continue
        ups = space.up_strict(i) & mask
        longest[i] = 1 + max((longest[j] for j in iter_bits(ups)), default=0)
    return max(longest.values()) - 1


def is_homogeneous(space: FiniteSpace, s: Subspace | int, d: int) -> bool:
    """Whether every maximal chain of the induced poset has cardinality d+1.

    The empty subspace is homogeneous of every dimension by convention.
    """
    mask = s.mask if isinstance(s, Subspace) else s
    if mask == 0:
        return True
    lo: dict[int, int] = {}
    hi: dict[int, int] = {}
    for i in reversed(range(len(space.elements))):
        if not mask >> i & 1:
            continue
        succs = list(induced_covers(space, mask, i))
        if not succs:
            lo[i] = hi[i] = 1
        else:
            lo[i] = 1 + min(lo[j] for j in succs)
            hi[i] = 1 + max(hi[j] for j in succs)
    for i in iter_bits(mask):
        if space.down_strict(i) & mask == 0:  # minimal in the subspace
            if lo[i] != d + 1 or hi[i] != d + 1:
                return False
    return True


def connected_pieces(space: FiniteSpace, s: Subspace | int) -> list[Subspace]:
    """Components of the comparability graph on the subset.

    Two members are joined when comparable in the parent order; this matches
    topological connectedness of the subspace.  Pieces come back sorted by
    their smallest element index.
    """
    mask = s.mask if isinstance(s, Subspace) else s
    pieces = []
    remaining = mask
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            new = 0
            for i in iter_bits(frontier):
                new |= (space.up[i] | space.down[i]) & mask
            frontier = new & ~comp
            comp |= new
        pieces.append(Subspace(space, comp))
        remaining &= ~comp
    return pieces
