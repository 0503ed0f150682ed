"""Coarsest and minimal homogeneous sheaf stratifications of a finite space.

A stratification is a filtration by closed (down-closed) subsets
``empty = X_{-1} <= X_0 <= ... <= X_d = X`` with ``d`` the dimension of the
host; the strata are the differences and the pieces their comparability
components.  Both algorithms peel the space from the top: an element joins
the current stratum when every covering pair of the induced poset on
``B_x ∩ X_{d_i}`` carries delta = 1 (plus, in the homogeneous variant, when
the closed star of x in the current subspace is pure of the current
dimension).  Induced covering pairs are recomputed after each peel, and the
oracle answers for them with the original space's restriction maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .sheaves import DeltaMap, SheafOracle, as_oracle
from .spaces import (FiniteSpace, Subspace, closure, connected_pieces, dimension,
                     induced_covers, is_homogeneous, iter_bits, popcount)


class StratificationError(ValueError):
    """Raised for filtrations that are not valid stratifications."""


class InternalInvariantError(RuntimeError):
    """A peeling round made no progress; the input violates a precondition."""


COARSER = "coarser"
FINER = "finer"
EQUIVALENT = "equivalent"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Stratification:
    """Filtration masks X_0 .. X_d over a host space."""

    space: FiniteSpace
    x_masks: tuple[int, ...]

    def __post_init__(self):
        if not self.x_masks:
            raise StratificationError("empty filtration")
        if self.x_masks[-1] != self.space.full_mask:
            raise StratificationError("filtration must end at the whole space")
        prev = 0
        for k, m in enumerate(self.x_masks):
            if prev & ~m:
                raise StratificationError(f"filtration not increasing at index {k}")
            if not Subspace(self.space, m).is_closed():
                raise StratificationError(f"X_{k} is not closed")
            prev = m

    @classmethod
    def from_strata(cls, space: FiniteSpace, strata_by_dim: dict[int, object]
                    ) -> "Stratification":
        """Build from {dimension: iterable of labels}; gaps become empty strata."""
        top = dimension(space)
        masks = []
        acc = 0
        for i in range(top + 1):
            labels = strata_by_dim.get(i, ())
            acc |= space.mask_of(labels)
            masks.append(acc)
        return cls(space, tuple(masks))

    @property
    def top_dim(self) -> int:
        return len(self.x_masks) - 1

    def stratum_mask(self, i: int) -> int:
        below = self.x_masks[i - 1] if i > 0 else 0
        return self.x_masks[i] & ~below

    def stratum(self, i: int) -> Subspace:
        return Subspace(self.space, self.stratum_mask(i))

    def strata_labels(self) -> dict[int, tuple]:
        return {i: self.space.labels_of(self.stratum_mask(i))
                for i in range(self.top_dim + 1)}

    @cached_property
    def pieces(self) -> tuple[tuple[int, int], ...]:
        """(dimension, piece mask) for every stratum piece."""
        out = []
        for i in range(self.top_dim + 1):
            for piece in connected_pieces(self.space, self.stratum_mask(i)):
                out.append((i, piece.mask))
        return tuple(out)

    @cached_property
    def piece_masks(self) -> frozenset[int]:
        return frozenset(mask for _, mask in self.pieces)

    def lex_key(self) -> tuple[int, ...]:
        """Cardinalities (|X_d|, ..., |X_0|), the lexicographic comparison key."""
        return tuple(popcount(m) for m in reversed(self.x_masks))

    def is_homogeneous_stratification(self) -> bool:
        """Closure of each stratum inside its filtration level is pure."""
        for i in range(self.top_dim + 1):
            s = self.stratum_mask(i)
            if s == 0:
                continue
            cl = closure(self.space, s).mask & self.x_masks[i]
            if not is_homogeneous(self.space, cl, i):
                return False
        return True


def _round_members(space: FiniteSpace, oracle: SheafOracle, current: int,
                   candidates: int) -> int:
    """Elements of ``candidates`` whose B_x ∩ current has all-iso covers."""
    picked = 0
    for x in iter_bits(candidates):
        ok = True
        region = space.up[x] & current
        for w in iter_bits(region):
            for y in induced_covers(space, region, w):
                if not oracle.delta_by_index(w, y):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            picked |= 1 << x
    return picked


def coarsest_stratification(space: FiniteSpace,
                            sheaf: SheafOracle | DeltaMap) -> Stratification:
    """Greedy top-down peel; no coarser stratification keeps the sheaf
    constructible."""
    oracle = as_oracle(sheaf)
    d = dimension(space)
    strata: dict[int, int] = {}
    current = space.full_mask
    while current:
        di = dimension(Subspace(space, current))
        picked = _round_members(space, oracle, current, current)
        if not picked:
            raise InternalInvariantError("no element admitted in a peeling round")
        strata[di] = picked
        current &= ~picked
        if current and dimension(Subspace(space, current)) >= di:
            raise InternalInvariantError("peeled subspace did not lose dimension")
    return _assemble(space, d, strata)


def minimal_homogeneous_stratification(
        space: FiniteSpace, sheaf: SheafOracle | DeltaMap,
        chain_cardinality: str = "dimension_plus_one") -> Stratification:
    """Unique minimal homogeneous stratification of a face poset.

    ``chain_cardinality`` selects the purity convention: with the default,
    the closed star of an admitted element must have all maximal chains of
    cardinality d_i + 1 (dimension d_i); ``"dimension"`` demands cardinality
    d_i instead, which is degenerate on every non-trivial complex and exists
    only for comparison.
    """
    if chain_cardinality not in ("dimension_plus_one", "dimension"):
        raise ValueError(f"unknown chain cardinality convention {chain_cardinality!r}")
    offset = 0 if chain_cardinality == "dimension_plus_one" else -1
    oracle = as_oracle(sheaf)
    d = dimension(space)
    strata: dict[int, int] = {}
    current = space.full_mask
    while current:
        di = dimension(Subspace(space, current))
        homog = 0
        for x in iter_bits(current):
            closed_star = closure(space, space.up[x] & current).mask & current
            if is_homogeneous(space, closed_star, di + offset):
                homog |= 1 << x
        picked = _round_members(space, oracle, current, homog)
        if not picked:
            raise InternalInvariantError(
                "no element admitted in a peeling round; the space is likely "
                "not the face poset of a simplicial complex")
        strata[di] = picked
        current &= ~picked
        if current and dimension(Subspace(space, current)) >= di:
            raise InternalInvariantError("peeled subspace did not lose dimension")
    return _assemble(space, d, strata)


def _assemble(space: FiniteSpace, d: int, strata: dict[int, int]) -> Stratification:
    masks = []
    acc = 0
    for i in range(d + 1):
        acc |= strata.get(i, 0)
        masks.append(acc)
    return Stratification(space, tuple(masks))


def is_constructible(space: FiniteSpace, sheaf: SheafOracle | DeltaMap,
                     strat: Stratification) -> bool:
    """Local constancy of the sheaf on every stratum.

    Checks that all covering pairs of the induced poset on ``B_x ∩ S`` carry
    delta = 1, for every stratum S and member x; by the minimal-neighborhood
    criterion this decides constructibility.
    """
    if strat.space is not space and strat.space.elements != space.elements:
        raise StratificationError("stratification belongs to a different space")
    oracle = as_oracle(sheaf)
    for i in range(strat.top_dim + 1):
        s = strat.stratum_mask(i)
        for x in iter_bits(s):
            region = space.up[x] & s
            for w in iter_bits(region):
                for y in induced_covers(space, region, w):
                    if not oracle.delta_by_index(w, y):
                        return False
    return True


def _same_host(a: Stratification, b: Stratification) -> None:
    if a.space is not b.space and a.space.elements != b.space.elements:
        raise ValueError("stratifications of different hosts are not comparable")


def compare_coarseness(a: Stratification, b: Stratification) -> str:
    """How ``a`` relates to ``b`` under stratum-piece containment."""
    _same_host(a, b)
    b_in_a = _pieces_contained(b, a)
    a_in_b = _pieces_contained(a, b)
    if a_in_b and b_in_a:
        return EQUIVALENT
    if b_in_a:
        return COARSER
    if a_in_b:
        return FINER
    return INCOMPARABLE


def _pieces_contained(fine: Stratification, coarse: Stratification) -> bool:
    coarse_masks = [m for _, m in coarse.pieces]
    return all(any(p & ~q == 0 for q in coarse_masks) for _, p in fine.pieces)


def lex_compare(a: Stratification, b: Stratification) -> int:
    """-1, 0 or 1 comparing the cardinality sequences lexicographically."""
    _same_host(a, b)
    ka, kb = a.lex_key(), b.lex_key()
    if len(ka) != len(kb):
        raise ValueError("stratifications have different filtration lengths")
    return (ka > kb) - (ka < kb)
