"""Sheaf oracles: values on minimal open neighborhoods and the delta indicator.

Everything a stratification algorithm needs from a sheaf is (a) a summary of
its value on each B_x and (b) ``delta(x, y)`` for comparable pairs, true when
the restriction map ``F(B_x) -> F(B_y)`` is an isomorphism.  Constancy on a
subspace is decidable from these alone, so no sheafification is ever built.

For a down-closed subspace Y and x in Y, the smallest open set of the whole
space containing ``B_x ∩ Y`` is B_x itself, so the pulled-back sheaf takes the
original values and maps on minimal neighborhoods.  Peeling a stratum
therefore changes which pairs get queried (adjacency is recomputed in the
subspace) but never the answers, and ``delta`` needs no subspace argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Hashable

from .homology import homology, induced_map, is_isomorphism, local_chain_complex
from .linalg import FieldSpec
from .spaces import FiniteSpace, Subspace, dimension, iter_bits


class SheafOracle:
    """Base oracle: memoizes delta per ordered index pair."""

    def __init__(self, space: FiniteSpace):
        self.space = space
        self._delta_cache: dict[tuple[int, int], bool] = {}

    def delta(self, x, y) -> bool:
        """Whether the restriction from B_x to B_y is an isomorphism (x <= y)."""
        i, j = self.space.index(x), self.space.index(y)
        return self.delta_by_index(i, j)

    def delta_by_index(self, i: int, j: int) -> bool:
        if i == j:
            return True
        key = (i, j)
        hit = self._delta_cache.get(key)
        if hit is None:
            if not self.space.up[i] >> j & 1:
                raise ValueError("delta is only defined on comparable pairs x <= y")
            hit = self._compute_delta(i, j)
            self._delta_cache[key] = hit
        return hit

    def _compute_delta(self, i: int, j: int) -> bool:
        raise NotImplementedError

    def value_summary(self, x):
        """JSON-friendly description of the value on B_x."""
        return None


class LocalHomologySheaf(SheafOracle):
    """U -> H(X, X-U) over the given field; values cached per element."""

    def __init__(self, space: FiniteSpace, field: FieldSpec = FieldSpec(2),
                 threads: int = 1):
        super().__init__(space)
        self.field = field
        self._local: dict[int, object] = {}
        if threads > 1:
            self._precompute(threads)

    def _local_homology(self, i: int):
        got = self._local.get(i)
        if got is None:
            u = Subspace(self.space, self.space.up[i])
            got = homology(local_chain_complex(self.space, u, self.field))
            self._local[i] = got
        return got

    def _precompute(self, threads: int) -> None:
        from concurrent.futures import ThreadPoolExecutor

        indices = range(len(self.space.elements))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i, h in zip(indices, pool.map(self._fresh, indices)):
                self._local[i] = h

    def _fresh(self, i: int):
        u = Subspace(self.space, self.space.up[i])
        return homology(local_chain_complex(self.space, u, self.field))

    def restriction(self, x, y):
        i, j = self.space.index(x), self.space.index(y)
        return induced_map(self._local_homology(i), self._local_homology(j))

    def _compute_delta(self, i: int, j: int) -> bool:
        return is_isomorphism(induced_map(self._local_homology(i),
                                          self._local_homology(j)))

    def value_summary(self, x):
        h = self._local_homology(self.space.index(x))
        return list(h.dim_vector(dimension(self.space)))


class MaximalElementSheaf(SheafOracle):
    """U -> free module on the maximal elements of U.

    The restriction for B_y inside B_x sends a generator to itself when it
    survives and to zero otherwise, so it is an isomorphism exactly when the
    two generator sets coincide.
    """

    def __init__(self, space: FiniteSpace):
        super().__init__(space)
        n = len(space.elements)
        self._maximal_in_b: list[int] = []
        for i in range(n):
            m = 0
            for j in iter_bits(space.up[i]):
                if space.up_strict(j) == 0:
                    m |= 1 << j
            self._maximal_in_b.append(m)

    def _compute_delta(self, i: int, j: int) -> bool:
        return self._maximal_in_b[i] == self._maximal_in_b[j]

    def value_summary(self, x):
        i = self.space.index(x)
        return [list(self.space.elements[j]) if isinstance(self.space.elements[j], tuple)
                else self.space.elements[j]
                for j in iter_bits(self._maximal_in_b[i])]


class ConstantSheaf(SheafOracle):
    """Every restriction map is the identity on a fixed stalk."""

    def _compute_delta(self, i: int, j: int) -> bool:
        return True

    def value_summary(self, x):
        return 1


class FunctionSheaf(SheafOracle):
    """Oracle from an arbitrary comparable-pair predicate (mostly for tests)."""

    def __init__(self, space: FiniteSpace, fn: Callable[[Hashable, Hashable], bool],
                 summary: Callable[[Hashable], object] | None = None):
        super().__init__(space)
        self._fn = fn
        self._summary = summary

    def _compute_delta(self, i: int, j: int) -> bool:
        return bool(self._fn(self.space.elements[i], self.space.elements[j]))

    def value_summary(self, x):
        return self._summary(x) if self._summary else None


@dataclass(frozen=True)
class DeltaMap:
    """Boolean labels on the covering pairs of a space's Hasse diagram."""

    space: FiniteSpace
    labels: dict[tuple[int, int], bool] = dc_field(default_factory=dict)

    def __post_init__(self):
        missing = [p for p in self.space.covering_pairs if p not in self.labels]
        if missing:
            raise ValueError(f"delta map misses {len(missing)} covering pairs")

    def label(self, x, y) -> bool:
        return self.labels[(self.space.index(x), self.space.index(y))]

    def by_labels(self) -> dict[tuple, bool]:
        e = self.space.elements
        return {(e[i], e[j]): v for (i, j), v in sorted(self.labels.items())}


def covering_delta_map(space: FiniteSpace, oracle: SheafOracle) -> DeltaMap:
    labels = {(i, j): oracle.delta_by_index(i, j) for i, j in space.covering_pairs}
    return DeltaMap(space, labels)


class DeltaMapOracle(SheafOracle):
    """Oracle backed by explicit edge labels.

    For a non-covering pair x < y the value is the conjunction of the labels
    of every covering pair inside the interval [x, y]; those are exactly the
    edges lying on saturated chains from x to y, so this agrees with the
    product of labels along any such chain whenever that product is
    path-independent, and is the conservative choice otherwise.
    """

    def __init__(self, dm: DeltaMap):
        super().__init__(dm.space)
        self.dm = dm

    def _compute_delta(self, i: int, j: int) -> bool:
        interval = self.space.up[i] & self.space.down[j]
        for (a, b), v in self.dm.labels.items():
            if not v and interval >> a & 1 and interval >> b & 1:
                return False
        return True


def as_oracle(sheaf_or_dm: SheafOracle | DeltaMap) -> SheafOracle:
    if isinstance(sheaf_or_dm, DeltaMap):
        return DeltaMapOracle(sheaf_or_dm)
    return sheaf_or_dm


def delta_along_chain(dm: DeltaMap, chain: list) -> bool:
    """Conjunction of edge labels along a chain of covering pairs."""
    idx = [dm.space.index(x) for x in chain]
    covering = set(dm.space.covering_pairs)
    out = True
    for a, b in zip(idx, idx[1:]):
        if (a, b) not in covering:
            raise ValueError(f"({chain[0]!r}...) has a non-adjacent step "
                             f"{dm.space.elements[a]!r} < {dm.space.elements[b]!r}")
        out = out and dm.labels[(a, b)]
    return out


def hasse_dot(space: FiniteSpace, dm: DeltaMap,
              oracle: SheafOracle | None = None) -> str:
    """Hasse diagram in DOT format, solid edges for delta=1, dashed for 0."""
    def node_id(i: int) -> str:
        e = space.elements[i]
        if isinstance(e, tuple):
            return "_".join(str(v) for v in e)
        return str(e)

    def node_label(i: int) -> str:
        e = space.elements[i]
        text = "[" + ",".join(str(v) for v in e) + "]" if isinstance(e, tuple) else str(e)
        if oracle is not None:
            summary = oracle.value_summary(e)
            if summary is not None:
                text += r"\n" + str(summary)
        return text

    lines = ["graph hasse {", "  node [shape=box];"]
    for i in range(len(space.elements)):
        lines.append(f'  "{node_id(i)}" [label="{node_label(i)}"];')
    for (i, j) in space.covering_pairs:
        style = "solid" if dm.labels[(i, j)] else "dashed"
        lines.append(f'  "{node_id(i)}" -- "{node_id(j)}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
