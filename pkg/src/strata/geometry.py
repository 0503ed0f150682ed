"""Nerves of point-cloud covers and the vanishing-polynomial presheaf.

A cover of a finite point set induces a nerve whose simplices remember which
points their cover sets share.  The stalk at a nerve simplex is the kernel of
the evaluation matrix of a monomial basis on those points; restriction maps
are inclusions, so two stalks are isomorphic exactly when their dimensions
agree, and the delta indicator reduces to a dimension comparison.

Kernels are computed either numerically (SVD with a relative singular-value
threshold) or exactly over the rationals for synthetic data.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .linalg import FieldSpec, nullspace
from .sheaves import SheafOracle
from .spaces import FiniteSpace, build_from_maximal_simplices

DEFAULT_TOL = 1e-8

_RATIONAL_FIELD = FieldSpec(0)


@dataclass(frozen=True)
class PointCloud:
    """Finite list of points with a uniform ambient dimension."""

    coords: tuple[tuple, ...]

    def __post_init__(self):
        if self.coords:
            n = len(self.coords[0])
            if any(len(p) != n for p in self.coords):
                raise ValueError("points must share one ambient dimension")

    @classmethod
    def of(cls, rows: Iterable[Sequence]) -> "PointCloud":
        return cls(tuple(tuple(x for x in row) for row in rows))

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def ambient_dim(self) -> int:
        return len(self.coords[0]) if self.coords else 0

    def as_array(self) -> np.ndarray:
        return np.asarray([[float(x) for x in p] for p in self.coords], dtype=float)


@dataclass(frozen=True)
class Cover:
    """Named subsets of point indices; should jointly cover the cloud."""

    sets: dict[str, frozenset[int]]

    @classmethod
    def of(cls, named_sets: dict[str, Iterable[int]], n_points: int | None = None
           ) -> "Cover":
        sets = {name: frozenset(int(i) for i in idxs)
                for name, idxs in named_sets.items()}
        if n_points is not None:
            covered = frozenset().union(*sets.values()) if sets else frozenset()
            if covered != frozenset(range(n_points)):
                warnings.warn("cover does not cover every point", stacklevel=2)
        return cls(sets)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(sorted(self.sets))


@dataclass(frozen=True)
class MonomialSet:
    """Exponent vectors spanning a space of polynomial functions on R^n."""

    exponents: tuple[tuple[int, ...], ...]
    ambient_dim: int

    def __post_init__(self):
        if len(set(self.exponents)) != len(self.exponents):
            raise ValueError("duplicate exponent vectors")
        if any(len(e) != self.ambient_dim for e in self.exponents):
            raise ValueError("exponent vectors must match the ambient dimension")

    def __len__(self) -> int:
        return len(self.exponents)

    def evaluate_float(self, points: np.ndarray) -> np.ndarray:
        """Evaluation matrix: rows are points, columns monomials."""
        cols = [np.prod(points ** np.asarray(e, dtype=float), axis=1)
                for e in self.exponents]
        return np.column_stack(cols) if cols else np.zeros((len(points), 0))

    def evaluate_exact(self, points: Sequence[Sequence]) -> list[list[Fraction]]:
        rows = []
        for p in points:
            coords = [Fraction(x) for x in p]
            rows.append([_monomial_value(coords, e) for e in self.exponents])
        return rows


def _monomial_value(coords: list[Fraction], exps: tuple[int, ...]) -> Fraction:
    v = Fraction(1)
    for c, e in zip(coords, exps):
        if e:
            v *= c ** e
    return v


def monomials_up_to_degree(n: int, d: int) -> MonomialSet:
    """All monomials in n variables of total degree at most d."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    exps = [e for e in itertools.product(range(d + 1), repeat=n) if sum(e) <= d]
    exps.sort(key=lambda e: (sum(e), e))
    return MonomialSet(tuple(exps), n)


@dataclass(frozen=True)
class VanishingSpace:
    """Kernel of a monomial evaluation matrix on a point subset."""

    key: tuple
    dimension: int
    basis: tuple[tuple, ...]

    def max_residual(self, cloud: PointCloud, monomials: MonomialSet,
                     point_indices: Iterable[int]) -> float:
        idx = sorted(point_indices)
        if not idx or not self.basis:
            return 0.0
        pts = cloud.as_array()[idx]
        mat = monomials.evaluate_float(pts)
        worst = 0.0
        for vec in self.basis:
            vals = mat @ np.asarray([float(c) for c in vec])
            worst = max(worst, float(np.max(np.abs(vals))))
        return worst


def vanishing_dimension(cloud: PointCloud, point_indices: Iterable[int],
                        monomials: MonomialSet, tol: float = DEFAULT_TOL,
                        exact: bool = False, key: tuple = ()) -> VanishingSpace:
    """Kernel basis and dimension of the evaluation matrix on a point subset.

    Numerical mode counts singular values at most ``tol`` times the largest;
    exact mode does rational elimination and ignores ``tol``.
    """
    if len(monomials) == 0:
        raise ValueError("empty monomial set")
    if not exact and tol <= 0:
        raise ValueError("tolerance must be positive")
    idx = sorted(set(int(i) for i in point_indices))
    if any(i < 0 or i >= len(cloud) for i in idx):
        raise IndexError("point index out of range")
    if not idx:
        basis = tuple(tuple(1 if i == j else 0 for j in range(len(monomials)))
                      for i in range(len(monomials)))
        return VanishingSpace(key, len(monomials), basis)
    if exact:
        rows = monomials.evaluate_exact([cloud.coords[i] for i in idx])
        kernel = nullspace(_RATIONAL_FIELD, rows, len(monomials))
        return VanishingSpace(key, len(kernel), tuple(tuple(v) for v in kernel))
    mat = monomials.evaluate_float(cloud.as_array()[idx])
    u, sing, vt = np.linalg.svd(mat, full_matrices=True)
    cutoff = tol * (sing[0] if len(sing) else 0.0)
    rank = int(np.sum(sing > cutoff)) if len(sing) else 0
    kernel_rows = vt[rank:]
    basis = tuple(tuple(float(x) for x in row) for row in kernel_rows)
    return VanishingSpace(key, len(monomials) - rank, basis)


@dataclass(frozen=True)
class Nerve:
    """Face poset of the nerve of a cover, with the points each simplex covers."""

    space: FiniteSpace
    set_names: tuple[str, ...]
    points_for: dict[tuple[int, ...], frozenset[int]]

    def simplex_names(self, simplex: tuple[int, ...]) -> tuple[str, ...]:
        return tuple(self.set_names[i] for i in simplex)


def build_nerve(cover: Cover, max_dim: int) -> Nerve:
    """Nerve simplices are index sets of cover sets with common points."""
    if not cover.sets:
        raise ValueError("empty cover")
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    names = cover.names
    member_sets = [cover.sets[name] for name in names]
    vertices = [(i,) for i in range(len(names)) if member_sets[i]]
    if not vertices:
        raise ValueError("all cover sets are empty")
    points_for: dict[tuple[int, ...], frozenset[int]] = {
        v: member_sets[v[0]] for v in vertices}
    maximal = list(vertices)
    frontier = list(vertices)
    for size in range(2, max_dim + 2):
        new = []
        for simplex in frontier:
            for nxt in range(simplex[-1] + 1, len(names)):
                cand = simplex + (nxt,)
                common = points_for[simplex] & member_sets[nxt]
                if common:
                    points_for[cand] = common
                    new.append(cand)
        if not new:
            break
        maximal.extend(new)
        frontier = new
    space = build_from_maximal_simplices(maximal)
    return Nerve(space, names, points_for)


class VanishingPolynomialPresheaf(SheafOracle):
    """Stalk at a nerve simplex: monomial combinations vanishing on its points.

    Restrictions are injective inclusions, so delta compares dimensions; the
    optional inclusion check verifies the span containment numerically.
    """

    def __init__(self, nerve: Nerve, cloud: PointCloud, monomials: MonomialSet,
                 tol: float = DEFAULT_TOL, exact: bool = False,
                 check_inclusion: bool = False):
        super().__init__(nerve.space)
        self.nerve = nerve
        self.cloud = cloud
        self.monomials = monomials
        self.tol = tol
        self.exact = exact
        self.check_inclusion = check_inclusion
        self._stalks: dict[int, VanishingSpace] = {}

    def stalk(self, x) -> VanishingSpace:
        return self._stalk_by_index(self.space.index(x))

    def _stalk_by_index(self, i: int) -> VanishingSpace:
        got = self._stalks.get(i)
        if got is None:
            simplex = self.space.elements[i]
            got = vanishing_dimension(self.cloud, self.nerve.points_for[simplex],
                                      self.monomials, tol=self.tol,
                                      exact=self.exact, key=simplex)
            self._stalks[i] = got
        return got

    def _compute_delta(self, i: int, j: int) -> bool:
        same_dim = self._stalk_by_index(i).dimension == self._stalk_by_index(j).dimension
        if same_dim and self.check_inclusion and not self.exact:
            return self._included(i, j)
        return same_dim

    def _included(self, i: int, j: int) -> bool:
        big, small = self._stalk_by_index(j), self._stalk_by_index(i)
        if small.dimension == 0:
            return True
        stacked = np.vstack([np.asarray(big.basis, dtype=float),
                             np.asarray(small.basis, dtype=float)])
        return np.linalg.matrix_rank(stacked, tol=self.tol) == big.dimension

    def value_summary(self, x):
        return self.stalk(x).dimension


def vanishing_presheaf(nerve: Nerve, cloud: PointCloud, monomials: MonomialSet,
                       tol: float = DEFAULT_TOL, exact: bool = False,
                       check_inclusion: bool = False) -> VanishingPolynomialPresheaf:
    return VanishingPolynomialPresheaf(nerve, cloud, monomials, tol=tol,
                                       exact=exact, check_inclusion=check_inclusion)


def mapper_pullback_cover(cloud: PointCloud, f_values: Sequence[float],
                          intervals: Sequence[tuple[float, float]],
                          radius: float) -> Cover:
    """Pull an interval cover of the function range back to the point cloud.

    Each interval selects the points whose value lies in the closed interval;
    the selection is split into connected components of the graph joining
    points at Euclidean distance below ``radius``, one cover set each.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    if len(f_values) != len(cloud):
        raise ValueError("need one function value per point")
    vals = [float(v) for v in f_values]
    if vals:
        lo, hi = min(vals), max(vals)
        if not any(a <= lo and b >= lo for a, b in intervals) or \
           not any(a <= hi and b >= hi for a, b in intervals):
            warnings.warn("intervals do not reach the range of the function",
                          stacklevel=2)
    pts = cloud.as_array()
    sets: dict[str, frozenset[int]] = {}
    for k, (a, b) in enumerate(intervals):
        fiber = [i for i, v in enumerate(vals) if a <= v <= b]
        for c, comp in enumerate(_radius_components(pts, fiber, radius)):
            sets[f"i{k}c{c}"] = frozenset(comp)
    return Cover.of(sets, n_points=len(cloud))


def _radius_components(pts: np.ndarray, fiber: list[int],
                       radius: float) -> list[list[int]]:
    if not fiber:
        return []
    sub = pts[fiber]
    d2 = np.sum((sub[:, None, :] - sub[None, :, :]) ** 2, axis=2)
    adj = d2 < radius * radius
    seen = [False] * len(fiber)
    comps = []
    for start in range(len(fiber)):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(fiber[i])
            for j in np.flatnonzero(adj[i]):
                if not seen[j]:
                    seen[j] = True
                    stack.append(int(j))
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps
