"""Relative homology of open stars in finite spaces, over a field.

For an open U in a face poset, ``H(X, X - U)`` is computed from the quotient
complex whose degree-p basis is the p-simplices lying in U, with the usual
boundary signs and faces outside U dropped (equivalently the relative complex
of the closed star modulo the link).  For general posets the same pair is
resolved through the order complex: degree-p generators are the strict
(p+1)-chains that meet U.

Restriction maps between local homology groups are chain-level projections
(drop generators that leave the smaller star) descended to the chosen
homology bases, so isomorphism checks are honest rank computations and never
dimension comparisons.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .linalg import FieldSpec, column_space_basis, matmul, nullspace, rank, solve
from .spaces import FiniteSpace, Subspace, NotOpenError, iter_bits


@dataclass
class ChainComplex:
    """Finitely generated chain complex with a labeled basis per degree.

    boundary[p] maps degree p to degree p-1 and has shape
    (len(basis[p-1]), len(basis[p])).
    """

    field: FieldSpec
    basis: dict[int, list]
    boundary: dict[int, list[list]]

    def dims(self) -> dict[int, int]:
        return {p: len(b) for p, b in self.basis.items()}

    def check_boundary_squares_to_zero(self) -> bool:
        for p, bp in self.boundary.items():
            bq = self.boundary.get(p - 1)
            if bq is None or not bp or not bq:
                continue
            sq = matmul(self.field, bq, bp)
            if any(v != 0 for row in sq for v in row):
                return False
        return True


@dataclass
class GradedSpace:
    """Homology: per-degree dimension plus cycle representatives.

    ``cycles[p]`` holds homology-basis representatives as coefficient vectors
    over ``complex.basis[p]``; ``boundaries[p]`` an independent generating set
    of the degree-p boundaries.
    """

    complex: ChainComplex
    dims: dict[int, int]
    cycles: dict[int, list[list]]
    boundaries: dict[int, list[list]]

    def dim_vector(self, top: int | None = None) -> tuple[int, ...]:
        if top is None:
            top = max(self.dims, default=0)
        return tuple(self.dims.get(p, 0) for p in range(top + 1))

    def total_dim(self) -> int:
        return sum(self.dims.values())


@dataclass
class InducedMap:
    """A map of graded homology spaces in the two chosen bases."""

    source: GradedSpace
    target: GradedSpace
    matrices: dict[int, list[list]] = dc_field(default_factory=dict)

    def degree_dims(self, p: int) -> tuple[int, int]:
        return self.source.dims.get(p, 0), self.target.dims.get(p, 0)


def _require_open(space: FiniteSpace, u: Subspace) -> None:
    if not u.is_open():
        raise NotOpenError("relative chain complexes need an open subspace")


def relative_chain_complex(space: FiniteSpace, u: Subspace,
                           field: FieldSpec = FieldSpec(2)) -> ChainComplex:
    """Quotient complex computing H(X, X-U) for a face poset, U open."""
    if not space.is_face_poset:
        raise ValueError("relative_chain_complex needs a face poset; "
                         "use order_chain_complex for general posets")
    _require_open(space, u)
    basis: dict[int, list] = {}
    for i in u.indices():
        s = space.elements[i]
        basis.setdefault(len(s) - 1, []).append(s)
    for b in basis.values():
        b.sort()
    boundary = _face_boundaries(field, basis, in_u=lambda s: s in u)
    return ChainComplex(field, basis, boundary)


def _face_boundaries(field, basis, in_u):
    boundary = {}
    for p, gens in basis.items():
        if p == 0:
            continue
        lower = {s: i for i, s in enumerate(basis.get(p - 1, []))}
        mat = [[field.zero()] * len(gens) for _ in range(len(lower))]
        for j, s in enumerate(gens):
            for k in range(len(s)):
                f = s[:k] + s[k + 1:]
                if in_u(f):
                    mat[lower[f]][j] = field.of_int((-1) ** k)
        boundary[p] = mat
    return boundary


def order_chain_complex(space: FiniteSpace, u: Subspace,
                        field: FieldSpec = FieldSpec(2)) -> ChainComplex:
    """Relative order-complex model of H(X, X-U) for any finite poset.

    Degree-p generators are strict chains x_0 < ... < x_p of the whole space
    that meet U; the boundary drops one entry at a time with alternating
    signs, discarding faces that lie entirely outside U.
    """
    _require_open(space, u)
    n = len(space.elements)
    chains: list[tuple[int, ...]] = []
    stack = [(i,) for i in range(n)]
    while stack:
        c = stack.pop()
        chains.append(c)
        top = c[-1]
        for j in iter_bits(space.up_strict(top)):
            stack.append(c + (j,))
    umask = u.mask
    meets = [c for c in chains if any(umask >> i & 1 for i in c)]
    basis: dict[int, list] = {}
    for c in meets:
        basis.setdefault(len(c) - 1, []).append(c)
    for b in basis.values():
        b.sort()
    meet_set = set(meets)
    boundary = _face_boundaries(field, basis, in_u=lambda c: c in meet_set)
    return ChainComplex(field, basis, boundary)


def local_chain_complex(space: FiniteSpace, u: Subspace,
                        field: FieldSpec = FieldSpec(2)) -> ChainComplex:
    if space.is_face_poset:
        return relative_chain_complex(space, u, field)
    return order_chain_complex(space, u, field)


def homology(cc: ChainComplex) -> GradedSpace:
    """Per-degree homology dimensions and cycle representatives.

    The representatives are nullspace vectors of the boundary that extend an
    independent set of boundaries; generator order is the lexicographic basis
    order, so results are reproducible.
    """
    field = cc.field
    degrees = sorted(cc.basis)
    dims: dict[int, int] = {}
    cycles: dict[int, list[list]] = {}
    bnds: dict[int, list[list]] = {}
    for p in degrees:
        n_p = len(cc.basis[p])
        dp = cc.boundary.get(p)
        if dp:
            cycle_basis = nullspace(field, dp, n_p)
        else:
            # no boundary map out of this degree: everything is a cycle
            cycle_basis = _std_basis(field, n_p)
        dq = cc.boundary.get(p + 1)
        if dq and dq[0]:
            cols = [[row[j] for row in dq] for j in range(len(dq[0]))]
            boundary_basis = column_space_basis(field, cols)
        else:
            boundary_basis = []
        reps = _extend_past(field, boundary_basis, cycle_basis, n_p)
        dims[p] = len(reps)
        cycles[p] = reps
        bnds[p] = boundary_basis
    return GradedSpace(cc, dims, cycles, bnds)


def _std_basis(field, n):
    basis = []
    for i in range(n):
        v = [field.zero()] * n
        v[i] = field.one()
        basis.append(v)
    return basis


def _extend_past(field, have: list[list], candidates: list[list], n: int) -> list[list]:
    """Candidates that enlarge the span of ``have``, greedily in order."""
    if n == 0:
        return []
    picked: list[list] = []
    matrix = [list(v) for v in have]
    base_rank = rank(field, matrix) if matrix else 0
    for v in candidates:
        matrix.append(list(v))
        r = rank(field, matrix)
        if r > base_rank:
            base_rank = r
            picked.append(list(v))
        else:
            matrix.pop()
    return picked


def chain_projection(field, source_basis: list, target_index: dict[object, int],
                     vector: list) -> list:
    out = [field.zero()] * len(target_index)
    for coeff, gen in zip(vector, source_basis):
        if coeff != 0 and gen in target_index:
            out[target_index[gen]] = coeff
    return out


def induced_map(h_src: GradedSpace, h_tgt: GradedSpace) -> InducedMap:
    """Homology-level matrix of the generator-dropping chain projection.

    Source generators absent from the target basis map to zero; each
    projected representative is rewritten in the target's homology basis
    modulo boundaries.
    """
    field = h_src.complex.field
    out = InducedMap(h_src, h_tgt)
    for p in sorted(set(h_src.dims) | set(h_tgt.dims)):
        src_reps = h_src.cycles.get(p, [])
        tgt_dim = h_tgt.dims.get(p, 0)
        tgt_basis = h_tgt.complex.basis.get(p, [])
        tgt_index = {g: i for i, g in enumerate(tgt_basis)}
        cols = []
        span = h_tgt.cycles.get(p, []) + h_tgt.boundaries.get(p, [])
        for rep in src_reps:
            img = chain_projection(field, h_src.complex.basis.get(p, []), tgt_index, rep)
            if tgt_dim == 0:
                cols.append([])
                continue
            coeffs = solve(field, [list(v) for v in span], img)
            if coeffs is None:
                raise AssertionError("projected cycle not a cycle in the target")
            cols.append(coeffs[:tgt_dim])
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(tgt_dim)]
        out.matrices[p] = mat
    return out


def induced_restriction(space: FiniteSpace, x, y,
                        field: FieldSpec = FieldSpec(2)) -> InducedMap:
    """Restriction map on local homology along x <= y (B_y inside B_x)."""
    from .spaces import min_open_nbhd

    if not space.leq(x, y):
        raise ValueError(f"{x!r} and {y!r} are not comparable with x <= y")
    h_src = homology(local_chain_complex(space, min_open_nbhd(space, x), field))
    h_tgt = homology(local_chain_complex(space, min_open_nbhd(space, y), field))
    return induced_map(h_src, h_tgt)


def is_isomorphism(m: InducedMap) -> bool:
    """True when every degree matrix is square of full rank."""
    for p in sorted(set(m.source.dims) | set(m.target.dims)):
        ds, dt = m.degree_dims(p)
        if ds != dt:
            return False
        if ds == 0:
            continue
        if rank(m.source.complex.field, m.matrices[p]) != ds:
            return False
    return True
