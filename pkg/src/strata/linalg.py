"""Exact linear algebra over prime fields and the rationals.

Matrices are lists of rows.  GF(p) entries are ints in [0, p); rational
entries are ``fractions.Fraction``.  Everything here is deterministic:
pivots are always the first usable column, so bases come out identical
across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

MAX_PRIME = 2**31


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: Z/p for prime p, or the rationals when p == 0."""

    characteristic: int = 2

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p < 2 or p >= MAX_PRIME or not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime < 2**31, got {p}")

    @property
    def exact_rational(self) -> bool:
        return self.characteristic == 0

    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def of_int(self, n: int):
        return Fraction(n) if self.characteristic == 0 else n % self.characteristic

    def add(self, a, b):
        c = a + b
        return c if self.characteristic == 0 else c % self.characteristic

    def sub(self, a, b):
        c = a - b
        return c if self.characteristic == 0 else c % self.characteristic

    def mul(self, a, b):
        c = a * b
        return c if self.characteristic == 0 else c % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            return 1 / a
        return pow(a, -1, self.characteristic)

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def zeros(field: FieldSpec, rows: int, cols: int) -> list[list]:
    z = field.zero()
    return [[z] * cols for _ in range(rows)]


def identity(field: FieldSpec, n: int) -> list[list]:
    m = zeros(field, n, n)
    one = field.one()
    for i in range(n):
        m[i][i] = one
    return m


def matmul(field: FieldSpec, a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(field, rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            if ai[k] == 0:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j] != 0:
                    oi[j] = field.add(oi[j], field.mul(ai[k], bk[j]))
    return out


def rref(field: FieldSpec, matrix: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, v) for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(field: FieldSpec, matrix: Sequence[Sequence]) -> int:
    if not matrix or not matrix[0]:
        return 0
    return len(rref(field, matrix)[1])


def nullspace(field: FieldSpec, matrix: Sequence[Sequence], cols: int) -> list[list]:
    """Basis of the kernel of the matrix (acting on column vectors)."""
    if cols == 0:
        return []
    if not matrix:
        return identity(field, cols)
    red, pivots = rref(field, matrix)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero()] * cols
        v[fc] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


def column_space_basis(field: FieldSpec, columns: Sequence[Sequence]) -> list[list]:
    """Maximal independent subset of the given column vectors, in order."""
    if not columns:
        return []
    matrix = [list(row) for row in zip(*columns)]
    _, pivots = rref(field, matrix)
    return [list(columns[c]) for c in pivots]


def solve(field: FieldSpec, columns: Sequence[Sequence], target: Sequence):
    """Coefficients expressing ``target`` in the span of ``columns``.

    Returns None when the target is not in the span.
    """
    n = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, pivots = rref(field, aug)
    if k in pivots:
        return None
    coeffs = [field.zero()] * k
    for r, pc in enumerate(pivots):
        coeffs[pc] = red[r][k]
    return coeffs
