"""Canonical ideal records and the echelon linear algebra behind them.

Vectors are coefficient tuples over the prime field F_q, indexed by the
monomial basis of a :class:`~motivecount.oracle.algebra.LocalAlgebra`.  An
ideal is stored as the reduced row echelon basis of the subspace it spans,
which is a canonical form: two ideals are equal iff their records are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .algebra import LocalAlgebra

Vector = tuple[int, ...]
Row = tuple[int, Vector]  # (pivot index, normalized row)


def vec_mul_monomial(v: Vector, mul_map: tuple[int, ...], dim: int) -> Vector:
    """Multiply a vector by x or y; the monomial maps are injective where
    nonzero, so coefficients move without colliding."""
    out = [0] * dim
    for i, c in enumerate(v):
        if c and mul_map[i] >= 0:
            out[mul_map[i]] = c
    return tuple(out)


def echelon_reduce(rows: list[Row], v: Vector, q: int) -> Row | None:
    """Reduce v against an echelon basis; return the normalized new row, or
    None if v lies in the span."""
    v = list(v)
    for piv, row in rows:
        c = v[piv]
        if c:
            v = [(a - c * b) % q for a, b in zip(v, row)]
    for i, c in enumerate(v):
        if c:
            inv = pow(c, q - 2, q)
            return i, tuple((x * inv) % q for x in v)
    return None


def close_under_multiplication(generators, alg: LocalAlgebra, q: int) -> list[Row]:
    """Echelon basis of the ideal generated by the given vectors: the span
    of all monomial multiples, built with a worklist."""
    rows: list[Row] = []
    work = list(generators)
    while work:
        v = work.pop()
        new = echelon_reduce(rows, v, q)
        if new is None:
            continue
        rows.append(new)
        rows.sort()
        work.append(vec_mul_monomial(new[1], alg.mul_x, alg.dim))
        work.append(vec_mul_monomial(new[1], alg.mul_y, alg.dim))
    return rows


def rref(rows: list[Row], q: int) -> tuple[Vector, ...]:
    """Full reduced echelon form, rows sorted by pivot: the canonical form."""
    rows = sorted(rows)
    mat = [list(v) for _, v in rows]
    pivots = [p for p, _ in rows]
    for j, pj in enumerate(pivots):
        for i in range(len(mat)):
            if i != j and mat[i][pj]:
                c = mat[i][pj]
                mat[i] = [(a - c * b) % q for a, b in zip(mat[i], mat[j])]
    return tuple(tuple(r) for r in mat)


@dataclass(frozen=True)
class IdealRecord:
    """Canonical form of an ideal: reduced echelon basis plus colength."""

    basis: tuple[Vector, ...]
    colength: int

    @classmethod
    def from_rows(cls, basis: tuple[Vector, ...], alg: LocalAlgebra, q: int) -> "IdealRecord":
        """Wrap kernel output, checking the ideal property: the spanned
        subspace must be closed under multiplication by x and by y."""
        rows = [(next(i for i, c in enumerate(v) if c), v) for v in basis]
        for _, v in rows:
            for mul_map in (alg.mul_x, alg.mul_y):
                shifted = vec_mul_monomial(v, mul_map, alg.dim)
                if echelon_reduce(rows, shifted, q) is not None:
                    raise ValueError(f"basis not closed under multiplication: {basis}")
        return cls(basis=rref(rows, q), colength=alg.dim - len(basis))

    @classmethod
    def from_generators(cls, generators, alg: LocalAlgebra, q: int) -> "IdealRecord":
        rows = close_under_multiplication(list(generators), alg, q)
        return cls(basis=rref(rows, q), colength=alg.dim - len(rows))

    def reclosed(self, alg: LocalAlgebra, q: int) -> "IdealRecord":
        """Closing an ideal again must be the identity (idempotence)."""
        return IdealRecord.from_generators(self.basis, alg, q)


def enumerate_closed_subspaces(alg: LocalAlgebra, q: int, colength: int) -> set[tuple[Vector, ...]]:
    """All subspaces of the algebra closed under multiplication by x and y,
    of the given colength, with no generator-count assumption.

    Exhaustive reference used to certify that two generators reach every
    ideal.  A colength-c ideal contains every monomial of degree >= c and
    lies inside the maximal ideal, so only the middle degrees vary; their
    subspaces are swept in reduced-echelon-form order.  Feasible for small
    cases only (colength <= 3 at q = 2 is instant).
    """
    deg = [a + b for a, b in alg.monomials]
    forced = [i for i, d in enumerate(deg) if d >= colength]
    free_region = [i for i, d in enumerate(deg) if 0 < d < colength]
    extra_dim = (alg.dim - colength) - len(forced)
    found: set[tuple[Vector, ...]] = set()
    if extra_dim < 0:
        return found
    m = len(free_region)
    for pivots in combinations(range(m), extra_dim):
        free_cells = [(ri, col) for ri, pv in enumerate(pivots)
                      for col in range(pv + 1, m) if col not in pivots]
        for assign in product(range(q), repeat=len(free_cells)):
            vectors = []
            for ri, pv in enumerate(pivots):
                v = [0] * alg.dim
                v[free_region[pv]] = 1
                vectors.append(v)
            for (ri, col), val in zip(free_cells, assign):
                vectors[ri][free_region[col]] = val
            for i in forced:
                v = [0] * alg.dim
                v[i] = 1
                vectors.append(v)
            rows: list[Row] = []
            for v in vectors:
                new = echelon_reduce(rows, tuple(v), q)
                if new is not None:
                    rows.append(new)
                    rows.sort()
            if alg.dim - len(rows) != colength:
                continue
            closed = True
            for _, v in rows:
                for mul_map in (alg.mul_x, alg.mul_y):
                    if echelon_reduce(rows, vec_mul_monomial(v, mul_map, alg.dim), q) is not None:
                        closed = False
                        break
                if not closed:
                    break
            if closed:
                found.add(rref(rows, q))
    return found
