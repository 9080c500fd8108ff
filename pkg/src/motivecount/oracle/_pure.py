"""Pure-Python enumeration backend.

The compiled kernel walks every ordered generator pair directly.  Walking
q^(2 dim) pairs is out of reach for interpreted code, so this backend uses
the identity (f, g) = (f) + (g): the ideal generated by a pair is the
subspace sum of the two principal ideals.  It sweeps every element once,
records the distinct principal ideals, and then forms all pairwise sums,
which visits the same set of ideals as the pair loop (the kernel and this
module are cross-checked against each other in the tests).
"""

from __future__ import annotations

from .algebra import LocalAlgebra
from .ideals import Row, Vector, close_under_multiplication, echelon_reduce, rref


def _decode(code: int, q: int, dim: int) -> Vector:
    out = []
    for _ in range(dim):
        code, rem = divmod(code, q)
        out.append(rem)
    return tuple(out)


def principal_closures(alg: LocalAlgebra, q: int) -> dict[tuple[Vector, ...], list[Row]]:
    """Echelon bases of the principal ideals (f) for every element f,
    keyed by canonical form."""
    out: dict[tuple[Vector, ...], list[Row]] = {}
    for code in range(q ** alg.dim):
        rows = close_under_multiplication([_decode(code, q, alg.dim)], alg, q)
        out.setdefault(rref(rows, q), rows)
    return out


def enumerate_ideals(alg: LocalAlgebra, q: int, colength: int,
                     shuffle=None) -> list[tuple[Vector, ...]]:
    """Canonical bases of all two-generated ideals of the given colength,
    sorted.  ``shuffle`` (a random.Random) only permutes the sweep order,
    for order-independence tests; the result is identical either way."""
    principals = list(principal_closures(alg, q).values())
    if shuffle is not None:
        shuffle.shuffle(principals)
    found: set[tuple[Vector, ...]] = set()
    for rows_f in principals:
        if alg.dim - len(rows_f) == colength:
            found.add(rref(rows_f, q))
        for rows_g in principals:
            merged = list(rows_f)
            grew = False
            for _, v in rows_g:
                new = echelon_reduce(merged, v, q)
                if new is not None:
                    merged.append(new)
                    merged.sort()
                    grew = True
            if grew and alg.dim - len(merged) == colength:
                found.add(rref(merged, q))
    return sorted(found)
