"""Atom constructors, checked against independent combinatorial oracles."""

from math import comb

import pytest

from motivecount import MotiveClass, OutOfRange, Unsupported
from motivecount.atoms import (
    AtomKind,
    affine,
    atom_class,
    grassmannian,
    hilb_p2,
    linear_system,
    omega_locus,
    projective,
    universal_curve,
)


def partitions_in_box(rows: int, cols: int) -> list[int]:
    """Coefficient list: number of partitions of j with at most ``rows``
    parts, each at most ``cols``.  Brute-force reference for the
    Gaussian binomial."""
    counts = [0] * (rows * cols + 1)

    def rec(remaining_rows, cap, total):
        if remaining_rows == 0:
            counts[total] += 1
            return
        for part in range(cap + 1):
            rec(remaining_rows - 1, part, total + part)

    rec(rows, cols, 0)
    return counts


def test_affine_and_projective():
    assert affine(0) == MotiveClass((1,))
    assert affine(3) == MotiveClass((0, 0, 0, 1))
    assert projective(0) == MotiveClass((1,))
    assert projective(2) == MotiveClass((1, 1, 1))
    assert projective(5).euler() == 6
    with pytest.raises(ValueError):
        projective(-1)


def test_grassmannian_examples():
    assert grassmannian(2, 4) == MotiveClass((1, 1, 2, 1, 1))
    assert grassmannian(2, 6).coeffs == (1, 1, 2, 2, 3, 2, 2, 1, 1)
    # brute-force subspace count over F_2: (2^6-1)(2^6-2)/((2^2-1)(2^2-2))
    assert grassmannian(2, 6).evaluate(2) == (2**6 - 1) * (2**6 - 2) // ((2**2 - 1) * (2**2 - 2))
    for n in range(6):
        assert grassmannian(0, n) == MotiveClass((1,))
        assert grassmannian(n, n) == MotiveClass((1,))
    with pytest.raises(ValueError):
        grassmannian(3, 2)


@pytest.mark.parametrize("k,n", [(k, n) for n in range(8) for k in range(n + 1)])
def test_grassmannian_counts_box_partitions(k, n):
    g = grassmannian(k, n)
    assert list(g.coeffs) == partitions_in_box(k, n - k)
    assert g.degree == k * (n - k)
    assert g.euler() == comb(n, k)
    assert g.is_palindromic()
    assert g.is_effective()


def partition_cubed_coefficient(n: int) -> int:
    """Coefficient of t^n in the product over m >= 1 of (1 - t^m)^(-3):
    three-colored partitions, computed by the standard sieve."""
    series = [1] + [0] * n
    for m in range(1, n + 1):
        for _ in range(3):
            for k in range(m, n + 1):
                series[k] += series[k - m]
    return series[n]


def test_hilb_examples():
    assert hilb_p2(0) == MotiveClass((1,))
    assert hilb_p2(1) == MotiveClass((1, 1, 1))
    assert hilb_p2(2).coeffs == (1, 2, 3, 2, 1)
    assert hilb_p2(3).coeffs == (1, 2, 5, 6, 5, 2, 1)
    assert hilb_p2(3).euler() == 22
    assert hilb_p2(2).evaluate(2) == 49


@pytest.mark.parametrize("n", range(9))
def test_hilb_structure(n):
    h = hilb_p2(n)
    assert h.degree == 2 * n
    assert h[0] == 1
    assert h.is_palindromic()
    assert h.is_effective()
    assert h.euler() == partition_cubed_coefficient(n)


def test_hilb_euler_table():
    assert [hilb_p2(n).euler() for n in range(1, 7)] == [3, 9, 22, 51, 108, 221]


def test_hilb_out_of_range():
    with pytest.raises(OutOfRange):
        hilb_p2(9)


def test_linear_system():
    assert linear_system(1) == projective(2)
    assert linear_system(2) == projective(5)
    assert linear_system(3) == projective(9)
    with pytest.raises(ValueError):
        linear_system(0)


def test_universal_curve():
    assert universal_curve(1) == MotiveClass((1, 1, 1)) * MotiveClass((1, 1))
    assert universal_curve(2).euler() == 15
    assert universal_curve(3).euler() == 27
    assert universal_curve(3).degree == 10


def test_omega_locus():
    assert omega_locus(1, 3) == projective(2) * projective(3)
    assert omega_locus(1, 3).coeffs == (1, 2, 3, 3, 2, 1)
    o = omega_locus(2, 6)
    assert o.euler() == 189
    assert o.degree == 11
    assert o[11] == 1
    assert o.coeffs == (1, 2, 6, 15, 28, 38, 39, 30, 18, 8, 3, 1)
    with pytest.raises(Unsupported):
        omega_locus(3, 10)


def test_atom_kind_validation():
    with pytest.raises(ValueError):
        AtomKind("nonsense", (1,))
    with pytest.raises(ValueError):
        AtomKind("grassmannian", (3, 2))
    assert atom_class(AtomKind("projective", (2,))) == projective(2)
    assert atom_class(AtomKind("omega_locus", (2, 6))) == omega_locus(2, 6)
