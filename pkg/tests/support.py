"""Shared fixtures, generators, and independent oracles for the tests.

The oracles here (cofactor determinants, the Gaussian-binomial
recurrence, bisection root finding, kernel counting) deliberately avoid
the library code paths they are used to check.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from evoalg import EvolutionAlgebra, FieldSpec, Matrix

Q = FieldSpec.rationals()
F2 = FieldSpec.prime_field(2)
F3 = FieldSpec.prime_field(3)
F5 = FieldSpec.prime_field(5)
R9 = FieldSpec.approx_reals(1e-9)

# 3-dim rational algebra whose only rank-0 pair has the cubic x^3 - x - 1,
# with no rational root; the two rank-1 pairs fail the closure identity.
NO_CODIM1_OVER_Q_ROWS = [[1, 0, 0], [1, -1, 1], [2, 1, 0]]

# Nilpotent shift: e1^2 = e2, e2^2 = e3, e3^2 = 0 (singular structure).
SHIFT_NILPOTENT_ROWS = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]

# Regular 4-dim completion of fixed last-two columns whose (3,4) pair
# submatrix has rank 2 while the necessary constant relations still hold.
RANK2_PAIR_ROWS = [[1, 0, 1, 2], [0, 1, 1, -1], [0, 0, -3, 2], [0, 0, 1, 0]]

SWAP_2D_ROWS = [[0, 1], [1, 0]]  # e1^2 = e2, e2^2 = e1


def identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def make_algebra(spec, rows) -> EvolutionAlgebra:
    return EvolutionAlgebra.from_rows(spec, rows)


def make_matrix(spec, rows) -> Matrix:
    return Matrix.from_rows(spec, rows)


def elem(algebra, values):
    return algebra.element(list(values))


def all_structures(p, n):
    """Every n x n matrix over F_p, as tuples of int rows."""
    for flat in itertools.product(range(p), repeat=n * n):
        yield tuple(flat[i * n : (i + 1) * n] for i in range(n))


def int_det_mod(rows, p):
    """Independent determinant over F_p: cofactor expansion on ints."""
    return int_det([[int(x) for x in r] for r in rows]) % p


def int_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * int_det(minor)
    return total


def fraction_det(rows):
    """Cofactor-expansion determinant over Q (independent oracle)."""
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * fraction_det(minor)
    return total


def all_regular_structures(p, n):
    """All regular algebras over F_p in dimension n (int-row form)."""
    out = []
    for rows in all_structures(p, n):
        if int_det_mod([list(r) for r in rows], p) != 0:
            out.append(rows)
    return out


def random_fp_rows(p, n, rng: random.Random):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def random_regular_fp(p, n, rng: random.Random):
    while True:
        rows = random_fp_rows(p, n, rng)
        if int_det_mod(rows, p) != 0:
            return rows


def random_regular_rational(n, rng: random.Random):
    """Regular n x n matrix of small rationals (halves up to |4|)."""
    while True:
        rows = [
            [Fraction(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(n)]
            for _ in range(n)
        ]
        if fraction_det(rows) != 0:
            return rows


def gaussian_recurrence(n, m, q, _memo={}):
    """Independent Gaussian binomial via the Pascal-style recurrence."""
    if m < 0 or m > n:
        return 0
    if m == 0 or m == n:
        return 1
    key = (n, m, q)
    if key not in _memo:
        _memo[key] = gaussian_recurrence(n - 1, m - 1, q) + q ** m * gaussian_recurrence(
            n - 1, m, q
        )
    return _memo[key]


def bisect_root(f, lo, hi, iterations=200):
    """Plain bisection for a sign change of f on [lo, hi]."""
    flo = f(lo)
    assert flo * f(hi) < 0
    for _ in range(iterations):
        mid = (lo + hi) / 2.0
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return (lo + hi) / 2.0


def subspace_keys(subspaces):
    """Order-insensitive fingerprint of a collection of exact subspaces."""
    return sorted(s.sort_key() for s in subspaces)


def bases_close(exact_sub, real_sub, tol):
    """Entry-wise comparison of an exact-field basis with a real one."""
    eb, rb = exact_sub.basis, real_sub.basis
    if eb.nrows != rb.nrows or exact_sub.pivot_cols != real_sub.pivot_cols:
        return False
    for er, rr in zip(eb.rows(), rb.rows()):
        for ex, rx in zip(er, rr):
            if abs(float(ex.value) - rx.value) > tol:
                return False
    return True
