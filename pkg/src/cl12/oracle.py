"""Exact rational cross-check kit.

Everything here runs over exact numbers (Python ints and
:class:`fractions.Fraction`), so results on integer or dyadic inputs are
exact.  Two independent layers:

* generic linear algebra on small rational matrices: reduced row echelon
  form, rank, fraction-free determinant, pseudoinverse via full-rank
  factorization, linear solve with nullspace basis, and the
  characteristic polynomial by the Faddeev-LeVerrier recurrence;

* a mirror of the multivector closed forms (product, involutions, scalar
  forms, inverses, representation matrices) built on a blade table that is
  re-derived from the generator rules i1^2 = +1, i2^2 = i3^2 = -1 with
  anticommutation - deliberately not shared with the hand-transcribed
  table in :mod:`cl12.multivector`, so each validates the other.

Matrices are plain lists of lists; vectors are lists.  Integer values stay
ints for speed and become Fractions only once a division demands it.
Intended for desk-scale verification, not bulk numerics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

__all__ = [
    "GEN_INDEX",
    "GEN_SIGN",
    "FracFunctionals",
    "ExactSolution",
    "fvec",
    "fadd",
    "fsub",
    "fneg",
    "fscale",
    "fmul",
    "fconjugate",
    "fprime",
    "fcre",
    "fcim",
    "ffunctionals",
    "finverse",
    "fmp_inverse",
    "fleft_matrix",
    "fright_matrix",
    "identity",
    "zeros",
    "transpose",
    "matmul",
    "mat_vec",
    "rref",
    "rank",
    "exact_det",
    "exact_pinv",
    "exact_solve",
    "char_poly",
    "poly_mul",
    "poly_derivative",
    "poly_eval",
    "poly_eval_gaussian",
]

_GENERATOR_SQUARES = (1, -1, -1)  # i1^2, i2^2, i3^2


def _generated_table() -> tuple[list[list[int]], list[list[int]]]:
    # Blade index t is the bitmask of generators it contains (bit g <-> i_{g+1});
    # multiply blade s by the generators of t in ascending order, counting the
    # transpositions needed to keep the word sorted.
    sign = [[0] * 8 for _ in range(8)]
    index = [[0] * 8 for _ in range(8)]
    for s in range(8):
        for t in range(8):
            sgn = 1
            cur = s
            for g in range(3):
                if t >> g & 1:
                    if bin(cur >> (g + 1)).count("1") % 2:
                        sgn = -sgn
                    if cur >> g & 1:
                        sgn *= _GENERATOR_SQUARES[g]
                    cur ^= 1 << g
            sign[s][t] = sgn
            index[s][t] = cur
    return sign, index


GEN_SIGN, GEN_INDEX = _generated_table()


def _exact(x):
    """Coerce to an exact number: ints stay ints, floats become Fractions
    (whole-valued floats collapse back to int)."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, float):
        if x.is_integer():
            return int(x)
        return Fraction(x)
    raise TypeError(f"not an exact-representable number: {x!r}")


def _div(x, y):
    return Fraction(x) / Fraction(y)


# ---------------------------------------------------------------------------
# exact multivector mirror
# ---------------------------------------------------------------------------


def fvec(a) -> tuple:
    """Exact coefficient tuple from a Multivector or any 8-sequence."""
    coeffs = getattr(a, "coeffs", a)
    out = tuple(_exact(x) for x in coeffs)
    if len(out) != 8:
        raise ValueError(f"expected 8 coefficients, got {len(out)}")
    return out


def fadd(a, b) -> tuple:
    return tuple(x + y for x, y in zip(fvec(a), fvec(b)))


def fsub(a, b) -> tuple:
    return tuple(x - y for x, y in zip(fvec(a), fvec(b)))


def fneg(a) -> tuple:
    return tuple(-x for x in fvec(a))


def fscale(lam, a) -> tuple:
    lam = _exact(lam)
    return tuple(lam * x for x in fvec(a))


def fmul(a, b) -> tuple:
    """Exact algebra product over the generator-derived table."""
    a = fvec(a)
    b = fvec(b)
    out = [0] * 8
    for i in range(8):
        ai = a[i]
        if not ai:
            continue
        signs = GEN_SIGN[i]
        index = GEN_INDEX[i]
        for j in range(8):
            bj = b[j]
            if bj:
                out[index[j]] += signs[j] * ai * bj
    return tuple(out)


def fconjugate(a) -> tuple:
    c = fvec(a)
    return (c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], c[7])


def fprime(a) -> tuple:
    c = fvec(a)
    return (c[0], c[1], -c[2], c[3], -c[4], c[5], -c[6], -c[7])


def fcre(a) -> tuple:
    c = fvec(a)
    return (c[0], 0, 0, 0, 0, 0, 0, c[7])


def fcim(a) -> tuple:
    c = fvec(a)
    return (0, c[1], c[2], c[3], c[4], c[5], c[6], 0)


class FracFunctionals(NamedTuple):
    N: object
    T: object
    P: object
    T1: object
    T3: object
    T5: object
    K: object


def ffunctionals(a) -> FracFunctionals:
    c = fvec(a)
    n = c[0] ** 2 - c[1] ** 2 + c[2] ** 2 - c[3] ** 2 + c[4] ** 2 - c[5] ** 2 + c[6] ** 2 - c[7] ** 2
    t = c[0] * c[7] + c[2] * c[5] - c[1] * c[6] - c[3] * c[4]
    p = n * n + 4 * t * t
    t1 = c[0] * c[1] - c[2] * c[3] - c[4] * c[5] + c[6] * c[7]
    t3 = c[0] * c[3] + c[1] * c[2] + c[4] * c[7] + c[5] * c[6]
    t5 = c[0] * c[5] + c[1] * c[4] - c[2] * c[7] - c[3] * c[6]
    k = c[0] ** 2 + c[2] ** 2 + c[4] ** 2 + c[6] ** 2
    return FracFunctionals(n, t, p, t1, t3, t5, k)


def finverse(a) -> tuple:
    """Exact two-sided inverse; raises ZeroDivisionError when P = 0."""
    f = ffunctionals(a)
    if f.P == 0:
        raise ZeroDivisionError("element with P = 0 has no inverse")
    central = (_div(f.N, f.P), 0, 0, 0, 0, 0, 0, _div(-2 * f.T, f.P))
    return fmul(central, fconjugate(a))


def fmp_inverse(a) -> tuple:
    """Exact generalized inverse (total: zero maps to zero)."""
    c = fvec(a)
    if not any(c):
        return c
    f = ffunctionals(a)
    if f.P != 0:
        return finverse(a)
    return fscale(_div(1, 4 * f.K), fprime(a))


def fleft_matrix(a) -> list[list]:
    """Exact matrix of x -> a*x on coefficient vectors."""
    c = fvec(a)
    out = [[0] * 8 for _ in range(8)]
    for i in range(8):
        if c[i]:
            for j in range(8):
                out[GEN_INDEX[i][j]][j] += GEN_SIGN[i][j] * c[i]
    return out


def fright_matrix(a) -> list[list]:
    """Exact matrix of x -> x*a on coefficient vectors."""
    c = fvec(a)
    out = [[0] * 8 for _ in range(8)]
    for j in range(8):
        if c[j]:
            for i in range(8):
                out[GEN_INDEX[i][j]][i] += GEN_SIGN[i][j] * c[j]
    return out


# ---------------------------------------------------------------------------
# exact matrix algebra
# ---------------------------------------------------------------------------


def to_exact_matrix(m) -> list[list]:
    return [[_exact(x) for x in row] for row in m]


def identity(n: int) -> list[list]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> list[list]:
    return [[0] * n for _ in range(m)]


def transpose(a) -> list[list]:
    return [list(col) for col in zip(*a)]


def matmul(a, b) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def rref(m, pivot_limit: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivot columns are chosen left to right, taking the first row with a
    nonzero entry, so the result is deterministic.  ``pivot_limit``
    restricts pivoting to the first columns (used for augmented systems).
    """
    a = to_exact_matrix(m)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    limit = ncols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for col in range(limit):
        row = next((i for i in range(r, nrows) if a[i][col]), None)
        if row is None:
            continue
        a[r], a[row] = a[row], a[r]
        inv = _div(1, a[r][col])
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def exact_det(m):
    """Determinant by fraction-free (Bareiss) elimination."""
    a = to_exact_matrix(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    a[i][j] = num // prev  # exact by the Bareiss identity
                else:
                    a[i][j] = _exact(_div(num, prev))
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _inv_square(a) -> list[list]:
    n = len(a)
    aug = [list(row) + ident for row, ident in zip(to_exact_matrix(a), identity(n))]
    red, piv = rref(aug, pivot_limit=n)
    if len(piv) != n:
        raise ZeroDivisionError("matrix is not invertible")
    return [row[n:] for row in red]


def _den_lcm(values) -> int:
    out = 1
    for v in values:
        if isinstance(v, Fraction):
            out = math.lcm(out, v.denominator)
    return out


def _as_int(x) -> int:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    raise ValueError(f"expected an integral value, got {x!r}")


def exact_pinv(m) -> list[list]:
    """Moore-Penrose inverse via full-rank factorization, verified exactly.

    Writes A = F @ G with F the pivot columns of A and G the nonzero rows
    of the reduced echelon form, then A+ = G.T @ inv(F.T @ A @ G.T) @ F.T.
    All four Penrose equations are re-checked before returning.

    Internally the input and the G factor are rescaled to integer matrices
    (pinv is homogeneous of degree -1, and scaling G cancels inside the
    formula), so the heavy products and the Penrose checks run on plain
    ints; the single scalar denominator is divided back out at the end.
    """
    a = to_exact_matrix(m)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    scale = _den_lcm(x for row in a for x in row)
    ai = [[_as_int(x * scale) for x in row] for row in a]
    red, piv = rref(ai)
    r = len(piv)
    if r == 0:
        return zeros(ncols, nrows)
    f = [[row[j] for j in piv] for row in ai]  # nrows x r
    gi = []  # r x ncols, rows of the echelon form cleared of denominators
    for row in red[:r]:
        d = _den_lcm(row)
        gi.append([_as_int(x * d) for x in row])
    ft = transpose(f)
    git = transpose(gi)
    mid = matmul(matmul(ft, ai), git)  # r x r integer, invertible by construction
    det_mid = exact_det(mid)
    adj = [[_as_int(v * det_mid) for v in row] for row in _inv_square(mid)]
    xnum = matmul(matmul(git, adj), ft)  # integer; pinv(ai) = xnum / det_mid
    ax = matmul(ai, xnum)
    xa = matmul(xnum, ai)
    assert matmul(ax, ai) == [[det_mid * v for v in row] for row in ai], "A X A != A"
    assert matmul(xa, xnum) == [[det_mid * v for v in row] for row in xnum], "X A X != X"
    assert ax == transpose(ax), "A X not symmetric"
    assert xa == transpose(xa), "X A not symmetric"
    return [[_exact(Fraction(scale * v, det_mid)) for v in row] for row in xnum]


@dataclass(frozen=True)
class ExactSolution:
    """Outcome of an exact linear solve A x = b."""

    consistent: bool
    particular: list | None
    nullspace: list[list]


def exact_solve(m, b: Sequence) -> ExactSolution:
    """Solve A x = b exactly; free variables are set to zero.

    The nullspace basis (one vector per free column) is returned whether
    or not the system is consistent.
    """
    a = to_exact_matrix(m)
    bvec = [_exact(x) for x in b]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if len(bvec) != nrows:
        raise ValueError("right-hand side length does not match row count")
    aug = [row + [bv] for row, bv in zip(a, bvec)]
    red, piv = rref(aug, pivot_limit=ncols)
    r = len(piv)
    consistent = all(not red[i][ncols] for i in range(r, nrows))
    particular: list | None = None
    if consistent:
        particular = [0] * ncols
        for i, col in enumerate(piv):
            particular[col] = red[i][ncols]
    free = [j for j in range(ncols) if j not in piv]
    nullspace = []
    for j in free:
        v = [0] * ncols
        v[j] = 1
        for i, col in enumerate(piv):
            v[col] = -red[i][j]
        nullspace.append(v)
    return ExactSolution(consistent=consistent, particular=particular, nullspace=nullspace)


# ---------------------------------------------------------------------------
# characteristic polynomial
# ---------------------------------------------------------------------------


def char_poly(m) -> list:
    """Monic characteristic polynomial det(lambda I - A), descending powers.

    Computed by the Faddeev-LeVerrier trace recurrence; exact for rational
    entries.  For an n x n input the list has n + 1 coefficients and the
    leading one is 1.
    """
    a = to_exact_matrix(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("characteristic polynomial needs a square matrix")
    coeffs = [1]
    work = [row[:] for row in a]
    for k in range(1, n + 1):
        c = _exact(Fraction(-sum(work[i][i] for i in range(n)), k))
        coeffs.append(c)
        if k == n:
            break
        for i in range(n):
            work[i][i] += c
        work = matmul(a, work)
    return coeffs


def poly_mul(p: Sequence, q: Sequence) -> list:
    """Product of two coefficient lists (descending powers)."""
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += _exact(x) * _exact(y)
    return out


def poly_derivative(p: Sequence) -> list:
    n = len(p) - 1
    return [_exact(c) * (n - i) for i, c in enumerate(p[:-1])]


def poly_eval(p: Sequence, x):
    acc = 0
    x = _exact(x)
    for c in p:
        acc = acc * x + _exact(c)
    return acc


def poly_eval_gaussian(p: Sequence, re, im) -> tuple:
    """Evaluate at the Gaussian rational re + im*i, exactly."""
    re = _exact(re)
    im = _exact(im)
    acc_re, acc_im = 0, 0
    for c in p:
        acc_re, acc_im = acc_re * re - acc_im * im + _exact(c), acc_re * im + acc_im * re
    return acc_re, acc_im
