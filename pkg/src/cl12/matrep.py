"""8x8 real matrix models of left and right multiplication.

``left_matrix(a)`` is the matrix L(a) with vec(a*x) = L(a) @ vec(x);
``right_matrix(a)`` is R(a) with vec(x*a) = R(a) @ vec(x).  Both are
assembled from the blade multiplication table, and the closed-form row
pattern (`_left_matrix_explicit`) is kept as an independent transcription
that the tests compare against the generated one.

Structural facts used throughout the package:

* L is a ring homomorphism: L(a*b) = L(a) @ L(b), and R reverses order.
* R(a) = K8 @ L(a).T @ K8 and the two involutions transport to
  transposition: L(a.prime()) = L(a).T, L(a.conjugate()) = S8 @ L(a).T @ S8.
* det L(a) = det R(a) = P(a)^2.
* The eigenvalues of L(a) come in two conjugate pairs with algebraic
  multiplicity 2, given in closed form by ``eigenvalues``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .multivector import MUL_INDEX, MUL_SIGN, Multivector

__all__ = [
    "K8",
    "S8",
    "EigenSpectrum",
    "vectorize",
    "devectorize",
    "left_matrix",
    "right_matrix",
    "determinant",
    "eigenvalues",
]

K8 = np.diag([1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0, -1.0])
S8 = np.diag([1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0])


def _basis_matrices() -> tuple[np.ndarray, np.ndarray]:
    # left[i] = L(e_i), right[j] = R(e_j); e_i e_j = s * e_k contributes
    # L(e_i)[k, j] = s and R(e_j)[k, i] = s.
    left = np.zeros((8, 8, 8))
    right = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            k = MUL_INDEX[i][j]
            s = float(MUL_SIGN[i][j])
            left[i, k, j] = s
            right[j, k, i] = s
    return left, right


_LEFT_BASIS, _RIGHT_BASIS = _basis_matrices()


def vectorize(a: Multivector) -> np.ndarray:
    """Coefficient vector of ``a`` as a length-8 float array."""
    return np.array(a.coeffs, dtype=float)


def devectorize(v) -> Multivector:
    v = np.asarray(v, dtype=float)
    if v.shape != (8,):
        raise ValueError(f"expected shape (8,), got {v.shape}")
    return Multivector(v)


def left_matrix(a: Multivector) -> np.ndarray:
    """Matrix of x -> a*x acting on coefficient vectors."""
    return np.tensordot(vectorize(a), _LEFT_BASIS, axes=1)


def right_matrix(a: Multivector) -> np.ndarray:
    """Matrix of x -> x*a acting on coefficient vectors."""
    return np.tensordot(vectorize(a), _RIGHT_BASIS, axes=1)


def _left_matrix_explicit(a: Multivector) -> np.ndarray:
    # Hand transcription of the closed-form row pattern; kept separate from
    # the table-generated path so the tests can cross-check the two.
    a0, a1, a2, a3, a4, a5, a6, a7 = a.coeffs
    return np.array(
        [
            [a0, a1, -a2, a3, -a4, a5, -a6, -a7],
            [a1, a0, -a3, a2, -a5, a4, -a7, -a6],
            [a2, -a3, a0, a1, -a6, -a7, a4, -a5],
            [a3, -a2, a1, a0, -a7, -a6, a5, -a4],
            [a4, -a5, a6, a7, a0, a1, -a2, a3],
            [a5, -a4, a7, a6, a1, a0, -a3, a2],
            [a6, a7, -a4, a5, a2, -a3, a0, a1],
            [a7, a6, -a5, a4, a3, -a2, a1, a0],
        ]
    )


def determinant(m: np.ndarray) -> float:
    """Determinant via LU with partial pivoting (LAPACK)."""
    m = np.asarray(m, dtype=float)
    if m.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got shape {m.shape}")
    return float(np.linalg.det(m))


@dataclass(frozen=True)
class EigenSpectrum:
    """The four eigenvalues of L(a), each of algebraic multiplicity 2.

    ``values`` is sorted by (real part, imaginary part).  When the two
    underlying quadratics share roots the listed values coincide and the
    effective multiplicity merges; the list always has four entries.
    """

    values: tuple[complex, complex, complex, complex]
    multiplicity: int = 2


def eigenvalues(a: Multivector) -> EigenSpectrum:
    """Closed-form eigenvalues of ``left_matrix(a)``.

    The roots of lambda^2 - 2*lambda*(c0 + c7*i) + N + 2*T*i together with
    their complex conjugates.  The principal square root is used; both
    signs are emitted, so the branch choice only permutes the output.
    """
    c = a.coeffs
    f = a.functionals()
    alpha = complex(c[0], c[7])
    beta = complex(f.N, 2.0 * f.T)
    root = cmath.sqrt(alpha * alpha - beta)
    lams = [alpha + root, alpha - root]
    lams += [lam.conjugate() for lam in lams]
    lams.sort(key=lambda z: (z.real, z.imag))
    return EigenSpectrum(values=tuple(lams))
