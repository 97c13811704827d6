"""Linear equations a*x*b = d, a*x = d and x*b = d.

One code path covers every invertibility mix: with p = pinv(a) and
q = pinv(b), the equation is solvable iff a*p*d*q*b equals d, a particular
solution is p*d*q, and the full solution set is

    p*d*q + { y - (p*a)*y*(b*q) : y in Cl(1,2) },

the second summand being the image of an idempotent map whose matrix is
the orthogonal projector onto the kernel of L(a) @ R(b).  When a and b
are both invertible the projector vanishes and the particular solution is
the unique one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .inverse import mp_inverse
from .matrep import devectorize, vectorize
from .multivector import BASIS, DEFAULT_TOL, Multivector

__all__ = ["SolutionSet", "solve_axb", "solve_ax", "solve_xb"]


@dataclass(frozen=True)
class SolutionSet:
    """Solutions of one linear equation.

    ``particular`` is None when unsolvable.  ``hom_basis`` is an
    orthonormal basis (as multivectors) of the homogeneous solution space,
    reported for unsolvable systems too; ``dim`` is its size.  ``residual``
    is the 2-norm of a*x*b - d at the candidate solution, which for an
    unsolvable system equals the least-squares residual of the vectorized
    8x8 system.
    """

    solvable: bool
    particular: Multivector | None
    hom_basis: list[Multivector] = field(default_factory=list)
    dim: int = 0
    residual: float = 0.0


def _orthonormal_image(images: list[Multivector], tol: float) -> list[Multivector]:
    # Rank-revealing modified Gram-Schmidt with column pivoting; drop
    # threshold is relative to the largest starting column as long as any
    # column rises above the absolute noise floor.
    m = np.column_stack([vectorize(x) for x in images])
    largest = float(np.linalg.norm(m, axis=0).max())
    if largest <= tol:
        return []
    drop = tol * largest
    out: list[Multivector] = []
    work = m.copy()
    for _ in range(8):
        norms = np.linalg.norm(work, axis=0)
        j = int(np.argmax(norms))
        if norms[j] <= drop:
            break
        q = work[:, j] / norms[j]
        out.append(devectorize(q))
        work -= np.outer(q, q @ work)
    return out


def solve_axb(a: Multivector, b: Multivector, d: Multivector,
              tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solve a*x*b = d; unsolvable is reported as a value, not an error."""
    p = mp_inverse(a, tol).pinv
    q = mp_inverse(b, tol).pinv
    x0 = p * d * q
    residual = (a * x0 * b - d).norm()
    solvable = residual <= tol * (1.0 + d.norm())
    left = p * a
    right = b * q
    images = [y - left * y * right for y in BASIS]
    hom = _orthonormal_image(images, tol)
    return SolutionSet(
        solvable=solvable,
        particular=x0 if solvable else None,
        hom_basis=hom,
        dim=len(hom),
        residual=residual,
    )


def solve_ax(a: Multivector, d: Multivector, tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solve a*x = d (the b = 1 specialization)."""
    return solve_axb(a, Multivector.basis(0), d, tol)


def solve_xb(b: Multivector, d: Multivector, tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solve x*b = d (the a = 1 specialization)."""
    return solve_axb(Multivector.basis(0), b, d, tol)
