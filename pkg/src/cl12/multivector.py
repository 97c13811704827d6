"""Multivector arithmetic for the real Clifford algebra of signature (1, 2).

The algebra is generated by three pairwise anticommuting units i1, i2, i3
with i1*i1 = +1 and i2*i2 = i3*i3 = -1.  An element is stored through its
eight real coefficients over the blade basis

    e0 = 1,    e1 = i1,     e2 = i2,     e3 = i1*i2,
    e4 = i3,   e5 = i1*i3,  e6 = i2*i3,  e7 = i1*i2*i3.

With this ordering the product of two basis blades lands on the blade whose
index is the XOR of the factor indices; only the sign depends on the pair.
Both sign and index are kept in explicit tables (``MUL_SIGN``,
``MUL_INDEX``); the test suite re-derives them from the generator rules so
a transcription slip cannot survive unnoticed.

Scalars are double precision floats.  All operations on integer
coefficients of desk scale are exact; :mod:`cl12.oracle` mirrors the
closed forms over exact rationals for independent verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DEFAULT_TOL",
    "MUL_INDEX",
    "MUL_SIGN",
    "Functionals",
    "Multivector",
    "BASIS",
    "e0",
    "e1",
    "e2",
    "e3",
    "e4",
    "e5",
    "e6",
    "e7",
    "basis",
    "scalar",
    "zero",
]

#: Default relative tolerance for singularity / centrality decisions.
DEFAULT_TOL = 1e-9

#: e_i * e_j = MUL_SIGN[i][j] * e_{MUL_INDEX[i][j]}.
MUL_INDEX = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 0, 3, 2, 5, 4, 7, 6),
    (2, 3, 0, 1, 6, 7, 4, 5),
    (3, 2, 1, 0, 7, 6, 5, 4),
    (4, 5, 6, 7, 0, 1, 2, 3),
    (5, 4, 7, 6, 1, 0, 3, 2),
    (6, 7, 4, 5, 2, 3, 0, 1),
    (7, 6, 5, 4, 3, 2, 1, 0),
)

MUL_SIGN = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, -1, -1, 1, 1, -1, -1, 1),
    (1, -1, -1, 1, 1, -1, -1, 1),
    (1, -1, -1, 1, -1, 1, 1, -1),
    (1, -1, -1, 1, -1, 1, 1, -1),
    (1, 1, 1, 1, -1, -1, -1, -1),
    (1, 1, 1, 1, -1, -1, -1, -1),
)


@dataclass(frozen=True)
class Functionals:
    """The seven scalar forms attached to a multivector.

    N and T are the quadratic forms whose combination P = N^2 + 4*T^2
    decides invertibility (P != 0) and equals the fourth root of the
    representation determinant.  T1, T3, T5 and K drive the closed form
    of the generalized inverse for singular nonzero elements.
    """

    N: float
    T: float
    P: float
    T1: float
    T3: float
    T5: float
    K: float


def _mul_coeffs(a: Sequence[float], b: Sequence[float]) -> list[float]:
    out = [0.0] * 8
    for i in range(8):
        ai = a[i]
        if ai == 0.0:
            continue
        signs = MUL_SIGN[i]
        index = MUL_INDEX[i]
        for j in range(8):
            bj = b[j]
            if bj != 0.0:
                out[index[j]] += signs[j] * ai * bj
    return out


class Multivector:
    """Immutable element of the eight-dimensional algebra.

    Supports ``+``, ``-``, ``*`` (both the algebra product and scaling by
    a real number) and ``/`` by a real number.  Equality and hashing are
    exact on the coefficient tuple.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[float]):
        c = tuple(float(x) + 0.0 for x in coeffs)  # +0.0 normalizes -0.0
        if len(c) != 8:
            raise ValueError(f"expected 8 coefficients, got {len(c)}")
        if not all(math.isfinite(x) for x in c):
            raise ValueError(f"coefficients must be finite, got {c}")
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Multivector is immutable")

    @property
    def coeffs(self) -> tuple[float, ...]:
        return self._c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Multivector":
        return cls((0.0,) * 8)

    @classmethod
    def scalar(cls, x: float) -> "Multivector":
        return cls((float(x), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0))

    @classmethod
    def basis(cls, t: int) -> "Multivector":
        if not 0 <= t <= 7:
            raise ValueError(f"basis index must be in 0..7, got {t}")
        c = [0.0] * 8
        c[t] = 1.0
        return cls(c)

    # -- ring structure ------------------------------------------------

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(x + y for x, y in zip(self._c, other._c))

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(x - y for x, y in zip(self._c, other._c))

    def __neg__(self) -> "Multivector":
        return Multivector(-x for x in self._c)

    def __pos__(self) -> "Multivector":
        return self

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return Multivector(_mul_coeffs(self._c, other._c))
        if isinstance(other, (int, float)):
            return Multivector(x * other for x in self._c)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(other * x for x in self._c)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(x / other for x in self._c)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Multivector({list(self._c)!r})"

    def __str__(self) -> str:
        return format_multivector(self)

    # -- involutions and parts ------------------------------------------

    def conjugate(self) -> "Multivector":
        """Negate the e1..e6 components; fixes scalars and e7."""
        c = self._c
        return Multivector((c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], c[7]))

    def prime(self) -> "Multivector":
        """Negate the e2, e4, e6, e7 components.

        This involution is the one transported to matrix transposition by
        the left regular representation.
        """
        c = self._c
        return Multivector((c[0], c[1], -c[2], c[3], -c[4], c[5], -c[6], -c[7]))

    def cre(self) -> "Multivector":
        """Central part c0 + c7*e7, equal to (a + a.conjugate()) / 2."""
        c = self._c
        return Multivector((c[0], 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, c[7]))

    def cim(self) -> "Multivector":
        """Complement of the central part: a - a.cre()."""
        c = self._c
        return Multivector((0.0, c[1], c[2], c[3], c[4], c[5], c[6], 0.0))

    def split_h(self) -> tuple["Multivector", "Multivector"]:
        """Split a = a_h + a_H * e4 with both halves in span{e0, e1, e2, e3}.

        The four-dimensional span of e0..e3 is a subalgebra (the split
        quaternions); right multiplication by e4 carries it onto the
        complementary coefficients, so the split is a plain reindexing.
        """
        c = self._c
        a_h = Multivector((c[0], c[1], c[2], c[3], 0.0, 0.0, 0.0, 0.0))
        a_big = Multivector((c[4], c[5], c[6], c[7], 0.0, 0.0, 0.0, 0.0))
        return a_h, a_big

    # -- scalar forms ----------------------------------------------------

    def functionals(self) -> Functionals:
        c = self._c
        n = (
            c[0] * c[0] - c[1] * c[1] + c[2] * c[2] - c[3] * c[3]
            + c[4] * c[4] - c[5] * c[5] + c[6] * c[6] - c[7] * c[7]
        )
        t = c[0] * c[7] + c[2] * c[5] - c[1] * c[6] - c[3] * c[4]
        p = n * n + 4.0 * t * t
        t1 = c[0] * c[1] - c[2] * c[3] - c[4] * c[5] + c[6] * c[7]
        t3 = c[0] * c[3] + c[1] * c[2] + c[4] * c[7] + c[5] * c[6]
        t5 = c[0] * c[5] + c[1] * c[4] - c[2] * c[7] - c[3] * c[6]
        k = c[0] * c[0] + c[2] * c[2] + c[4] * c[4] + c[6] * c[6]
        return Functionals(N=n, T=t, P=p, T1=t1, T3=t3, T5=t5, K=k)

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return math.sqrt(sum(x * x for x in self._c))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0.0 for x in self._c)

    def is_central(self, tol: float = 0.0) -> bool:
        """True when every e1..e6 component is at most ``tol`` in magnitude."""
        if tol < 0.0:
            raise ValueError("tolerance must be nonnegative")
        return all(abs(x) <= tol for x in self._c[1:7])

    def is_singular(self, tol: float = DEFAULT_TOL) -> bool:
        """True when |P| <= tol * (1 + norm^4); P is homogeneous of degree 4."""
        if tol < 0.0:
            raise ValueError("tolerance must be nonnegative")
        s = sum(x * x for x in self._c)
        return abs(self.functionals().P) <= tol * (1.0 + s * s)

    def isclose(self, other: "Multivector", tol: float = DEFAULT_TOL) -> bool:
        """Componentwise comparison scaled by the larger norm."""
        bound = tol * (1.0 + max(self.norm(), other.norm()))
        return all(abs(x - y) <= bound for x, y in zip(self._c, other._c))


def format_multivector(a: Multivector, digits: int = 12) -> str:
    """Render ``a`` like ``0.25 e1 - 0.25 e2``.

    Components more than ``digits`` orders of magnitude below the largest
    one are not displayed (they are below the printed precision anyway).
    The output reparses to the displayed value under the expression
    grammar of :mod:`cl12.cli`.
    """
    largest = max(abs(x) for x in a.coeffs)
    if largest == 0.0:
        return "0"
    cutoff = largest * 10.0 ** (-digits)
    parts: list[str] = []
    for t, c in enumerate(a.coeffs):
        if abs(c) < cutoff or c == 0.0:
            continue
        mag = abs(c)
        body = f"{mag:.{digits}g}" if t == 0 else (
            f"e{t}" if mag == 1.0 else f"{mag:.{digits}g} e{t}"
        )
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def zero() -> Multivector:
    return Multivector.zero()


def scalar(x: float) -> Multivector:
    return Multivector.scalar(x)


def basis(t: int) -> Multivector:
    return Multivector.basis(t)


#: The eight basis blades, index t <-> blade e_t.
BASIS: tuple[Multivector, ...] = tuple(Multivector.basis(t) for t in range(8))

e0, e1, e2, e3, e4, e5, e6, e7 = BASIS
