"""Seifert matrices and knot dimension bookkeeping.

Convention: entry ``(i, j)`` of a Seifert matrix is ``L(x_i, i_+ x_j)``, the
linking number of the i-th class with the positive push-off of the j-th.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InputError, NotSquare, NotUnimodular, WrongParity
from .exactmat import IntMatrix, determinant, signature, transpose


@dataclass(frozen=True)
class KnotDims:
    """Dimensions of a frame-spin: base knot ``S^{k-2} ⊂ S^k``, manifold
    ``M^m``, result ``S^{2n-1} ⊂ S^{2n+1}``."""

    k: int
    m: int
    n: int

    def __post_init__(self):
        if self.k < 3:
            raise InputError(f"k must be >= 3, got {self.k}")
        if self.m < 1:
            raise InputError(f"m must be >= 1, got {self.m}")
        if self.m + self.k != 2 * self.n + 1:
            raise InputError(f"m + k must equal 2n + 1 (m={self.m}, k={self.k}, n={self.n})")

    @classmethod
    def from_km(cls, k: int, m: int) -> KnotDims:
        if (m + k) % 2 == 0:
            raise InputError(f"m + k must be odd (m={m}, k={k})")
        return cls(k, m, (m + k - 1) // 2)

    @property
    def epsilon(self) -> int:
        return (-1) ** self.n


@dataclass(frozen=True)
class SeifertData:
    a: IntMatrix
    n: int

    def __post_init__(self):
        if not self.a.is_square:
            raise NotSquare(f"Seifert matrix must be square, got {self.a.shape}")
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        d = determinant(epsilon_symmetrization(self))
        if d not in (1, -1):
            sym = "A + A'" if self.epsilon == 1 else "A - A'"
            raise NotUnimodular(f"det({sym}) = {d}")

    @property
    def epsilon(self) -> int:
        return (-1) ** self.n

    @property
    def size(self) -> int:
        return self.a.rows


def validate_seifert(a: IntMatrix, n: int) -> SeifertData:
    return SeifertData(a, n)


def _unpack(s, n):
    # raw (matrix, n) pairs skip the unimodularity check: the arithmetic
    # below makes sense for any square matrix
    if isinstance(s, SeifertData):
        return s.a, s.epsilon
    if n is None:
        raise InputError("n is required when passing a bare matrix")
    if not s.is_square:
        raise NotSquare(f"Seifert matrix must be square, got {s.shape}")
    return s, (-1) ** n


def epsilon_symmetrization(s: Union[SeifertData, IntMatrix], n: Optional[int] = None) -> IntMatrix:
    """``A + (-1)^n A'``, the intersection form of the Seifert surface."""
    a, eps = _unpack(s, n)
    return a + transpose(a).scale(eps)


def levine_signature_residue(s: Union[SeifertData, IntMatrix], n: Optional[int] = None) -> int:
    """Signature of ``A + A'`` modulo 16 (defined for even ``n`` only).

    A Seifert matrix of a knot ``S^3 ⊂ S^5`` must have residue 0.
    """
    a, eps = _unpack(s, n)
    if eps != 1:
        raise WrongParity("signature residue needs n even (A + A' symmetric)")
    return signature(a + transpose(a)) % 16


@dataclass(frozen=True)
class DimensionReport:
    ambient: int
    slice_by_kervaire: bool

    @property
    def message(self) -> str:
        if self.slice_by_kervaire:
            return "slice by Kervaire (even-dimensional knots are all slice)"
        return "use matrix machinery"


def even_dimensional_slice(ambient: int) -> DimensionReport:
    """Dispatch on the knot ``S^{ambient-2} ⊂ S^ambient``.

    Knots of even dimension ``ambient - 2`` are slice without further work.
    """
    return DimensionReport(ambient, ambient % 2 == 0)
