"""Slice certificates and their independent verification.

A matrix is null-cobordant when an integrally invertible ``p`` makes the
upper-left half of ``p X p'`` vanish.  A :class:`SliceCertificate` carries
such a ``p`` for ``target ⊞ stabilizer``, plus a second witness showing the
stabilizer is itself null-cobordant, so ``[target] = 0`` in the cobordism
group.

This module deliberately depends on nothing but :mod:`slicecert.exactmat`:
checking a certificate must not reuse the code that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .exactmat import IntMatrix, block_sum, congruence, determinant


@dataclass(frozen=True)
class SliceCertificate:
    target: IntMatrix
    stabilizer: IntMatrix
    stabilizer_witness: IntMatrix
    p: IntMatrix
    half: int

    @property
    def total(self) -> int:
        return self.target.rows + self.stabilizer.rows

    @property
    def witness_bits(self) -> int:
        return max(self.p.bit_size(), self.stabilizer_witness.bit_size())

    def summary(self) -> dict:
        return {
            "target_size": self.target.rows,
            "stabilizer_rank": self.stabilizer.rows,
            "witness_bits": self.witness_bits,
        }


def _half_zero(p: IntMatrix, x: IntMatrix, half: int) -> bool:
    return congruence(p, x).submatrix(0, half, 0, half).is_zero()


def first_violation(cert: SliceCertificate) -> Optional[str]:
    """Describe the first certificate invariant that fails, or ``None``."""
    t, s = cert.target, cert.stabilizer
    if not t.is_square:
        return "target is not square"
    if not s.is_square:
        return "stabilizer is not square"
    total = t.rows + s.rows
    if total % 2:
        return f"target ⊞ stabilizer has odd size {total}"
    if cert.half * 2 != total:
        return f"half = {cert.half} but size is {total}"
    if cert.p.shape != (total, total):
        return f"p has shape {cert.p.shape}, expected {(total, total)}"
    if determinant(cert.p) not in (1, -1):
        return "det(p) ≠ ±1"
    if not _half_zero(cert.p, block_sum(t, s), cert.half):
        return "upper-left half block of p (target ⊞ stabilizer) p' is not zero"
    if s.rows % 2:
        return f"stabilizer has odd size {s.rows}"
    w = cert.stabilizer_witness
    if w.shape != s.shape:
        return f"stabilizer witness has shape {w.shape}, expected {s.shape}"
    if determinant(w) not in (1, -1):
        return "det(stabilizer_witness) ≠ ±1"
    if not _half_zero(w, s, s.rows // 2):
        return "stabilizer witness does not exhibit a zero half block"
    return None


def verify(cert: SliceCertificate) -> bool:
    return first_violation(cert) is None


