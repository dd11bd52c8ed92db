"""Brute-force search for null-cobordance witnesses of small matrices.

Independent of the constructive pipeline: it knows only the definition.
Rows of a candidate ``P`` are enumerated depth-first in a fixed order of
integer vectors (entries ordered 0, 1, -1, 2, -2, ...), so the first witness
found is the lexicographically first one in that order.  The first half of
the rows must span a totally isotropic sublattice, i.e. be isotropic and
pairwise orthogonal in both argument orders; every partial set of rows must
be primitive (gcd of its maximal minors is 1), which is exactly the
condition for it to extend to a unimodular matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .certificate import SliceCertificate, verify
from .errors import InternalError, OddSize, SizeExceedsBudget
from .exactmat import IntMatrix, block_sum, congruence, determinant

MAX_SEARCH_SIZE = 6


@dataclass(frozen=True)
class SearchBudget:
    max_entry: int = 3
    max_size: int = 4

    def __post_init__(self):
        if self.max_entry < 1:
            raise ValueError("max_entry must be positive")
        if self.max_size % 2 or self.max_size < 0:
            raise ValueError("max_size must be a non-negative even number")
        if self.max_size > MAX_SEARCH_SIZE:
            raise ValueError(f"max_size is capped at {MAX_SEARCH_SIZE}")


def _entry_order(bound):
    out = [0]
    for x in range(1, bound + 1):
        out += [x, -x]
    return out


def _minors_gcd(rows) -> int:
    k, n = len(rows), len(rows[0])
    g = 0
    for cols in itertools.combinations(range(n), k):
        g = gcd(g, determinant(IntMatrix([[r[c] for c in cols] for r in rows])))
        if g == 1:
            return 1
    return g


def search_null_cobordant(x: IntMatrix, budget: SearchBudget = SearchBudget()) -> Optional[IntMatrix]:
    """Lexicographically first ``P`` (entries bounded by ``budget.max_entry``)
    with ``det P = ±1`` and a zero upper-left half of ``P x P'``; ``None`` if
    there is none within the budget."""
    if not x.is_square:
        raise OddSize(f"matrix must be square, got {x.shape}")
    n = x.rows
    if n % 2:
        raise OddSize(f"odd size {n} cannot split in half")
    if n > budget.max_size:
        raise SizeExceedsBudget(f"size {n} exceeds search budget {budget.max_size}")
    if n == 0:
        return IntMatrix.zeros(0)
    h = n // 2
    g = x.tolist()
    vectors = [v for v in itertools.product(_entry_order(budget.max_entry), repeat=n) if any(v)]
    # x v' for every candidate, so each pairing is one dot product
    right = {v: [sum(g[i][j] * v[j] for j in range(n)) for i in range(n)] for v in vectors}

    def dot(u, w):
        return sum(a * b for a, b in zip(u, w))

    isotropic = [v for v in vectors if dot(v, right[v]) == 0]

    def extend(rows):
        if len(rows) == n:
            return rows if determinant(IntMatrix(rows)) in (1, -1) else None
        pool = isotropic if len(rows) < h else vectors
        for v in pool:
            if len(rows) < h and any(dot(u, right[v]) or dot(v, right[u]) for u in rows):
                continue
            cand = rows + [v]
            if _minors_gcd(cand) != 1:
                continue
            found = extend(cand)
            if found is not None:
                return found
        return None

    rows = extend([])
    if rows is None:
        return None
    p = IntMatrix(rows)
    # the search is only trusted after an exact re-check
    if determinant(p) not in (1, -1) or not congruence(p, x).submatrix(0, h, 0, h).is_zero():
        raise InternalError("oracle produced an invalid witness")
    return p


def cross_validate(cert: SliceCertificate, budget: SearchBudget = SearchBudget()) -> bool:
    """True iff the oracle finds a witness whenever ``cert`` verifies."""
    x = block_sum(cert.target, cert.stabilizer)
    if x.rows > budget.max_size:
        raise SizeExceedsBudget(f"size {x.rows} exceeds search budget {budget.max_size}")
    if not verify(cert):
        return True
    return search_null_cobordant(x, budget) is not None
