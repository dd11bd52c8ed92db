"""Constructive normal forms for unimodular integral bilinear forms.

Every routine returns a :class:`FormWitness`: an integrally invertible ``q``
whose rows are the new basis vectors (in old coordinates), so that
``congruence(q, t) == normal_form``.  The congruence is re-checked when the
witness is built, so a returned witness is never merely trusted.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from .errors import (
    NotSkew,
    NotSquare,
    NotSymmetric,
    NotUnimodular,
    OddRank,
    PreconditionFailed,
    SearchBudgetExceeded,
)
from .exactmat import (
    IntMatrix,
    complete_basis,
    congruence,
    determinant,
    inertia,
    is_unimodular,
)

log = logging.getLogger(__name__)

DEFAULT_RADIUS = 10


@dataclass(frozen=True)
class FormWitness:
    q: IntMatrix
    normal_form: IntMatrix
    source: IntMatrix

    def __post_init__(self):
        if determinant(self.q) not in (1, -1):
            raise AssertionError("change of basis is not integrally invertible")
        if congruence(self.q, self.source) != self.normal_form:
            raise AssertionError("witness does not carry the form to its normal form")

    @property
    def bit_size(self) -> int:
        return self.q.bit_size()


def _pair(g, u, v):
    # u . g . v^T with g a list of lists
    return sum(ui * sum(gij * vj for gij, vj in zip(row, v)) for ui, row in zip(u, g) if ui)


def standard_symplectic(s: int) -> IntMatrix:
    """``[[0, I_s], [-I_s, 0]]``."""
    n = 2 * s
    return IntMatrix(
        [[1 if j == i + s else -1 if i == j + s else 0 for j in range(n)] for i in range(n)],
        shape=(n, n),
    )


def symplectic_basis(t: IntMatrix) -> FormWitness:
    """Symplectic basis of a skew-symmetric unimodular form.

    Peel off hyperbolic pairs ``(e, f)`` with ``<e, f> = 1`` one at a time.
    A partner for ``e`` is found by running the Euclidean algorithm on the
    remaining basis vectors, using their pairings with ``e`` as the numbers
    being reduced; unimodularity makes the final gcd 1.
    """
    if not t.is_square:
        raise NotSquare(f"form must be square, got {t.shape}")
    if not t.is_skew():
        raise NotSkew("form is not skew-symmetric")
    n = t.rows
    if n % 2:
        raise OddRank(f"skew unimodular forms have even rank, got {n}")
    if not is_unimodular(t):
        raise NotUnimodular(f"det = {determinant(t)}")

    g = t.tolist()
    basis = [[int(i == j) for j in range(n)] for i in range(n)]
    es, fs = [], []
    while basis:
        e, rest = basis[0], basis[1:]
        vals = [_pair(g, e, b) for b in rest]
        # Euclid on the pairings <e, b_j>, applied to the vectors b_j
        while sum(1 for v in vals if v) > 1:
            j = min((i for i, v in enumerate(vals) if v), key=lambda i: abs(vals[i]))
            for i, v in enumerate(vals):
                if i != j and v:
                    c = v // vals[j]
                    rest[i] = [x - c * y for x, y in zip(rest[i], rest[j])]
                    vals[i] = v - c * vals[j]
        nz = [i for i, v in enumerate(vals) if v]
        if not nz or abs(vals[nz[0]]) != 1:
            raise NotUnimodular("form restricted to a complement is degenerate")
        j = nz[0]
        f = rest.pop(j)
        if vals[j] == -1:
            f = [-x for x in f]
        # make the remaining vectors orthogonal to both e and f
        new_rest = []
        for b in rest:
            bf = _pair(g, b, f)
            be = _pair(g, b, e)
            new_rest.append([x - bf * ex + be * fx for x, ex, fx in zip(b, e, f)])
        es.append(e)
        fs.append(f)
        basis = new_rest
    q = IntMatrix(es + fs, shape=(n, n))
    return FormWitness(q, standard_symplectic(n // 2), t)


def _check_odd_indefinite_input(t: IntMatrix):
    if not t.is_square:
        raise NotSquare(f"form must be square, got {t.shape}")
    if not t.is_symmetric():
        raise NotSymmetric("form is not symmetric")
    if not is_unimodular(t):
        raise PreconditionFailed(f"form is not unimodular (det = {determinant(t)})")
    if all(t[i, i] % 2 == 0 for i in range(t.rows)):
        raise PreconditionFailed("form is even")
    pos, neg, _ = inertia(t)
    return pos, neg


def _is_characteristic(g, v) -> bool:
    # v is characteristic iff <x, v> = <x, x> mod 2 for all x; testing the
    # standard basis suffices since both sides are additive mod 2
    n = len(g)
    return all((sum(g[i][j] * v[j] for j in range(n)) - g[i][i]) % 2 == 0 for i in range(n))


def _candidates(n: int, radius: int):
    """Vectors of max-norm exactly ``radius`` with first nonzero entry positive.

    Ordered by support size, then lexicographically.
    """
    values = [x for x in range(-radius, radius + 1) if x]
    for support in range(1, n + 1):
        for pos in itertools.combinations(range(n), support):
            for combo in itertools.product(values, repeat=support):
                if combo[0] < 0 or max(abs(x) for x in combo) != radius:
                    continue
                v = [0] * n
                for p, x in zip(pos, combo):
                    v[p] = x
                yield v


def _find_unit(g, signs, max_radius, need_odd_complement):
    n = len(g)
    for radius in range(1, max_radius + 1):
        for sign in signs:
            for v in _candidates(n, radius):
                if _pair(g, v, v) != sign:
                    continue
                if need_odd_complement and _is_characteristic(g, v):
                    continue
                return v, sign
    return None


def split_unit_vector(t: IntMatrix, sign: Optional[int] = None, max_radius: int = DEFAULT_RADIUS):
    """Split ``t`` as ``<±1> ⊞ complement``.

    Returns ``(v, witness)`` where ``v . t . v^T = ±1`` and the witness's
    first basis vector is ``v``; the rest span the orthogonal complement.
    ``sign`` restricts the norm of ``v``; by default +1 is preferred over -1
    at each search radius.  For rank > 1 only non-characteristic ``v`` are
    accepted, which keeps the complement odd.
    """
    pos, neg = _check_odd_indefinite_input(t)
    n = t.rows
    if n > 1 and (pos == 0 or neg == 0):
        raise PreconditionFailed("form is definite")
    if sign not in (None, 1, -1):
        raise ValueError("sign must be +1, -1 or None")
    g = t.tolist()
    signs = (1, -1) if sign is None else (sign,)
    found = _find_unit(g, signs, max_radius, n > 1)
    if found is None:
        raise SearchBudgetExceeded(f"no unit vector with entries up to {max_radius}")
    v, norm = found
    rows = complete_basis([v], n)[0].tolist()
    # project the completing rows onto v's orthogonal complement:
    # x -> x - norm * <x, v> v  (integral because <v, v> = ±1)
    comp = []
    for x in rows[1:]:
        c = norm * _pair(g, x, v)
        comp.append([a - c * b for a, b in zip(x, v)])
    q = IntMatrix([v] + comp, shape=(n, n))
    return v, FormWitness(q, congruence(q, t), t)


def _size_reduce(gram: IntMatrix) -> IntMatrix:
    """Unimodular ``u`` making ``congruence(u, gram)`` no larger entrywise.

    Greedy: replace basis vector ``b_i`` by ``b_i - c b_j`` whenever that
    lowers the sum of absolute Gram entries in row ``i``.  This is only a
    heuristic for indefinite forms, but it keeps successive remainders
    small enough for the bounded unit-vector search.
    """
    n = gram.rows
    g = gram.tolist()
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def cost(row_i, norm):
        return sum(abs(x) for x in row_i) + abs(norm)

    improved = True
    while improved:
        improved = False
        for i in range(n):
            for j in range(n):
                if i == j or g[i][j] == 0:
                    continue
                cs = {1, -1}
                if g[j][j]:
                    cs.add(round(g[i][j] / g[j][j]))
                best, best_c = cost(g[i], g[i][i]), 0
                for c in cs - {0}:
                    row = [g[i][k] - c * g[j][k] for k in range(n)]
                    norm = g[i][i] - 2 * c * g[i][j] + c * c * g[j][j]
                    row[i] = norm
                    score = cost(row, norm)
                    if score < best:
                        best, best_c = score, c
                if best_c:
                    c = best_c
                    row = [g[i][k] - c * g[j][k] for k in range(n)]
                    row[i] = g[i][i] - 2 * c * g[i][j] + c * c * g[j][j]
                    g[i] = row
                    for k in range(n):
                        g[k][i] = row[k]
                    u[i] = [a - c * b for a, b in zip(u[i], u[j])]
                    improved = True
    return IntMatrix(u, shape=(n, n))


def diagonalize_odd_indefinite(t: IntMatrix, max_radius: int = DEFAULT_RADIUS) -> FormWitness:
    """Congruence taking an odd indefinite unimodular form to ``diag(1^u, -1^v)``.

    Unit vectors are split off one at a time.  The sign of each split is
    chosen so the remainder stays indefinite (peel from the majority sign),
    and characteristic vectors are skipped so the remainder stays odd; the
    classification of odd indefinite forms then guarantees the next unit
    vector exists.
    """
    n = t.rows
    if n == 0 and t.is_square:
        return FormWitness(t, t, t)
    pos, neg = _check_odd_indefinite_input(t)
    if n > 1 and (pos == 0 or neg == 0):
        raise PreconditionFailed("form is definite")

    basis = IntMatrix.identity(n)  # rows: current basis in original coordinates
    gram = t
    plus, minus = [], []
    while gram.rows:
        k = gram.rows
        if k == 1:
            norm = gram[0, 0]
            if norm not in (1, -1):
                raise PreconditionFailed("remainder is not unimodular")
            (plus if norm == 1 else minus).append(basis.row(0))
            break
        u = _size_reduce(gram)
        basis, gram = u @ basis, congruence(u, gram)
        want = 1 if pos >= neg else -1
        v, w = split_unit_vector(gram, sign=want, max_radius=max_radius)
        new_basis = w.q @ basis
        (plus if want == 1 else minus).append(new_basis.row(0))
        basis = new_basis.submatrix(1, k, 0, n)
        gram = w.normal_form.submatrix(1, k, 1, k)
        if want == 1:
            pos -= 1
        else:
            neg -= 1
        if gram.rows and all(gram[i, i] % 2 == 0 for i in range(gram.rows)):
            raise PreconditionFailed("remainder became even")
        log.debug("split %+d, remainder rank %d, witness bits %d",
                  want, gram.rows, basis.bit_size())
    q = IntMatrix(plus + minus, shape=(n, n))
    return FormWitness(q, IntMatrix.diagonal([1] * len(plus) + [-1] * len(minus)), t)
