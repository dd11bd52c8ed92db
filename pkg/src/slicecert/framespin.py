"""Seifert matrix of a frame-spun knot from algebraic data.

The Seifert surface of the spun knot has free middle homology
``⊕_{a=1}^{k-2} F_a(V) ⊗ F_{n-a}(M)``.  Summands are ordered by increasing
``a``; inside a summand the basis ``x ⊗ ξ`` is lexicographic with the
``V``-index outermost, which is exactly the Kronecker convention of
:func:`slicecert.exactmat.tensor`.

The pairing of ``x ⊗ ξ ∈ F_{a,b}`` with ``y ⊗ η ∈ F_{c,d}`` is
``(-1)^{(m-b)(k-c)} Λ(x, y) T(ξ, η)`` and vanishes unless ``a + c = k - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .errors import (
    KEven,
    NonzeroSignature,
    NotSkew,
    NotSymmetric,
    NotUnimodular,
    NotUnimodularResult,
    ShapeMismatch,
)
from .exactmat import IntMatrix, determinant, signature, tensor, transpose
from .seifert import KnotDims


@dataclass(frozen=True)
class SpinInput:
    """Algebraic input for frame-spinning the knot ``K`` about ``M``.

    ``v_ranks[a]`` is the free rank of ``H_a(V)`` for ``a = 0..k-1`` and
    ``m_ranks[b]`` that of ``H_b(M)`` for ``b = 0..m``.  ``linking[a]`` is the
    ``r_a x r_{k-1-a}`` linking matrix on ``V`` (``a = 1..k-2``) and
    ``intersection[b]`` the ``ρ_b x ρ_{m-b}`` intersection matrix of ``M``.
    Entries whose shape has a zero dimension may be omitted.
    """

    dims: KnotDims
    v_ranks: Tuple[int, ...]
    m_ranks: Tuple[int, ...]
    linking: Dict[int, IntMatrix] = field(default_factory=dict)
    intersection: Dict[int, IntMatrix] = field(default_factory=dict)

    def __post_init__(self):
        k, m = self.dims.k, self.dims.m
        r, rho = tuple(self.v_ranks), tuple(self.m_ranks)
        object.__setattr__(self, "v_ranks", r)
        object.__setattr__(self, "m_ranks", rho)
        if len(r) != k:
            raise ShapeMismatch(f"v_ranks needs {k} entries (a = 0..k-1), got {len(r)}")
        if len(rho) != m + 1:
            raise ShapeMismatch(f"m_ranks needs {m + 1} entries (b = 0..m), got {len(rho)}")
        if any(x < 0 for x in r + rho):
            raise ShapeMismatch("ranks must be non-negative")
        if r[0] != 1 or r[k - 1] != 0:
            raise ShapeMismatch("v_ranks must have r_0 = 1 and r_{k-1} = 0")
        for a in range(1, k - 1):
            if r[a] != r[k - 1 - a]:
                raise ShapeMismatch(f"duality on V: r_{a} != r_{k - 1 - a}")
        for b in range(m + 1):
            if rho[b] != rho[m - b]:
                raise ShapeMismatch(f"duality on M: rho_{b} != rho_{m - b}")

        linking = {int(a): x for a, x in self.linking.items()}
        for a in linking:
            if not 1 <= a <= k - 2:
                raise ShapeMismatch(f"linking index {a} outside 1..{k - 2}")
        for a in range(1, k - 1):
            linking[a] = _fill(linking.get(a), (r[a], r[k - 1 - a]), f"linking[{a}]")
        intersection = {int(b): x for b, x in self.intersection.items()}
        for b in intersection:
            if not 0 <= b <= m:
                raise ShapeMismatch(f"intersection index {b} outside 0..{m}")
        for b in range(m + 1):
            intersection[b] = _fill(intersection.get(b), (rho[b], rho[m - b]),
                                    f"intersection[{b}]")
        object.__setattr__(self, "linking", linking)
        object.__setattr__(self, "intersection", intersection)

        if m % 2 == 0:
            tau = intersection[m // 2]
            if m % 4 == 0:
                if not tau.is_symmetric():
                    raise NotSymmetric("middle intersection form must be symmetric for m = 0 mod 4")
                sig = signature(tau)
                if sig:
                    raise NonzeroSignature(f"middle intersection form has signature {sig}")
            elif not tau.is_skew():
                raise NotSkew("middle intersection form must be skew for m = 2 mod 4")
            d = determinant(tau)
            if d not in (1, -1):
                raise NotUnimodular(f"middle intersection form has det {d}")

    @property
    def tau(self) -> Optional[IntMatrix]:
        if self.dims.m % 2:
            return None
        return self.intersection[self.dims.m // 2]

    def rho(self, b: int) -> int:
        return self.m_ranks[b] if 0 <= b <= self.dims.m else 0


def _fill(x, shape, name):
    if x is None:
        if shape[0] and shape[1]:
            raise ShapeMismatch(f"{name} missing (expected shape {shape})")
        return IntMatrix.zeros(*shape)
    if x.shape == shape:
        return x
    if 0 in x.shape and 0 in shape:
        return IntMatrix.zeros(*shape)
    raise ShapeMismatch(f"{name} has shape {x.shape}, expected {shape}")


@dataclass(frozen=True)
class Summand:
    a: int
    b: int
    v_rank: int
    m_rank: int
    offset: int

    @property
    def size(self) -> int:
        return self.v_rank * self.m_rank


@dataclass(frozen=True)
class BlockLayout:
    dims: KnotDims
    summands: Tuple[Summand, ...]

    @property
    def total(self) -> int:
        return sum(s.size for s in self.summands)

    def summand(self, a: int) -> Summand:
        return self.summands[a - 1]

    def span(self, a: int) -> range:
        s = self.summand(a)
        return range(s.offset, s.offset + s.size)

    @property
    def middle(self) -> Optional[int]:
        k = self.dims.k
        return (k - 1) // 2 if k % 2 else None

    def describe(self) -> list:
        k = self.dims.k
        out = []
        for s in self.summands:
            c = k - 1 - s.a
            out.append({
                "a": s.a, "b": s.b, "size": s.size, "offset": s.offset,
                "pairs_with": c, "empty": s.size == 0,
            })
        return out


def block_layout(inp: SpinInput) -> BlockLayout:
    k, n = inp.dims.k, inp.dims.n
    out, off = [], 0
    for a in range(1, k - 1):
        s = Summand(a, n - a, inp.v_ranks[a], inp.rho(n - a), off)
        out.append(s)
        off += s.size
    return BlockLayout(inp.dims, tuple(out))


def block_sign(dims: KnotDims, a: int) -> int:
    """Sign of the block pairing ``F_{a,n-a}`` with ``F_{c,n-c}``, ``c = k-1-a``."""
    b = dims.n - a
    c = dims.k - 1 - a
    return -1 if ((dims.m - b) * (dims.k - c)) % 2 else 1


def assemble(inp: SpinInput) -> Tuple[IntMatrix, BlockLayout]:
    layout = block_layout(inp)
    dims = inp.dims
    total = layout.total
    rows = [[0] * total for _ in range(total)]
    for s in layout.summands:
        if not s.size:
            continue
        c = dims.k - 1 - s.a
        block = tensor(inp.linking[s.a], inp.intersection[s.b]).scale(block_sign(dims, s.a))
        col0 = layout.summand(c).offset
        for i in range(block.rows):
            rows[s.offset + i][col0:col0 + block.cols] = block.row(i)
    a_sigma = IntMatrix(rows, shape=(total, total))
    d = determinant(a_sigma + transpose(a_sigma).scale(dims.epsilon))
    if d not in (1, -1):
        raise NotUnimodularResult(
            f"assembled matrix fails the unimodularity condition (det = {d}); "
            "the pairings cannot come from a Seifert surface and a closed manifold")
    return a_sigma, layout


def extract_block(a_sigma: IntMatrix, layout: BlockLayout, a: int, c: int) -> IntMatrix:
    r, s = layout.span(a), layout.span(c)
    return a_sigma.submatrix(r.start, r.stop, s.start, s.stop)


def middle_block(inp: SpinInput) -> IntMatrix:
    """``(-1)^{(mk+m)/4} A ⊗ τ``, computed without going through :func:`assemble`."""
    k, m = inp.dims.k, inp.dims.m
    if k % 2 == 0:
        raise KEven("the middle block exists only for odd k")
    sign = -1 if ((m * k + m) // 4) % 2 else 1
    return tensor(inp.linking[(k - 1) // 2], inp.intersection[m // 2]).scale(sign)
