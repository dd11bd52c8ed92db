"""Reference Seifert matrices, intersection forms and spin inputs.

These are classical textbook matrices (trefoil, figure-eight, the E8 form)
plus hand-built frame-spin inputs covering k in {3, 4, 5} and m in
{1, 2, 4}, with and without a middle block.  Every entry is checked when
the corpus is loaded.
"""

from __future__ import annotations

from functools import lru_cache

from .exactmat import IntMatrix, block_sum, congruence, transpose
from .framespin import SpinInput
from .seifert import KnotDims, SeifertData

M = IntMatrix

TREFOIL = M([[-1, 1], [0, -1]])
FIGURE_EIGHT = M([[-1, 1], [0, 1]])
# a 3-knot Seifert matrix with A + A' = [[2, 1], [1, 0]]
SIMPLE_3KNOT = M([[1, 1], [0, 0]])

E8 = M([
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
])
# lower triangle of E8 with ones on the diagonal, so A + A' = E8
E8_SEIFERT = M([[E8[i, j] if i > j else int(i == j) for j in range(8)] for i in range(8)])

HYPERBOLIC = M([[0, 1], [1, 0]])
SYMPLECTIC_2 = M([[0, 1], [-1, 0]])
ONE = M([[1]])

_L4 = M([[1, 0, 0, 0], [1, 1, 0, 0], [0, -1, 1, 0], [2, 0, 1, 1]])
_R4 = M([[1, 1, 0, -1], [0, 1, 2, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
UNIMODULAR_4 = _L4 @ _R4

GENUS2_FORM = congruence(UNIMODULAR_4, block_sum(SYMPLECTIC_2, SYMPLECTIC_2))
ODD_NEUTRAL_4 = congruence(UNIMODULAR_4, IntMatrix.diagonal([1, 1, -1, -1]))

SEIFERT = {
    "trefoil": (TREFOIL, 1),
    "figure_eight": (FIGURE_EIGHT, 1),
    "simple_3knot": (SIMPLE_3KNOT, 2),
    "e8": (E8_SEIFERT, 2),
    "e8_minus_e8": (block_sum(E8_SEIFERT, -E8_SEIFERT), 2),
    "trefoil_minus_trefoil": (block_sum(TREFOIL, -TREFOIL), 1),
}


def _spin(k, m, v_ranks, m_ranks, linking, intersection):
    return SpinInput(KnotDims.from_km(k, m), tuple(v_ranks), tuple(m_ranks),
                     linking, intersection)


def _surface(form):
    # closed orientable surface with middle form `form`
    return (1, form.rows, 1), {0: ONE, 1: form, 2: ONE}


def _four_manifold(form, b1=0):
    # H_1 and H_3 of rank b1 paired by ±identity
    eye = IntMatrix.identity(b1)
    return (1, b1, form.rows, b1, 1), {0: ONE, 1: eye, 2: form, 3: -transpose(eye), 4: ONE}


@lru_cache(maxsize=None)
def spin_corpus() -> dict:
    torus = _surface(SYMPLECTIC_2)
    sphere2 = _surface(IntMatrix.zeros(0))
    genus2 = _surface(GENUS2_FORM)
    s2xs2 = _four_manifold(HYPERBOLIC)
    s4 = _four_manifold(IntMatrix.zeros(0))
    cp2_bar = _four_manifold(IntMatrix.diagonal([1, -1]))
    neutral4 = _four_manifold(ODD_NEUTRAL_4)
    s1s3_s2s2 = _four_manifold(HYPERBOLIC, b1=1)
    s1s3 = _four_manifold(IntMatrix.zeros(0), b1=1)

    c = {}
    # k = 3: the base knot is classical and Λ_1 is its Seifert matrix
    c["trefoil_torus"] = _spin(3, 2, (1, 2, 0), torus[0], {1: TREFOIL}, torus[1])
    c["trefoil_sphere2"] = _spin(3, 2, (1, 2, 0), sphere2[0], {1: TREFOIL}, sphere2[1])
    c["figure8_genus2"] = _spin(3, 2, (1, 2, 0), genus2[0], {1: FIGURE_EIGHT}, genus2[1])
    c["figure8_s2xs2"] = _spin(3, 4, (1, 2, 0), s2xs2[0], {1: FIGURE_EIGHT}, s2xs2[1])
    c["trefoil_cp2_bar"] = _spin(3, 4, (1, 2, 0), cp2_bar[0], {1: TREFOIL}, cp2_bar[1])
    c["trefoil_neutral4"] = _spin(3, 4, (1, 2, 0), neutral4[0], {1: TREFOIL}, neutral4[1])
    c["trefoil_s4"] = _spin(3, 4, (1, 2, 0), s4[0], {1: TREFOIL}, s4[1])

    # k = 4, m = 1: Artin spins of 2-knots (Λ_1 - Λ_2' must be unimodular)
    circle = ((1, 1), {0: ONE, 1: ONE})
    c["artin_spin_rank1"] = _spin(4, 1, (1, 1, 1, 0), circle[0],
                                  {1: M([[2]]), 2: M([[1]])}, circle[1])
    c["artin_spin_rank2"] = _spin(4, 1, (1, 2, 2, 0), circle[0],
                                  {1: M([[2, 1], [0, 3]]), 2: M([[1, 0], [1, 2]])}, circle[1])
    c["artin_spin_unknot"] = _spin(4, 1, (1, 0, 0, 0), circle[0], {}, circle[1])

    # k = 5: 3-knots in S^5, three summands a = 1, 2, 3
    v5 = (1, 1, 2, 1, 0)
    lk5 = {1: ONE, 2: SIMPLE_3KNOT, 3: M([[0]])}
    c["k5_torus"] = _spin(5, 2, v5, torus[0], lk5, torus[1])
    c["k5_sphere2"] = _spin(5, 2, v5, sphere2[0], lk5, sphere2[1])
    c["k5_s1s3_s2s2"] = _spin(5, 4, v5, s1s3_s2s2[0], lk5, s1s3_s2s2[1])
    c["k5_s1s3"] = _spin(5, 4, v5, s1s3[0], lk5, s1s3[1])
    c["k5_s4"] = _spin(5, 4, v5, s4[0], lk5, s4[1])
    c["e8_knot_torus"] = _spin(5, 2, (1, 1, 8, 1, 0), torus[0],
                               {1: ONE, 2: E8_SEIFERT, 3: M([[0]])}, torus[1])
    return c


def seifert_corpus() -> dict:
    return {name: SeifertData(a, n) for name, (a, n) in SEIFERT.items()}
