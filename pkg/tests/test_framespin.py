import pytest

from slicecert.corpus import E8, ONE, SYMPLECTIC_2, TREFOIL, spin_corpus
from slicecert.errors import (
    KEven,
    NonzeroSignature,
    NotSkew,
    NotSymmetric,
    NotUnimodular,
    NotUnimodularResult,
    ShapeMismatch,
)
from slicecert.exactmat import IntMatrix, block_sum, determinant, tensor, transpose
from slicecert.framespin import (
    SpinInput,
    assemble,
    block_layout,
    block_sign,
    extract_block,
    middle_block,
)
from slicecert.seifert import KnotDims, SeifertData

M = IntMatrix
CORPUS = spin_corpus()


def _torus_input(linking=TREFOIL, tau=SYMPLECTIC_2):
    return SpinInput(KnotDims(3, 2, 2), (1, linking.rows, 0), (1, tau.rows, 1),
                     {1: linking}, {0: ONE, 1: tau, 2: ONE})


def test_trefoil_torus_by_hand():
    a_sigma, layout = assemble(_torus_input())
    # Λ ⊗ T with Λ = [[-1, 1], [0, -1]] and T = [[0, 1], [-1, 0]], sign +1
    assert a_sigma == M([
        [0, -1, 0, 1],
        [1, 0, -1, 0],
        [0, 0, 0, -1],
        [0, 0, 1, 0],
    ])
    assert layout.total == 4
    assert [s.size for s in layout.summands] == [4]
    assert determinant(a_sigma + transpose(a_sigma)) in (1, -1)  # n = 2


def test_superspin_about_sphere_is_empty():
    inp = SpinInput(KnotDims(3, 2, 2), (1, 2, 0), (1, 0, 1), {1: TREFOIL}, {0: ONE, 2: ONE})
    a_sigma, layout = assemble(inp)
    assert a_sigma.shape == (0, 0)
    assert middle_block(inp).shape == (0, 0)


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        _torus_input(linking=M([[1, 0, 0], [0, 1, 0]]))
    with pytest.raises(ShapeMismatch):
        SpinInput(KnotDims(3, 2, 2), (1, 2, 1), (1, 2, 1), {1: TREFOIL},
                  {0: ONE, 1: SYMPLECTIC_2, 2: ONE})  # r_{k-1} != 0
    with pytest.raises(ShapeMismatch):
        SpinInput(KnotDims(3, 2, 2), (1, 2, 0), (1, 2), {1: TREFOIL}, {})
    with pytest.raises(ShapeMismatch):
        SpinInput(KnotDims(5, 2, 3), (1, 1, 2, 2, 0), (1, 2, 1), {}, {})  # r_1 != r_3
    with pytest.raises(ShapeMismatch):
        SpinInput(KnotDims(3, 2, 2), (1, 2, 0), (1, 2, 1), {1: TREFOIL, 2: ONE},
                  {0: ONE, 1: SYMPLECTIC_2, 2: ONE})  # index outside 1..k-2
    with pytest.raises(ShapeMismatch):
        SpinInput(KnotDims(3, 2, 2), (1, 2, 0), (1, 2, 1), {}, {1: SYMPLECTIC_2})


def test_middle_form_checks():
    with pytest.raises(NotSkew):
        _torus_input(tau=M([[0, 1], [1, 0]]))
    with pytest.raises(NotUnimodular):
        _torus_input(tau=M([[0, 2], [-2, 0]]))
    dims = KnotDims(3, 4, 3)
    ranks = (1, 0, 8, 0, 1)
    with pytest.raises(NonzeroSignature):
        SpinInput(dims, (1, 2, 0), ranks, {1: TREFOIL}, {0: ONE, 2: E8, 4: ONE})
    with pytest.raises(NotSymmetric):
        SpinInput(dims, (1, 2, 0), (1, 0, 2, 0, 1), {1: TREFOIL},
                  {0: ONE, 2: SYMPLECTIC_2, 4: ONE})


def test_unrealizable_pairing_rejected():
    # Λ_1 - Λ_2' = [[0]]: not unimodular
    circle = {0: ONE, 1: ONE}
    inp = SpinInput(KnotDims(4, 1, 2), (1, 1, 1, 0), (1, 1), {1: M([[1]]), 2: M([[1]])}, circle)
    with pytest.raises(NotUnimodularResult):
        assemble(inp)


def test_middle_block_examples():
    inp = CORPUS["trefoil_torus"]
    assert middle_block(inp) == tensor(TREFOIL, SYMPLECTIC_2)
    with pytest.raises(KEven):
        middle_block(CORPUS["artin_spin_rank1"])


def test_block_signs_against_middle_exponent():
    # (m - b)(k - c) at a = c = (k-1)/2 has the parity of (mk + m)/4
    for k in (3, 5, 7, 9):
        for m in range(2, 14, 2):
            dims = KnotDims.from_km(k, m)
            a = (k - 1) // 2
            assert block_sign(dims, a) == (-1) ** ((m * k + m) // 4)


def test_k5_blocks_by_hand():
    inp = CORPUS["k5_torus"]
    a_sigma, layout = assemble(inp)
    # n = 3: summands a = 1, 2, 3 with b = 2, 1, 0; sizes 1, 4, 1
    assert [s.size for s in layout.summands] == [1, 4, 1]
    assert extract_block(a_sigma, layout, 1, 3) == M([[block_sign(inp.dims, 1)]])
    assert extract_block(a_sigma, layout, 3, 1) == M([[0]])
    assert extract_block(a_sigma, layout, 2, 2) == middle_block(inp)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_vanishing_rule_and_blocks(name):
    inp = CORPUS[name]
    a_sigma, layout = assemble(inp)
    k = inp.dims.k
    assert a_sigma.shape == (layout.total, layout.total)
    for s in layout.summands:
        for t in layout.summands:
            block = extract_block(a_sigma, layout, s.a, t.a)
            if s.a + t.a != k - 1:
                assert block.is_zero(), (s.a, t.a)
            else:
                assert block.rows == block.cols
                sign = block_sign(inp.dims, s.a)
                assert block == tensor(inp.linking[s.a], inp.intersection[s.b]).scale(sign)
    for s in layout.summands:
        partner = layout.summand(k - 1 - s.a)
        assert s.size == partner.size
        assert (s.size == 0) == (partner.size == 0)
    if k % 2:
        mid = layout.middle
        assert extract_block(a_sigma, layout, mid, mid) == middle_block(inp)
    SeifertData(a_sigma, inp.dims.n)


def test_layout_describe():
    rows = block_layout(CORPUS["k5_torus"]).describe()
    assert [(r["a"], r["b"], r["pairs_with"]) for r in rows] == [(1, 2, 3), (2, 1, 2), (3, 0, 1)]
    assert [r["offset"] for r in rows] == [0, 1, 5]


def test_direct_sum_of_linking_data_assembles_to_block_sum():
    # doubling the knot doubles the middle block
    double = block_sum(TREFOIL, -TREFOIL)
    a_sigma, _ = assemble(_torus_input(linking=double))
    assert a_sigma == block_sum(tensor(TREFOIL, SYMPLECTIC_2), tensor(-TREFOIL, SYMPLECTIC_2))
