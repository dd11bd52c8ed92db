import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slicecert.corpus import E8, E8_SEIFERT, FIGURE_EIGHT, SIMPLE_3KNOT, TREFOIL, seifert_corpus
from slicecert.errors import InputError, NotSquare, NotUnimodular, WrongParity
from slicecert.exactmat import IntMatrix, block_sum, congruence, transpose
from slicecert.seifert import (
    KnotDims,
    SeifertData,
    epsilon_symmetrization,
    even_dimensional_slice,
    levine_signature_residue,
    validate_seifert,
)

from conftest import random_unimodular

M = IntMatrix
EMPTY = IntMatrix.zeros(0)


def test_validate_examples():
    s = validate_seifert(TREFOIL, 1)
    assert epsilon_symmetrization(s) == M([[0, 1], [-1, 0]])
    assert validate_seifert(EMPTY, 1).size == 0
    assert validate_seifert(EMPTY, 2).size == 0
    with pytest.raises(NotUnimodular):
        validate_seifert(M([[0]]), 2)
    with pytest.raises(NotSquare):
        validate_seifert(M([[1, 0]]), 1)


def test_trefoil_is_not_a_valid_even_dimensional_seifert_matrix():
    # A + A' = [[-2, 1], [1, -2]] has determinant 3
    assert TREFOIL + transpose(TREFOIL) == M([[-2, 1], [1, -2]])
    with pytest.raises(NotUnimodular, match="det"):
        validate_seifert(TREFOIL, 2)


def test_symmetrization_examples():
    assert epsilon_symmetrization(SeifertData(EMPTY, 3)) == EMPTY
    # [[1]] is not itself valid for even n, so pass it bare
    assert epsilon_symmetrization(M([[1]]), n=2) == M([[2]])
    with pytest.raises(NotUnimodular):
        SeifertData(M([[1]]), 2)
    assert epsilon_symmetrization(SeifertData(FIGURE_EIGHT, 1)) == M([[0, 1], [-1, 0]])
    assert epsilon_symmetrization(SeifertData(E8_SEIFERT, 2)) == E8


def test_residue_examples():
    assert levine_signature_residue(SeifertData(EMPTY, 2)) == 0
    assert levine_signature_residue(M([[1]]), n=2) == 1
    assert levine_signature_residue(SeifertData(E8_SEIFERT, 2)) == 8
    pair = block_sum(E8_SEIFERT, -E8_SEIFERT)
    assert levine_signature_residue(SeifertData(pair, 2)) == 0
    with pytest.raises(WrongParity):
        levine_signature_residue(SeifertData(TREFOIL, 1))


def test_residue_of_two_copies_of_e8():
    twice = block_sum(E8_SEIFERT, E8_SEIFERT)
    assert levine_signature_residue(SeifertData(twice, 2)) == 0
    negative = SeifertData(-E8_SEIFERT, 4)
    assert levine_signature_residue(negative) == 8  # -8 mod 16


def test_knot_dims():
    d = KnotDims(3, 2, 2)
    assert d.epsilon == 1
    assert KnotDims.from_km(5, 4) == KnotDims(5, 4, 4)
    for bad in ((2, 1, 1), (3, 0, 1), (3, 2, 3)):
        with pytest.raises(InputError):
            KnotDims(*bad)
    with pytest.raises(InputError):
        KnotDims.from_km(3, 1)


def test_kervaire_dispatch():
    assert even_dimensional_slice(4).slice_by_kervaire
    assert even_dimensional_slice(2).message == "slice by Kervaire (even-dimensional knots are all slice)"
    r = even_dimensional_slice(5)
    assert not r.slice_by_kervaire
    assert r.message == "use matrix machinery"


def test_corpus_entries_are_valid():
    corpus = seifert_corpus()
    assert corpus
    for name, s in corpus.items():
        x = epsilon_symmetrization(s)
        assert transpose(x) == x.scale(s.epsilon), name


def _seifert_inputs():
    return st.sampled_from([
        (TREFOIL, 1), (FIGURE_EIGHT, 1), (SIMPLE_3KNOT, 1), (SIMPLE_3KNOT, 2),
        (E8_SEIFERT, 2), (-E8_SEIFERT, 2), (EMPTY, 1), (EMPTY, 2),
    ])


@given(_seifert_inputs(), _seifert_inputs())
def test_block_sum_preserves_validity(x, y):
    (a, n), (b, m) = x, y
    if (n - m) % 2:
        return
    validate_seifert(block_sum(a, b), n)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([E8_SEIFERT, -E8_SEIFERT, SIMPLE_3KNOT, M([[1]])]), st.integers(0, 2 ** 32))
def test_residue_is_congruence_invariant(a, seed):
    p = random_unimodular(random.Random(seed), a.rows)
    moved = congruence(p, a)
    assert levine_signature_residue(moved, n=2) == levine_signature_residue(a, n=2)


@given(_seifert_inputs())
def test_symmetrization_has_epsilon_symmetry(x):
    s = SeifertData(*x)
    y = epsilon_symmetrization(s)
    assert transpose(y) == y.scale(s.epsilon)
