import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slicecert.cli import main
from slicecert.cobordism import certify_frame_spin
from slicecert.corpus import E8, ONE, TREFOIL, spin_corpus
from slicecert.documents import (
    DocumentEnvelope,
    UncheckedSeifert,
    make,
    parse_document,
    print_document,
)
from slicecert.errors import DocumentSyntaxError, NotUnimodular, SchemaError
from slicecert.exactmat import IntMatrix
from slicecert.seifert import SeifertData

M = IntMatrix
CORPUS = spin_corpus()


def _write(tmp_path, name, kind, payload):
    path = tmp_path / name
    path.write_text(print_document(make(kind, payload)), encoding="utf-8")
    return str(path)


def _raw(tmp_path, name, body):
    path = tmp_path / name
    path.write_text(json.dumps(body), encoding="utf-8")
    return str(path)


# -- documents ---------------------------------------------------------------

def test_parse_minimal_matrix():
    doc = parse_document(b'{"kind": "matrix", "version": "1", "payload": {"matrix": [[0, 1], [-1, 0]]}}')
    assert doc == DocumentEnvelope("matrix", "1", M([[0, 1], [-1, 0]]))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_spin_input_round_trip(name):
    doc = make("spin-input", CORPUS[name])
    text = print_document(doc)
    back = parse_document(text)
    assert back == doc
    assert print_document(back) == text


def test_certificate_round_trip():
    doc = make("certificate", certify_frame_spin(CORPUS["figure8_s2xs2"]))
    assert parse_document(print_document(doc)) == doc


@given(st.lists(st.lists(st.integers(-2 ** 70, 2 ** 70), min_size=3, max_size=3),
                min_size=0, max_size=3))
def test_matrix_round_trip_with_big_integers(rows):
    m = M(rows, shape=(len(rows), 3))
    doc = make("matrix", m)
    text = print_document(doc)
    assert parse_document(text) == doc


def test_big_integers_are_strings():
    text = print_document(make("matrix", M([[2 ** 64, 1]])))
    assert '"18446744073709551616"' in text
    assert parse_document(text).payload[0, 0] == 2 ** 64


def test_syntax_error_position():
    with pytest.raises(DocumentSyntaxError) as e:
        parse_document('{\n  "kind": "matrix",\n  "version" "1"\n}')
    assert (e.value.line, e.value.column) == (3, 13)


@pytest.mark.parametrize("body, field", [
    ({"kind": "tensor", "version": "1", "payload": {}}, "kind"),
    ({"kind": "matrix", "version": "2", "payload": {}}, "version"),
    ({"kind": "matrix", "version": "1", "payload": {"matrix": [[1, 2], [3]]}}, "payload.matrix"),
    ({"kind": "matrix", "version": "1", "payload": {"matrix": [[1, True]]}}, "payload.matrix[0][1]"),
    ({"kind": "matrix", "version": "1", "payload": {}, "extra": 1}, "document"),
    ({"kind": "spin-input", "version": "1",
      "payload": {"dims": {"k": 2, "m": 1, "n": 1}, "v_ranks": [], "m_ranks": []}}, "payload.dims.k"),
])
def test_schema_errors_name_the_field(body, field):
    with pytest.raises(SchemaError) as e:
        parse_document(json.dumps(body))
    assert e.value.field == field


def test_strict_and_lenient_seifert():
    text = print_document(make("seifert", UncheckedSeifert(M([[1]]), 2)))
    with pytest.raises(NotUnimodular):
        parse_document(text)
    assert parse_document(text, strict=False).payload == UncheckedSeifert(M([[1]]), 2)


def test_output_is_deterministic():
    doc = make("spin-input", CORPUS["k5_s1s3_s2s2"])
    assert print_document(doc) == print_document(parse_document(print_document(doc)))
    assert '"k": 5' in print_document(doc)


# -- cli -----------------------------------------------------------------------

def test_certify_then_verify(tmp_path, capsys):
    src = _write(tmp_path, "in.json", "spin-input", CORPUS["trefoil_torus"])
    out = str(tmp_path / "cert.json")
    assert main(["certify", src, "-o", out]) == 0
    assert "target size 4" in capsys.readouterr().out
    assert main(["verify", out]) == 0
    assert "verified" in capsys.readouterr().out


def test_tampered_certificate_fails(tmp_path, capsys):
    cert = certify_frame_spin(CORPUS["trefoil_torus"])
    body = json.loads(print_document(make("certificate", cert)))
    body["payload"]["p"][0][1] += 1
    assert main(["verify", _raw(tmp_path, "t.json", body)]) == 1
    assert "FAILED" in capsys.readouterr().out
    body["payload"]["p"][0][1] -= 1
    body["payload"]["p"][0][0] += 1
    assert main(["verify", _raw(tmp_path, "d.json", body)]) == 1
    assert "det(p) ≠ ±1" in capsys.readouterr().out


def test_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["certify", str(path)]) == 1
    assert "DocumentSyntaxError" in capsys.readouterr().err
    assert main(["certify", str(tmp_path / "missing.json")]) == 1


def test_nonzero_signature_rejected(tmp_path, capsys):
    body = {"kind": "spin-input", "version": "1", "payload": {
        "dims": {"k": 3, "m": 4, "n": 3},
        "v_ranks": [1, 2, 0],
        "m_ranks": [1, 0, 8, 0, 1],
        "linking": {"1": TREFOIL.tolist()},
        "intersection": {"0": ONE.tolist(), "2": E8.tolist(), "4": ONE.tolist()},
    }}
    assert main(["certify", _raw(tmp_path, "e8.json", body)]) == 1
    assert "NonzeroSignature" in capsys.readouterr().err


def test_wrong_kind(tmp_path, capsys):
    path = _write(tmp_path, "m.json", "matrix", TREFOIL)
    assert main(["certify", path]) == 1
    assert main(["verify", path]) == 1


def test_invariants_seifert(tmp_path, capsys):
    assert main(["invariants", _write(tmp_path, "t.json", "seifert", SeifertData(TREFOIL, 1))]) == 0
    assert "valid; det(A-A')=1" in capsys.readouterr().out
    one = _write(tmp_path, "one.json", "seifert", UncheckedSeifert(M([[1]]), 2))
    assert main(["invariants", one]) == 0
    out = capsys.readouterr().out
    assert "residue 1 mod 16" in out
    assert "not unimodular" in out


def test_invariants_spin_input(tmp_path, capsys):
    assert main(["invariants", _write(tmp_path, "k5.json", "spin-input", CORPUS["k5_torus"])]) == 0
    out = capsys.readouterr().out
    assert "summand a=1 b=2: size 1" in out
    assert "summand a=2 b=1: size 4" in out
    assert "nonempty" in out
    assert main(["invariants", _write(tmp_path, "s2.json", "spin-input",
                                      CORPUS["trefoil_sphere2"])]) == 0
    assert "(empty)" in capsys.readouterr().out


def test_spin_and_validate(tmp_path, capsys):
    src = _write(tmp_path, "in.json", "spin-input", CORPUS["trefoil_torus"])
    out = tmp_path / "a.json"
    assert main(["spin", src, "-o", str(out)]) == 0
    doc = parse_document(out.read_bytes())
    assert doc.kind == "seifert" and doc.payload.n == 2
    assert main(["validate", str(out)]) == 0
    assert main(["validate", src]) == 0
    assert "4x4" in capsys.readouterr().out


def test_oracle_command(tmp_path, capsys):
    assert main(["oracle", _write(tmp_path, "h.json", "matrix", IntMatrix.diagonal([1, -1]))]) == 0
    assert "found witness" in capsys.readouterr().out
    assert main(["oracle", _write(tmp_path, "d.json", "matrix", IntMatrix.diagonal([1, 1]))]) == 1
    assert "unknown" in capsys.readouterr().out
    assert main(["oracle", "--max-size", "5", str(tmp_path / "h.json")]) == 1


def test_fresh_process_verifies(tmp_path):
    src = _write(tmp_path, "in.json", "spin-input", CORPUS["e8_knot_torus"])
    cert = str(tmp_path / "cert.json")
    run = [sys.executable, "-m", "slicecert.cli"]
    r = subprocess.run(run + ["certify", src, "-o", cert], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    r = subprocess.run(run + ["verify", cert], capture_output=True, text=True)
    assert r.returncode == 0, r.stdout + r.stderr


def test_corpus_command(tmp_path, capsys):
    out = tmp_path / "corpus"
    assert main(["corpus", str(out)]) == 0
    files = sorted(p.name for p in out.iterdir())
    assert "trefoil_torus.spin-input.json" in files
    assert "e8.seifert.json" in files
    for p in out.iterdir():
        parse_document(p.read_bytes())
