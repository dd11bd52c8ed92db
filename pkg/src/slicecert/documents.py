"""JSON document envelope for matrices, Seifert data, spin inputs and certificates.

Every file looks like::

    {"kind": "spin-input", "version": "1", "payload": {...}}

Matrices are lists of rows.  Integers that do not fit in 64 bits are written
as decimal strings; both forms are accepted on input.  Output is canonical
(sorted keys, fixed indentation), so printing is deterministic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any

from .certificate import SliceCertificate
from .errors import DocumentSyntaxError, SchemaError
from .exactmat import IntMatrix
from .framespin import SpinInput
from .seifert import KnotDims, SeifertData

VERSION = "1"
KINDS = ("matrix", "seifert", "spin-input", "certificate")

_INT64 = 2 ** 63
_DECIMAL = re.compile(r"-?[0-9]+\Z")
_INNER_LIST = re.compile(r"\[\s*([^\[\]{}]+?)\s*\]")


@dataclass(frozen=True)
class DocumentEnvelope:
    kind: str
    version: str
    payload: Any


@dataclass(frozen=True)
class UncheckedSeifert:
    """Seifert payload read without the unimodularity check (for reports)."""

    a: IntMatrix
    n: int

    @property
    def epsilon(self) -> int:
        return (-1) ** self.n

    @property
    def size(self) -> int:
        return self.a.rows


# -- integers and matrices -------------------------------------------------

def _int(value, field: str) -> int:
    if isinstance(value, bool):
        raise SchemaError(field, "expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _DECIMAL.match(value):
        return int(value)
    raise SchemaError(field, f"expected an integer, got {value!r}")


def _dump_int(x: int):
    return x if -_INT64 <= x < _INT64 else str(x)


def _matrix(value, field: str) -> IntMatrix:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise SchemaError(field, "expected a list of rows")
    if len({len(r) for r in value}) > 1:
        raise SchemaError(field, "rows have different lengths")
    rows = [[_int(x, f"{field}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(value)]
    cols = len(rows[0]) if rows else 0
    return IntMatrix(rows, shape=(len(rows), cols))


def _dump_matrix(m: IntMatrix) -> list:
    return [[_dump_int(x) for x in row] for row in m.tolist()]


def _require(obj, key: str, field: str):
    if not isinstance(obj, dict):
        raise SchemaError(field, "expected an object")
    if key not in obj:
        raise SchemaError(f"{field}.{key}", "missing")
    return obj[key]


def _index_map(value, field: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(field, "expected an object mapping indices to matrices")
    out = {}
    for key, mat in value.items():
        if not _DECIMAL.match(str(key)):
            raise SchemaError(field, f"index {key!r} is not an integer")
        out[int(key)] = _matrix(mat, f"{field}.{key}")
    return out


# -- payloads --------------------------------------------------------------

def _load_payload(kind: str, p, strict: bool = True):
    if kind == "matrix":
        m = _matrix(_require(p, "matrix", "payload"), "payload.matrix")
        if "shape" in p:
            shape = p["shape"]
            if not isinstance(shape, list) or len(shape) != 2:
                raise SchemaError("payload.shape", "expected [rows, cols]")
            shape = (_int(shape[0], "payload.shape[0]"), _int(shape[1], "payload.shape[1]"))
            if m.rows == 0 and shape[0] == 0 and shape[1] >= 0:
                m = IntMatrix.zeros(0, shape[1])
            elif shape != m.shape:
                raise SchemaError("payload.shape", f"says {list(shape)}, matrix is {list(m.shape)}")
        return m
    if kind == "seifert":
        a = _matrix(_require(p, "matrix", "payload"), "payload.matrix")
        n = _int(_require(p, "n", "payload"), "payload.n")
        if n < 1:
            raise SchemaError("payload.n", "must be >= 1")
        if not a.is_square:
            raise SchemaError("payload.matrix", "must be square")
        return SeifertData(a, n) if strict else UncheckedSeifert(a, n)
    if kind == "spin-input":
        dims = _require(p, "dims", "payload")
        k = _int(_require(dims, "k", "payload.dims"), "payload.dims.k")
        m = _int(_require(dims, "m", "payload.dims"), "payload.dims.m")
        n = _int(_require(dims, "n", "payload.dims"), "payload.dims.n")
        if k < 3:
            raise SchemaError("payload.dims.k", f"k >= 3 required, got {k}")
        if m < 1:
            raise SchemaError("payload.dims.m", f"m >= 1 required, got {m}")
        if m + k != 2 * n + 1:
            raise SchemaError("payload.dims", f"m + k = 2n + 1 violated ({m} + {k} vs n = {n})")
        ranks = {}
        for key in ("v_ranks", "m_ranks"):
            value = _require(p, key, "payload")
            if not isinstance(value, list):
                raise SchemaError(f"payload.{key}", "expected a list")
            ranks[key] = tuple(_int(x, f"payload.{key}[{i}]") for i, x in enumerate(value))
        linking = _index_map(p.get("linking", {}), "payload.linking")
        intersection = _index_map(p.get("intersection", {}), "payload.intersection")
        return SpinInput(KnotDims(k, m, n), ranks["v_ranks"], ranks["m_ranks"],
                         linking, intersection)
    if kind == "certificate":
        mats = {key: _matrix(_require(p, key, "payload"), f"payload.{key}")
                for key in ("target", "stabilizer", "stabilizer_witness", "p")}
        half = _int(_require(p, "half", "payload"), "payload.half")
        return SliceCertificate(mats["target"], mats["stabilizer"],
                                mats["stabilizer_witness"], mats["p"], half)
    raise SchemaError("kind", f"unknown kind {kind!r}")


def _dump_payload(kind: str, obj) -> dict:
    if kind == "matrix":
        # the shape keeps 0 x c matrices distinct from 0 x 0
        return {"matrix": _dump_matrix(obj), "shape": list(obj.shape)}
    if kind == "seifert":
        return {"matrix": _dump_matrix(obj.a), "n": obj.n}
    if kind == "spin-input":
        d = obj.dims
        return {
            "dims": {"k": d.k, "m": d.m, "n": d.n},
            "v_ranks": list(obj.v_ranks),
            "m_ranks": list(obj.m_ranks),
            "linking": {str(a): _dump_matrix(x) for a, x in sorted(obj.linking.items())},
            "intersection": {str(b): _dump_matrix(x)
                             for b, x in sorted(obj.intersection.items())},
        }
    if kind == "certificate":
        return {
            "target": _dump_matrix(obj.target),
            "stabilizer": _dump_matrix(obj.stabilizer),
            "stabilizer_witness": _dump_matrix(obj.stabilizer_witness),
            "p": _dump_matrix(obj.p),
            "half": obj.half,
        }
    raise SchemaError("kind", f"unknown kind {kind!r}")


# -- envelope --------------------------------------------------------------

def parse_document(text, strict: bool = True) -> DocumentEnvelope:
    """Parse and validate a document.

    With ``strict=False`` a seifert payload is returned as
    :class:`UncheckedSeifert` even when ``A + εA'`` is not unimodular.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise DocumentSyntaxError(f"invalid UTF-8: {e.reason}", 1, e.start + 1) from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, e.lineno, e.colno) from None
    if not isinstance(raw, dict):
        raise SchemaError("document", "expected a JSON object")
    kind = _require(raw, "kind", "document")
    if kind not in KINDS:
        raise SchemaError("kind", f"unknown kind {kind!r}")
    version = _require(raw, "version", "document")
    if version != VERSION:
        raise SchemaError("version", f"unsupported version {version!r}")
    extra = set(raw) - {"kind", "version", "payload"}
    if extra:
        raise SchemaError("document", f"unexpected fields {sorted(extra)}")
    payload = _load_payload(kind, _require(raw, "payload", "document"), strict)
    return DocumentEnvelope(kind, version, payload)


def print_document(doc: DocumentEnvelope) -> str:
    body = {"kind": doc.kind, "version": doc.version,
            "payload": _dump_payload(doc.kind, doc.payload)}
    text = json.dumps(body, indent=2, sort_keys=True)
    # keep each matrix row on one line
    text = _INNER_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]",
                           text)
    return text + "\n"


def make(kind: str, payload) -> DocumentEnvelope:
    return DocumentEnvelope(kind, VERSION, payload)
