"""Command-line interface.

Exit codes: 0 success, 1 invalid input or failed verification, 2 internal
error (a produced certificate that does not verify).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from .certificate import first_violation
from .cobordism import certify_frame_spin
from .corpus import seifert_corpus, spin_corpus
from .documents import make, parse_document, print_document
from .errors import InputError, InternalError
from .exactmat import block_sum, determinant, inertia, transpose
from .framespin import assemble
from .oracle import SearchBudget, search_null_cobordant
from .seifert import SeifertData, epsilon_symmetrization, levine_signature_residue

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


def _load(path, strict=True):
    with open(path, "rb") as fh:
        return parse_document(fh.read(), strict=strict)


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _expect(doc, *kinds):
    if doc.kind not in kinds:
        raise InputError(f"expected a {' or '.join(kinds)} document, got {doc.kind!r}")


def cmd_validate(args):
    doc = _load(args.file)
    if doc.kind == "spin-input":
        a_sigma, _ = assemble(doc.payload)
        print(f"valid spin-input; assembled Seifert matrix is {a_sigma.rows}x{a_sigma.rows}")
    else:
        print(f"valid {doc.kind} document")
    return EXIT_OK


def cmd_spin(args):
    doc = _load(args.file)
    _expect(doc, "spin-input")
    a_sigma, _ = assemble(doc.payload)
    n = doc.payload.dims.n
    _emit(print_document(make("seifert", SeifertData(a_sigma, n))), args.output)
    return EXIT_OK


def cmd_certify(args):
    doc = _load(args.input)
    _expect(doc, "spin-input")
    cert = certify_frame_spin(doc.payload, tamper_evident=args.tamper_evident)
    _emit(print_document(make("certificate", cert)), args.output)
    s = cert.summary()
    out = sys.stdout if args.output else sys.stderr
    print(f"target size {s['target_size']}, stabilizer rank {s['stabilizer_rank']}, "
          f"witness bits {s['witness_bits']}", file=out)
    return EXIT_OK


def cmd_verify(args):
    doc = _load(args.cert)
    _expect(doc, "certificate")
    why = first_violation(doc.payload)
    if why is not None:
        print(f"FAILED: {why}")
        return EXIT_INPUT
    print("verified: target is null-cobordant")
    return EXIT_OK


def _symmetric_report(x):
    pos, neg, zero = inertia(x)
    return f"inertia (+{pos}, -{neg}, 0x{zero}), signature {pos - neg}"


def cmd_invariants(args):
    doc = _load(args.file, strict=False)
    if doc.kind == "seifert":
        s = doc.payload
        sym = epsilon_symmetrization(s.a, s.n)
        name = "A+A'" if s.epsilon == 1 else "A-A'"
        d = determinant(sym)
        status = "valid" if d in (1, -1) else "not unimodular"
        print(f"{status}; det({name})={d}")
        print(f"n = {s.n}, epsilon = {s.epsilon:+d}, size {s.size}")
        if s.epsilon == 1:
            print(f"A+A': {_symmetric_report(sym)}")
            print(f"residue {levine_signature_residue(s.a, s.n)} mod 16")
    elif doc.kind == "spin-input":
        inp = doc.payload
        d = inp.dims
        print(f"k = {d.k}, m = {d.m}, n = {d.n}, epsilon = {d.epsilon:+d}")
        tau = inp.tau
        if tau is not None:
            kind = "symmetric" if d.m % 4 == 0 else "skew"
            line = f"middle intersection form: {kind}, rank {tau.rows}, det {determinant(tau)}"
            if d.m % 4 == 0:
                line += f", {_symmetric_report(tau)}"
            print(line)
        a_sigma, layout = assemble(inp)
        print(f"assembled matrix {a_sigma.rows}x{a_sigma.rows}, "
              f"det(A + eps A') = {determinant(a_sigma + transpose(a_sigma).scale(d.epsilon))}")
        for row in layout.describe():
            flag = "empty" if row["empty"] else "nonempty"
            print(f"  summand a={row['a']} b={row['b']}: size {row['size']} at offset "
                  f"{row['offset']}, block L pairs with c={row['pairs_with']} ({flag})")
    elif doc.kind == "matrix":
        x = doc.payload
        print(f"shape {x.rows}x{x.cols}")
        if x.is_square:
            print(f"det {determinant(x)}")
            if x.is_symmetric():
                print(_symmetric_report(x))
    else:
        raise InputError("invariants needs a seifert, spin-input or matrix document")
    return EXIT_OK


def cmd_oracle(args):
    doc = _load(args.file)
    if doc.kind == "certificate":
        x = block_sum(doc.payload.target, doc.payload.stabilizer)
    elif doc.kind == "seifert":
        x = doc.payload.a
    elif doc.kind == "matrix":
        x = doc.payload
    else:
        raise InputError("oracle needs a matrix, seifert or certificate document")
    try:
        budget = SearchBudget(args.max_entry, args.max_size)
    except ValueError as e:
        raise InputError(str(e)) from None
    p = search_null_cobordant(x, budget)
    if p is None:
        print(f"unknown: no witness with entries up to {budget.max_entry}")
        return EXIT_INPUT
    print("found witness P:")
    for row in p.tolist():
        print("  " + " ".join(f"{v:3d}" for v in row))
    return EXIT_OK


def cmd_corpus(args):
    os.makedirs(args.directory, exist_ok=True)
    docs = [(name, "spin-input", inp) for name, inp in spin_corpus().items()]
    docs += [(name, "seifert", s) for name, s in seifert_corpus().items()]
    for name, kind, payload in sorted(docs):
        path = os.path.join(args.directory, f"{name}.{kind}.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(print_document(make(kind, payload)))
        print(path)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="slicecert",
        description="Assemble frame-spun Seifert matrices and certify them null-cobordant.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and check a document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("spin", help="emit the assembled Seifert matrix of a spin input")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_spin)

    p = sub.add_parser("certify", help="write a slice certificate for a spin input")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--tamper-evident", action="store_true",
                   help="larger witness in which any single-entry change of p is detected")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="check a certificate with exact arithmetic")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariants", help="report unimodularity, signatures and layout")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("oracle", help="brute-force search for a null-cobordance witness")
    p.add_argument("file")
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--max-size", type=int, default=4)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("corpus", help="write the built-in reference inputs as documents")
    p.add_argument("directory")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except InputError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
