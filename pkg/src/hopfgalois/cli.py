"""Command-line entry point.

Exit codes: 0 when everything checked holds, 1 when a violation is found,
2 when the input is malformed or fails the structure axioms.
"""
from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

from . import __version__
from .algebroid import validate_bialgebroid
from .casestudies import laurent_case_study, sl2_case_study
from .errors import (
    AxiomError,
    CapExceeded,
    HopfGaloisError,
    InvalidIdealCoideal,
    InvalidSubring,
    NotLeftHopf,
    ParseError,
)
from .exactla import Field
from .galois import check_connection, enumerate_lattices, phi, psi, verify_bijection
from .hopf import check_translation_map, hopf_data
from .io import dumps, load_bialgebroid, load_subspaces

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _field(text: str | None) -> Field | None:
    if text is None:
        return None
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _input_path(args) -> str:
    path = getattr(args, "file", None) or getattr(args, "input", None)
    if not path:
        raise InputError("an input file is required")
    return path


class _Hashes:
    def __init__(self):
        self.items = []

    def add(self, label, digest):
        self.items.append((label, digest))

    def combined(self) -> str:
        h = hashlib.sha256()
        for label, digest in self.items:
            h.update(f"{label}:{digest}\n".encode())
        return h.hexdigest()


def _load(args, hashes: _Hashes, check: bool = True):
    field = _field(args.field)
    if getattr(args, "p", None) is not None:
        pf = _field(f"gf:{args.p}")
        if field is not None and field != pf:
            raise InputError("--field and --p disagree")
        field = pf
    path = _input_path(args)
    b, digest = load_bialgebroid(path, field, check=check)
    hashes.add("algebroid", digest)
    return b


def _subspaces(path, b, hashes: _Hashes, label: str) -> list:
    spaces, digest = load_subspaces(path, b.field, b.dim)
    hashes.add(label, digest)
    return spaces


def cmd_validate(args, hashes):
    b = _load(args, hashes, check=False)
    rep = validate_bialgebroid(b)
    return (EXIT_OK if rep.ok else EXIT_VIOLATION), {"validation": rep.to_json()}


def _single_subspace(args, b, hashes):
    if not args.subspace:
        raise InputError("--subspace is required")
    spaces = _subspaces(args.subspace, b, hashes, "subspace")
    if len(spaces) != 1:
        raise InputError("--subspace must hold exactly one subspace")
    return spaces[0]


def cmd_phi(args, hashes):
    b = _load(args, hashes)
    B = _single_subspace(args, b, hashes)
    I = phi(b, B)
    return EXIT_OK, {"input": B.to_json(), "phi": I.to_json()}


def cmd_psi(args, hashes):
    b = _load(args, hashes)
    I = _single_subspace(args, b, hashes)
    B = psi(b, I)
    return EXIT_OK, {"input": I.to_json(), "psi": B.to_json()}


def cmd_hopf_check(args, hashes):
    b = _load(args, hashes)
    try:
        h = hopf_data(b)
    except NotLeftHopf as exc:
        return EXIT_VIOLATION, {"leftHopf": False, "reason": str(exc)}
    tm = check_translation_map(h)
    ok = all(v for k, v in tm.items() if k != "witness")
    return (EXIT_OK if ok else EXIT_VIOLATION), {
        "leftHopf": True,
        "tensorDims": {"overA": h.tensor_A.dim, "overAop": h.tensor_Aop.dim},
        "betaInverseTwoSided": True,
        "translationMap": {k: (list(v) if isinstance(v, tuple) else v) for k, v in tm.items()},
    }


def _lists(args, b, hashes):
    if getattr(args, "enumerate", False):
        try:
            ideals, subrings = enumerate_lattices(b, args.cap)
        except (CapExceeded, ValueError) as exc:
            raise InputError(str(exc)) from exc
        return ideals, subrings, True
    if not (args.ideals or args.subrings):
        raise InputError("give --ideals/--subrings files or --enumerate")
    ideals = _subspaces(args.ideals, b, hashes, "ideals") if args.ideals else []
    subrings = _subspaces(args.subrings, b, hashes, "subrings") if args.subrings else []
    return ideals, subrings, False


def cmd_connection(args, hashes):
    b = _load(args, hashes)
    ideals, subrings, enumerated = _lists(args, b, hashes)
    rep = check_connection(b, None, ideals, subrings)
    return (EXIT_OK if rep.ok else EXIT_VIOLATION), {"enumerated": enumerated, "connection": rep.to_json()}


def cmd_bijection(args, hashes):
    b = _load(args, hashes)
    ideals, subrings, enumerated = _lists(args, b, hashes)
    try:
        h = hopf_data(b)
    except NotLeftHopf as exc:
        return EXIT_VIOLATION, {"leftHopf": False, "reason": str(exc)}
    rep = verify_bijection(b, h, ideals, subrings)
    return (EXIT_OK if rep.ok else EXIT_VIOLATION), {"enumerated": enumerated, "bijection": rep.to_json()}


def cmd_enumerate_verify(args, hashes):
    args.enumerate = True
    b = _load(args, hashes)
    ideals, subrings, _ = _lists(args, b, hashes)
    conn = check_connection(b, None, ideals, subrings)
    try:
        h = hopf_data(b)
    except NotLeftHopf as exc:
        return EXIT_VIOLATION, {"connection": conn.to_json(), "leftHopf": False, "reason": str(exc)}
    bij = verify_bijection(b, h, ideals, subrings)
    ok = conn.ok and bij.ok
    return (EXIT_OK if ok else EXIT_VIOLATION), {"connection": conn.to_json(), "bijection": bij.to_json()}


def cmd_example(args, hashes):
    field = _field(args.field) or Field()
    if args.name == "sl2":
        if args.degree is None or args.degree < 0:
            raise InputError("example sl2 needs --degree >= 0")
        rep = sl2_case_study(args.degree, field)
        hashes.add("example", hashlib.sha256(f"sl2:{args.degree}".encode()).hexdigest())
    else:
        if args.window is None or args.window < 1:
            raise InputError("example laurent needs --window >= 1")
        rep = laurent_case_study(args.window, field)
        hashes.add("example", hashlib.sha256(f"laurent:{args.window}".encode()).hexdigest())
    return (EXIT_OK if rep["verified"] else EXIT_VIOLATION), {"example": rep}


COMMANDS = {
    "validate": cmd_validate,
    "phi": cmd_phi,
    "psi": cmd_psi,
    "hopf-check": cmd_hopf_check,
    "connection": cmd_connection,
    "bijection": cmd_bijection,
    "enumerate-verify": cmd_enumerate_verify,
    "example": cmd_example,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override the field: q or gf:<prime>")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="hopfgalois", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", nargs="?")
        p.add_argument("--input")
        return p

    with_file("validate", "check the bialgebroid axioms")
    for name, help_ in (("phi", "compute H B^+"), ("psi", "compute coinvariants")):
        p = with_file(name, help_)
        p.add_argument("--subspace")
    with_file("hopf-check", "invert the canonical map and check the translation map")
    for name, help_ in (("connection", "check the Galois connection laws"),
                        ("bijection", "filter by the hypotheses and check the bijection")):
        p = with_file(name, help_)
        p.add_argument("--ideals")
        p.add_argument("--subrings")
        p.add_argument("--enumerate", action="store_true")
        p.add_argument("--p", type=int)
        p.add_argument("--cap", type=int, default=10 ** 7)
    p = with_file("enumerate-verify", "enumerate over GF(p) and run every check")
    p.add_argument("--p", type=int)
    p.add_argument("--cap", type=int, default=10 ** 7)
    p.set_defaults(ideals=None, subrings=None)
    p = sub.add_parser("example", parents=[common], help="run a presented-algebra example")
    p.add_argument("name", choices=["sl2", "laurent"])
    p.add_argument("--degree", type=int)
    p.add_argument("--window", type=int)
    return parser


def run(argv=None) -> tuple[int, str, str | None]:
    """Execute a command; returns the exit code, the report text and the --out path."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), "", None
    hashes = _Hashes()
    try:
        code, body = COMMANDS[args.command](args, hashes)
    except (InputError, ParseError, AxiomError, InvalidSubring, InvalidIdealCoideal) as exc:
        code, body = EXIT_INPUT, {"error": type(exc).__name__, "message": str(exc)}
        report = getattr(exc, "report", None)
        if report is not None:
            body["validation"] = report.to_json()
    except HopfGaloisError as exc:
        code, body = EXIT_VIOLATION, {"error": type(exc).__name__, "message": str(exc)}
    body.update({"command": args.command, "exitCode": code, "inputHash": hashes.combined()})
    return code, dumps(body), args.out


def main(argv=None) -> int:
    code, text, out = run(argv)
    if text:
        if out:
            Path(out).write_text(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
