"""Command-line front end: a thin client over the library functions.

Exit codes: 0 success/complete, 1 invalid certificate, 2 incomplete coverage,
3 invalid arguments, 4 guard exceeded.  Output is JSON with sorted keys and LF
newlines, on stdout unless --out is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO

from pydantic import ValidationError

from .arithmetic import bounded_bezout, conflict_values
from .coverage import (
    crown_em_cover,
    crown_labeling_for_valence,
    crown_sem_cover,
    crown_valence_lower_bound,
    cycle_valence_lower_bound,
    em_interval,
    sem_interval,
)
from .exceptions import (
    EmptyInterval,
    GuardExceeded,
    InvalidCertificate,
    InvalidInput,
)
from .oracle import brute_em_spectrum, brute_sem_spectrum
from .schemas import (
    BezoutDocument,
    Certificate,
    GraphSpec,
    certificate_from_labeling,
    cover_report,
    family_graph,
    labeling_from_certificate,
    spectrum_document,
)

EXIT_OK = 0
EXIT_INVALID_CERTIFICATE = 1
EXIT_INCOMPLETE = 2
EXIT_BAD_ARGS = 3
EXIT_GUARD = 4


class _ArgsError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgsError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="crownmagic", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("intervals", help="feasible-valence interval of a graph family")
    p.add_argument("--family", required=True, choices=["crown", "cycle", "star_loop"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--mode", required=True, choices=["sem", "em"])

    p = sub.add_parser("generate", help="one crown certificate with a given valence")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--valence", type=int, required=True)

    p = sub.add_parser("cover", help="one certificate per feasible valence of a crown")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", required=True, choices=["sem", "em"])
    p.add_argument("--out", help="write the report to this file instead of stdout")

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("file")

    p = sub.add_parser("spectrum", help="exhaustive valence spectrum of a small graph")
    p.add_argument("--family", required=True, choices=["crown", "cycle", "star_loop"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--mode", required=True, choices=["sem", "em"])
    p.add_argument("--guard", type=int, help="override the search-size guard")

    p = sub.add_parser("bezout", help="bounded Bezout data for an odd coprime pair")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("conflicts", help="conflict values for the modulus p^k q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("bound", help="lower bound on the number of distinct valences")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--cycle", action="store_true", help="bound for the bare cycle")

    return parser


def _dump(payload) -> str:
    if isinstance(payload, dict):
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    return json.dumps(payload, sort_keys=True) + "\n"


def _emit(payload, stdout: IO[str], out: str | None = None):
    text = _dump(payload)
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _cmd_intervals(args, stdout) -> int:
    spec = GraphSpec(family=args.family, m=args.m, n=args.n)
    graph = family_graph(spec)
    interval = sem_interval(graph) if args.mode == "sem" else em_interval(graph)
    _emit([interval.lo, interval.hi], stdout)
    return EXIT_OK


def _cmd_generate(args, stdout, stderr) -> int:
    labeling = crown_labeling_for_valence(args.m, args.n, args.valence)
    if labeling is None:
        stderr.write(
            f"no implemented construction reaches valence {args.valence} "
            f"for m={args.m}, n={args.n}\n"
        )
        return EXIT_INCOMPLETE
    cert = certificate_from_labeling(
        labeling, GraphSpec(family="crown", m=args.m, n=args.n)
    )
    _emit(cert.model_dump(mode="json"), stdout)
    return EXIT_OK


def _cmd_cover(args, stdout) -> int:
    if args.p < 3 or args.p % 2 == 0 or args.q < 1 or args.q % 2 == 0:
        raise InvalidInput(f"cover needs odd p >= 3 and odd q >= 1, got {args.p}, {args.q}")
    m = args.p * args.q
    cover = (
        crown_sem_cover(m, args.n) if args.mode == "sem" else crown_em_cover(m, args.n)
    )
    report = cover_report(cover)
    _emit(report.model_dump(mode="json"), stdout, args.out)
    return EXIT_OK if not report.missing else EXIT_INCOMPLETE


def _cmd_verify(args, stdout) -> int:
    with open(args.file, encoding="utf-8") as fh:
        raw = json.load(fh)
    cert = Certificate.model_validate(raw)
    labeling = labeling_from_certificate(cert)
    _emit({"valid": True, "kind": labeling.kind, "valence": labeling.valence}, stdout)
    return EXIT_OK


def _cmd_spectrum(args, stdout) -> int:
    spec = GraphSpec(family=args.family, m=args.m, n=args.n)
    graph = family_graph(spec)
    if args.mode == "sem":
        report = brute_sem_spectrum(graph, **({"guard": args.guard} if args.guard else {}))
    else:
        report = brute_em_spectrum(graph, **({"guard": args.guard} if args.guard else {}))
    _emit(spectrum_document(report, spec).model_dump(mode="json"), stdout)
    return EXIT_OK


def _cmd_bezout(args, stdout) -> int:
    data = bounded_bezout(args.p, args.q)
    doc = BezoutDocument(
        p=data.p,
        q=data.q,
        alpha=data.alpha,
        beta=data.beta,
        x=data.x,
        x_prime=data.x_prime,
        alpha_prime=data.alpha_prime,
        beta_prime=data.beta_prime,
    )
    _emit(doc.model_dump(mode="json"), stdout)
    return EXIT_OK


def _cmd_conflicts(args, stdout) -> int:
    _emit(conflict_values(args.p, args.k, args.q), stdout)
    return EXIT_OK


def _cmd_bound(args, stdout) -> int:
    if args.cycle:
        _emit(cycle_valence_lower_bound(args.m), stdout)
    else:
        if args.n is None:
            raise InvalidInput("bound needs --n unless --cycle is given")
        _emit(crown_valence_lower_bound(args.m, args.n), stdout)
    return EXIT_OK


def run(argv, stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Parse argv, run one subcommand, and return the exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(stderr)
            return EXIT_BAD_ARGS
        if args.command == "intervals":
            return _cmd_intervals(args, stdout)
        if args.command == "generate":
            return _cmd_generate(args, stdout, stderr)
        if args.command == "cover":
            return _cmd_cover(args, stdout)
        if args.command == "verify":
            return _cmd_verify(args, stdout)
        if args.command == "spectrum":
            return _cmd_spectrum(args, stdout)
        if args.command == "bezout":
            return _cmd_bezout(args, stdout)
        if args.command == "conflicts":
            return _cmd_conflicts(args, stdout)
        if args.command == "bound":
            return _cmd_bound(args, stdout)
        parser.print_usage(stderr)
        return EXIT_BAD_ARGS
    except SystemExit as exc:  # argparse --help
        code = exc.code if isinstance(exc.code, int) else 0
        return code
    except _ArgsError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_BAD_ARGS
    except (InvalidInput, EmptyInterval) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_BAD_ARGS
    except GuardExceeded as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_GUARD
    except InvalidCertificate as exc:
        stderr.write(f"invalid certificate: {exc}\n")
        return EXIT_INVALID_CERTIFICATE
    except (json.JSONDecodeError, ValidationError) as exc:
        stderr.write(f"invalid certificate: {exc}\n")
        return EXIT_INVALID_CERTIFICATE
    except BrokenPipeError:  # consumer stopped reading (e.g. piped into head)
        return EXIT_OK
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_BAD_ARGS


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
