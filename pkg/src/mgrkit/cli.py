"""Command-line front end: ``mgrkit verify|type|solve|count|stats``.

Exit status is 0 on success, 1 when a verification fails and 2 for any
input error (bad spec, unreadable file, invalid diagram or system).
"""
from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .algebra.racks import rack_type, verify_rack
from .diagram import count_per_flow, parse_diagram, surface_stats
from .errors import AxiomViolation, MgrkitError
from .family import associated_mgr, verify_gfamily, verify_mgr
from .multiset import multiset_format
from .solver import count_per_flow_system, parse_system
from .specs import parse_family, parse_rack

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class RunReport:
    command: list[str]
    digests: dict[str, str] = field(default_factory=dict)
    payload: str = ""
    elapsed: float = 0.0

    def render(self) -> str:
        lines = ["command: " + " ".join(self.command)]
        for name, digest in self.digests.items():
            lines.append(f"input: {name} sha256={digest}")
        lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)


def _read(path: str, report: RunReport) -> str:
    data = Path(path).read_bytes()
    report.digests[path] = hashlib.sha256(data).hexdigest()
    return data.decode("utf-8")


def _cmd_verify(args, report: RunReport) -> int:
    if args.kind == "rack":
        rep = verify_rack(parse_rack(args.spec))
    elif args.kind == "gfamily":
        rep = verify_gfamily(parse_family(args.spec))
    else:
        rep = verify_mgr(associated_mgr(parse_family(args.spec)))
    report.payload = rep.render()
    return EXIT_OK if rep.ok else EXIT_FAIL


def _cmd_type(args, report: RunReport) -> int:
    report.payload = str(rack_type(parse_rack(args.spec)))
    return EXIT_OK


def _cmd_solve(args, report: RunReport) -> int:
    S = parse_system(_read(args.system, report))
    report.payload = multiset_format(count_per_flow_system(S, workers=args.workers), machine=args.machine)
    return EXIT_OK


def _cmd_count(args, report: RunReport) -> int:
    D = parse_diagram(_read(args.diagram, report))
    F = parse_family(args.spec)
    report.payload = multiset_format(count_per_flow(D, F, workers=args.workers), machine=args.machine)
    return EXIT_OK


def _cmd_stats(args, report: RunReport) -> int:
    st = surface_stats(parse_diagram(_read(args.diagram, report)))
    if args.machine:
        report.payload = "\n".join(f"{k} {v}" for k, v in vars(st).items())
    else:
        report.payload = str(st)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mgrkit", description="Multiple group racks and coloring counts of spatial surfaces.")
    p.add_argument("--report", action="store_true", help="print command, input digests and timing to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check rack, G-family or MGR axioms exhaustively")
    v.add_argument("kind", choices=["rack", "gfamily", "mgr"])
    v.add_argument("--spec", required=True, help="rack spec, or family spec for gfamily/mgr")
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("type", help="print the type of a rack")
    t.add_argument("--spec", required=True)
    t.set_defaults(func=_cmd_type)

    s = sub.add_parser("solve", help="per-flow counts of a constraint system file")
    s.add_argument("--system", required=True)
    s.set_defaults(func=_cmd_solve)

    c = sub.add_parser("count", help="per-flow coloring counts of a diagram file")
    c.add_argument("--diagram", required=True)
    c.add_argument("--spec", required=True, help="family spec, e.g. 'zfamily dihedral 3'")
    c.set_defaults(func=_cmd_count)

    st = sub.add_parser("stats", help="surface statistics of a diagram file")
    st.add_argument("--diagram", required=True)
    st.set_defaults(func=_cmd_stats)

    for sp in (s, c, st):
        sp.add_argument("--machine", action="store_true", help="one 'count multiplicity' pair per line")
    for sp in (s, c):
        sp.add_argument("--workers", type=int, default=1, help="processes for the flow loop (default 1)")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report = RunReport(["mgrkit", *argv])
    start = time.perf_counter()
    try:
        if getattr(args, "workers", 1) < 1:
            raise MgrkitError("--workers must be at least 1")
        status = args.func(args, report)
    except (MgrkitError, ValueError, OSError, UnicodeDecodeError) as exc:
        kind = "axiom violation" if isinstance(exc, AxiomViolation) else "error"
        print(f"mgrkit: {kind}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report.elapsed = time.perf_counter() - start
    if report.payload:
        print(report.payload)
    if args.report:
        print(report.render(), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
