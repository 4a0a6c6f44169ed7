"""Command-line entry point: ``idealfam <command> ...``.

Exit status: 0 success, 1 a checked property or identity failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from . import core, enumeration, minors, replay
from .core import FamilyError
from .serialize import FormatError, format_family, read_family, write_family

log = logging.getLogger("idealfam")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path: Optional[str]) -> core.SetFamily:
    if path is None or path == "-":
        return read_family(sys.stdin)
    try:
        return read_family(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_check(args) -> int:
    F = _load(args.file)
    rep = core.family_report(F)
    if args.json:
        _emit(rep)
    else:
        width = max(map(len, rep))
        for k, v in rep.items():
            print(f"{k:<{width}}  {v}")
    return EXIT_OK


def cmd_minor(args) -> int:
    F = _load(args.file or args.input)
    kind = minors.MinorKind(args.op)
    try:
        M = kind.apply(F, args.vertex)
        report = None
        if args.report:
            report = minors.check_decomposition_identities(core.validate_ideal(F), args.vertex)
    except core.NotIdealError as exc:
        raise UsageError(f"{args.op} needs an ideal family: {exc}") from None
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    comments = [f"{kind.name.lower()} of vertex {args.vertex}"]
    if report is not None:
        comments.append("identities: " + json.dumps(report.to_dict(), separators=(",", ":")))
    sys.stdout.write(format_family(M, comments))
    return EXIT_OK if report is None or report.ok else EXIT_FAIL


def _progress(done: int, total: int) -> None:
    print(f"... {done}/{total} families", file=sys.stderr, flush=True)


def cmd_enumerate(args) -> int:
    n = args.n
    if n == enumeration.MAX_ENUM_N and not args.deep:
        raise UsageError("n = 6 enumerates about 7.8 million families; add --deep")
    try:
        if args.count_only:
            out = {
                "n": n,
                "families_visited": enumeration.count_ideal_families(n),
                "downward_closed": enumeration.count_downward_closed(n),
            }
            if args.up_to_iso:
                st = enumeration.run_campaign(n, verify_nds=False, up_to_iso=True, deep=args.deep)
                out["classes"] = st.classes
            _emit(out) if args.json else print(" ".join(f"{k}={v}" for k, v in out.items()))
            return EXIT_OK
        verify_nds = args.verify_nds or not (args.verify_injection or args.verify_identities)
        st = enumeration.run_campaign(
            n,
            verify_nds=verify_nds,
            verify_injection=args.verify_injection,
            verify_identities=args.verify_identities,
            up_to_iso=args.up_to_iso,
            deep=args.deep,
            progress=_progress if args.deep else None,
        )
    except core.DomainError as exc:
        raise UsageError(str(exc)) from None
    d = st.to_dict()
    if args.json:
        _emit(d)
    else:
        for k, v in d.items():
            print(f"{k}: {v}")
    return EXIT_OK if st.ok else EXIT_FAIL


def cmd_search(args) -> int:
    try:
        found = list(enumeration.search_intersection_closed_violations(
            args.n, args.require_empty, args.require_ground, samples=args.samples, seed=args.seed))
    except core.DomainError as exc:
        raise UsageError(str(exc)) from None
    ideal_hits = [F for F in found if core.is_ideal(F)]
    if args.emit_families:
        os.makedirs(args.emit_families, exist_ok=True)
        for i, F in enumerate(found):
            write_family(F, os.path.join(args.emit_families, f"n{args.n}_{i:05d}.txt"),
                         [f"nds={core.nds(F)}"])
    coverage = "exhaustive" if enumeration.search_is_exhaustive(args.n) else "sampled, not exhaustive"
    if args.json:
        _emit({
            "n": args.n,
            "coverage": coverage,
            "found": len(found),
            "ideal_among_found": len(ideal_hits),
            "families": [core.family_report(F) | {"edges": [core.members(e) for e in F.edges]} for F in found],
        })
    else:
        print(f"n={args.n} coverage={coverage} found={len(found)}")
        for F in found:
            print(f"nds={core.nds(F):+d}  " + " ".join("{" + ",".join(map(str, core.members(e))) + "}" for e in F.edges))
    return EXIT_FAIL if ideal_hits else EXIT_OK


def cmd_replay(args) -> int:
    F = _load(args.file)
    try:
        ideal = core.validate_ideal(F)
    except core.NotIdealError as exc:
        raise UsageError(f"not an ideal family (axiom {exc.violation.axiom}): {exc}") from None
    try:
        cert = replay.replay_induction(ideal)
    except replay.IdentityMismatch as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(cert.to_json() if args.json else cert.render())
    return EXIT_OK


WORKED_EXAMPLES = {
    "power_set_n2.txt": ("power set on two vertices", lambda: core.power_set(2)),
    "ideal_n3.txt": ("ideal family on three vertices, nds = -1",
                     lambda: core.SetFamily(7, (0, 1, 2, 4, 3, 5, 7))),
    "degree_one_n4.txt": ("degree-one vertex 3 with U - {3} present, nds = 4 - 8",
                          lambda: core.degree_one_family(4)),
    "intersection_closed_nds1.txt": ("intersection-closed, not ideal, nds = 1",
                                     lambda: core.SetFamily(7, (0, 1, 3, 5, 7))),
}


def cmd_examples(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    for name, (desc, make) in WORKED_EXAMPLES.items():
        path = os.path.join(args.out, name)
        write_family(make(), path, [desc])
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="idealfam", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="degrees, TSH, NDS, rarity and closure flags of a family file")
    s.add_argument("--json", action="store_true")
    s.add_argument("file", nargs="?", help="family file (default: stdin)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("minor", help="apply a single-vertex minor")
    s.add_argument("--op", required=True, choices=[k.value for k in minors.MinorKind])
    s.add_argument("--vertex", required=True, type=int)
    s.add_argument("--report", action="store_true", help="append the decomposition identity report")
    s.add_argument("--in", dest="input", help="family file (alternative to the positional argument)")
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_minor)

    s = sub.add_parser("enumerate", help="enumerate and verify all ideal families on n vertices")
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--verify-nds", action="store_true")
    s.add_argument("--verify-injection", action="store_true")
    s.add_argument("--verify-identities", action="store_true")
    s.add_argument("--up-to-iso", action="store_true", help="also count classes under vertex relabelling")
    s.add_argument("--deep", action="store_true", help="allow n = 6")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("search", help="look for intersection-closed families with NDS > 0")
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--require-empty", action="store_true")
    s.add_argument("--require-ground", action="store_true")
    s.add_argument("--emit-families", metavar="DIR")
    s.add_argument("--samples", type=int, default=20000, help="random closures tried when n = 5")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("replay", help="replay the inductive NDS bound on an ideal family")
    s.add_argument("--json", action="store_true")
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_replay)

    s = sub.add_parser("examples", help="write the worked example families")
    s.add_argument("--out", default="families")
    s.set_defaults(func=cmd_examples)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, FormatError, FamilyError) as exc:
        print(f"idealfam {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
