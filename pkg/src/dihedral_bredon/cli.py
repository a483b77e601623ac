"""Command-line interface: ``dihedral-bredon <command> ...``.

Exit status: 0 success, 1 oracle mismatch, 2 bounded cells present,
3 input error, 4 range error.  Ring arguments name a built-in profile or
a profile document; documents are also looked up by name in the
directories listed in ``$DIHEDRAL_BREDON_PROFILE_PATH``.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path
from typing import Sequence

from .abelian import render
from .artin import ArtinParameters, ClassCatalog, load_catalog
from .engine import HomologyReport, bredon_vc, e2_page
from .errors import BredonError, OutOfRangeError, ProfileError
from .ktheory import BUILTIN_NAMES, UNKNOWN, KTheoryProfile, builtin, dump_profile, load_profile_file
from .oracle import stability_scan
from .report import RENDERERS

EXIT_OK, EXIT_MISMATCH, EXIT_BOUNDED, EXIT_INPUT, EXIT_RANGE = 0, 1, 2, 3, 4
PATH_VARIABLE = "DIHEDRAL_BREDON_PROFILE_PATH"


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_q(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}")
    lo = int(m[1])
    hi = int(m[2]) if m[2] is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_signs(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 's1,s2', got {text!r}") from None
    return a, b


def resolve_ring(ref: str) -> KTheoryProfile:
    try:
        return builtin(ref)
    except KeyError as exc:
        builtin_error = exc.args[0]
    candidates = [Path(ref)]
    for directory in filter(None, os.environ.get(PATH_VARIABLE, "").split(os.pathsep)):
        candidates += [Path(directory) / ref, Path(directory) / f"{ref}.profile"]
    for path in candidates:
        if path.is_file():
            return load_profile_file(path)
    raise InputError(builtin_error + " and no profile file of that name was found")


def _params(n: int) -> ArtinParameters:
    try:
        return ArtinParameters(n)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _catalog(path: str | None, params: ArtinParameters) -> ClassCatalog | None:
    if path is None:
        return None
    return load_catalog(Path(path).read_text(encoding="utf-8"), params)


def _emit_report(report: HomologyReport, fmt: str) -> int:
    sys.stdout.write(RENDERERS[fmt](report))
    if report.errors:
        return EXIT_RANGE
    return EXIT_BOUNDED if report.has_bounded else EXIT_OK


def cmd_compute(args) -> int:
    profile, params = resolve_ring(args.ring), _params(args.n)
    catalog = _catalog(args.catalog, params)
    lo, hi = args.q
    if lo == hi:
        report = bredon_vc(profile, lo, params, catalog, args.signs)
    else:
        report = e2_page(profile, params, (lo, hi), catalog, args.signs)
    return _emit_report(report, args.format)


def _default_q_range(profile: KTheoryProfile) -> tuple[int, int]:
    lo, hi = profile.q_range
    return (lo if profile.regular else lo + 1, hi)


def cmd_e2page(args) -> int:
    profile, params = resolve_ring(args.ring), _params(args.n)
    catalog = _catalog(args.catalog, params)
    q_range = args.q or _default_q_range(profile)
    report = e2_page(profile, params, q_range, catalog, args.signs)
    return _emit_report(report, args.format)


def cmd_oracle(args) -> int:
    profile, params = resolve_ring(args.ring), _params(args.n)
    catalog = _catalog(args.catalog, params)
    lo, hi = args.q
    status = EXIT_OK
    for q in range(lo, hi + 1):
        result = stability_scan(profile, q, params, range(1, args.k + 1), catalog, args.signs, args.seed)
        if args.format == "records":
            for k, cells in result.per_k.items():
                for i, (o, c) in cells.items():
                    flag = "match" if o == c else "mismatch"
                    print(f"{i}\t{q}\t{k}\t{o}\t{c}\t{flag}")
                print(f"g20\t{q}\t{k}\tmono={'yes' if result.monomorphism[k] else 'no'}")
        else:
            print(f"oracle: {profile.name}, n = {params.n}, q = {q}, k = 1..{args.k}")
            for cell in result.cells:
                print(f"  H_{cell.i}: {cell.verdict}")
            mono = all(result.monomorphism.values())
            print(f"  g2^0 monomorphism on every truncation: {'yes' if mono else 'no'}")
            for line in result.notes:
                print(f"  note: {line}")
        if not result.all_match:
            status = EXIT_MISMATCH
    return status


def _profile_table(profile: KTheoryProfile) -> str:
    lo, hi = profile.q_range
    rows = [("q", "K_q", "NK_q")]
    for q in range(lo, hi + 1):
        rows.append((str(q), *("?" if v is UNKNOWN else render(v)
                               for v in (profile.k_table[q], profile.nk_table[q]))))
    widths = [max(len(r[c]) for r in rows) for c in range(3)]
    lines = [f"{profile.name}  (regular: {'yes' if profile.regular else 'no'}, q = {lo}..{hi})"]
    lines += [" | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines += [f"  {key}: {value}" for key, value in sorted(profile.notes.items())]
    return "\n".join(lines) + "\n"


def cmd_profiles(args) -> int:
    if args.action == "list":
        for name in BUILTIN_NAMES:
            print(name)
        for directory in filter(None, os.environ.get(PATH_VARIABLE, "").split(os.pathsep)):
            for path in sorted(Path(directory).glob("*.profile")):
                print(path)
        return EXIT_OK
    if args.target is None:
        raise InputError(f"profiles {args.action} needs a ring name or file")
    if args.action == "show":
        profile = resolve_ring(args.target)
        sys.stdout.write(dump_profile(profile) if args.document else _profile_table(profile))
        return EXIT_OK
    profile = load_profile_file(args.target)
    print(f"ok: {profile.name} (q = {profile.q_range[0]}..{profile.q_range[1]})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dihedral-bredon",
                     description="Bredon homology of dihedral Artin groups with K-theory coefficients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, q_required=True):
        p.add_argument("--ring", required=True, help="built-in ring name or profile file")
        p.add_argument("--n", type=int, required=True, help="dihedral parameter n >= 2")
        p.add_argument("--q", type=parse_q, required=q_required, help="degree q or inclusive range a..b")
        p.add_argument("--catalog", help="class catalog document")
        p.add_argument("--signs", type=parse_signs, default=(1, 1),
                       help="sign convention s1,s2 for the central g21 component (even n)")

    p = sub.add_parser("compute", help="homology table for one q or a range")
    common(p)
    p.add_argument("--format", choices=sorted(RENDERERS), default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("e2page", help="full E2 page, columns 0..3")
    common(p, q_required=False)
    p.add_argument("--format", choices=sorted(RENDERERS), default="text")
    p.set_defaults(func=cmd_e2page)

    p = sub.add_parser("oracle", help="compare closed forms with truncated matrices")
    common(p)
    p.add_argument("--k", type=int, default=8, help="largest number of classes (default 8)")
    p.add_argument("--seed", type=int, help="fill undetermined components randomly")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("profiles", help="list, show or validate K-theory profiles")
    p.add_argument("action", choices=("list", "show", "validate"))
    p.add_argument("target", nargs="?")
    p.add_argument("--document", action="store_true", help="show: print the profile document")
    p.set_defaults(func=cmd_profiles)
    return parser


def _glue_negative_q(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1..1" as an option flag; glue it to --q
    out = list(argv)
    for j in range(len(out) - 1):
        if out[j] == "--q" and out[j + 1].startswith("-"):
            out[j:j + 2] = [f"--q={out[j + 1]}"]
            break
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative_q(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except OutOfRangeError as exc:
        print(f"range error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (InputError, ProfileError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BredonError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
