"""Command-line front end.

Exit status: 0 when everything requested holds, 1 when a check fails,
2 for usage or input errors.  Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from .coefficients import beta_table
from .evenchi import cross_validate, euler_even, euler_with_boundary
from .exactmath import format_rational
from .generators import FAMILIES, generate, stellar_subdivision
from .relations import (
    CheckReport,
    check_boundary_links,
    check_dehn_sommerville,
    check_lemma1,
    h_vector,
    is_semi_eulerian,
)
from .simplicial import (
    FacetFormatError,
    SimplicialComplex,
    boundary,
    double,
    euler_classical,
    f_vector,
    format_facets,
    is_pure,
    link,
    read_facet_file,
)

COMMANDS = (
    "fvector",
    "hvector",
    "euler",
    "check-ds",
    "check-lemma1",
    "check-semi-eulerian",
    "link",
    "boundary",
    "double",
    "generate",
    "beta-table",
    "verify",
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Path | None = None
    family: str | None = None
    dim: int | None = None
    json: bool = False
    max_n: int = 10
    face: tuple[int, ...] | None = None
    output: Path | None = None


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def load_complex(cfg: RunConfig) -> tuple[SimplicialComplex, str]:
    if (cfg.input is None) == (cfg.family is None):
        raise UsageError("give exactly one of --input or --family")
    if cfg.input is not None:
        return read_facet_file(cfg.input), str(cfg.input)
    try:
        C = generate(cfg.family, cfg.dim)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    label = cfg.family if cfg.dim is None else f"{cfg.family} --dim {cfg.dim}"
    return C, label


def _report_text(report: CheckReport, verbose: bool = False) -> list[str]:
    lines = [report.summary()]
    for it in report.items:
        if verbose or not it.ok:
            mark = "ok " if it.ok else "BAD"
            lines.append(
                f"  [{mark}] {it.description}: expected {format_rational(it.expected)}, "
                f"got {format_rational(it.actual)}"
            )
    lines.extend(f"  note: {n}" for n in report.notes)
    return lines


def _check_command(fn: Callable[[SimplicialComplex], CheckReport]):
    def run(cfg: RunConfig, out) -> int:
        C, _ = load_complex(cfg)
        report = fn(C)
        if cfg.json:
            out.write(report.to_json() + "\n")
        else:
            out.write("\n".join(_report_text(report, verbose=True)) + "\n")
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED

    return run


def _cmd_fvector(cfg: RunConfig, out) -> int:
    C, _ = load_complex(cfg)
    fv = f_vector(C)
    if cfg.json:
        out.write(_dump({"dimension": fv.dimension, "f": list(fv)}) + "\n")
    else:
        out.write(f"dimension {fv.dimension}\nf = ({', '.join(map(str, fv))})\n")
    return EXIT_OK


def _cmd_hvector(cfg: RunConfig, out) -> int:
    C, _ = load_complex(cfg)
    h = h_vector(f_vector(C))
    if cfg.json:
        out.write(_dump({"dimension": h.dimension, "h": list(h.entries)}) + "\n")
    else:
        out.write(f"dimension {h.dimension}\nh = ({', '.join(map(str, h.entries))})\n")
    return EXIT_OK


def _cmd_euler(cfg: RunConfig, out) -> int:
    C, _ = load_complex(cfg)
    cmp = cross_validate(C)
    if cfg.json:
        out.write(cmp.to_json() + "\n")
    else:
        out.write(f"classical: {cmp.classical}\n")
        if cmp.even_formula is not None:
            out.write(f"even-formula: {format_rational(cmp.even_formula)}\n")
        if cmp.boundary_formula is not None:
            out.write(f"boundary-formula: {format_rational(cmp.boundary_formula)}\n")
        out.write(f"verdict: {'agree' if cmp.agree else 'DISAGREE'}\n")
    return EXIT_OK if cmp.agree else EXIT_CHECK_FAILED


def _write_complex(cfg: RunConfig, C: SimplicialComplex, header: str, out) -> None:
    if cfg.json:
        text = _dump({"facets": [list(f) for f in C.facets], "f": list(f_vector(C))}) + "\n"
    else:
        text = format_facets(C, header)
    if cfg.output is not None:
        cfg.output.write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _cmd_link(cfg: RunConfig, out) -> int:
    C, label = load_complex(cfg)
    if cfg.face is None:
        raise UsageError("link needs --face")
    L = link(C, cfg.face)
    if cfg.json:
        out.write(
            _dump(
                {
                    "face": list(cfg.face),
                    "facets": [list(f) for f in L.facets],
                    "f": list(f_vector(L)),
                    "euler": euler_classical(L),
                }
            )
            + "\n"
        )
    else:
        out.write(format_facets(L, f"link of {list(cfg.face)} in {label}; chi = {euler_classical(L)}"))
    return EXIT_OK


def _cmd_boundary(cfg: RunConfig, out) -> int:
    C, label = load_complex(cfg)
    _write_complex(cfg, boundary(C), f"boundary of {label}", out)
    return EXIT_OK


def _cmd_double(cfg: RunConfig, out) -> int:
    C, label = load_complex(cfg)
    _write_complex(cfg, double(C), f"double of {label}", out)
    return EXIT_OK


def _cmd_generate(cfg: RunConfig, out) -> int:
    if cfg.family is None:
        raise UsageError("generate needs --family")
    C, label = load_complex(cfg)
    _write_complex(cfg, C, label, out)
    return EXIT_OK


def _cmd_beta_table(cfg: RunConfig, out) -> int:
    table = beta_table(cfg.max_n)
    if cfg.json:
        out.write(_dump({str(n): format_rational(b) for n, b in table}) + "\n")
    else:
        out.write("".join(f"{n}: {format_rational(b)}\n" for n, b in table))
    return EXIT_OK


def verify(C: SimplicialComplex) -> list[CheckReport]:
    """Run every identity that applies to ``C``.

    A complex with boundary is checked through its double; if the double
    cannot be glued directly, every facet is stellar-subdivided first.
    """
    reports = []
    purity = CheckReport("pure")
    purity.add("every facet has the top dimension", 1, int(is_pure(C)))
    reports.append(purity)
    if not purity.passed:
        return reports

    d = C.dimension
    closed = d == 0 or boundary(C).is_empty()
    if closed:
        reports += [is_semi_eulerian(C), check_dehn_sommerville(C), check_lemma1(C)]
        if d % 2 == 0:
            thm = CheckReport("even-face-euler")
            thm.add("sum of beta_n f_n equals the alternating sum", euler_classical(C), euler_even(C))
            reports.append(thm)
        return reports

    reports.append(check_boundary_links(C))
    M = C
    try:
        D = double(M)
    except ValueError:
        M = stellar_subdivision(C)
        D = double(M)
    fm, fb, fd = f_vector(M), f_vector(boundary(M)), f_vector(D)
    glue = CheckReport("double-face-counts")
    for n in range(d + 1):
        glue.add(f"f_{n}(double) = 2 f_{n}(M) - f_{n}(boundary)", 2 * fm[n] - fb[n], fd[n])
    reports.append(glue)
    for rep in (is_semi_eulerian(D), check_dehn_sommerville(D), check_lemma1(D)):
        rep.name = f"double/{rep.name}"
        reports.append(rep)
    if d % 2 == 0:
        cor = CheckReport("boundary-euler")
        chi_b = euler_with_boundary(C)
        cor.add("boundary formula equals the alternating sum", euler_classical(C), chi_b)
        cor.add("twice the boundary formula equals the even formula on the double", 2 * chi_b, euler_even(D))
        reports.append(cor)
    return reports


def _cmd_verify(cfg: RunConfig, out) -> int:
    C, label = load_complex(cfg)
    reports = verify(C)
    passed = all(r.passed for r in reports)
    if cfg.json:
        out.write(
            _dump(
                {
                    "input": label,
                    "passed": passed,
                    "comparison": cross_validate(C).to_dict(),
                    "checks": [r.to_dict() for r in reports],
                }
            )
            + "\n"
        )
    else:
        lines = [f"verify {label} (dimension {C.dimension})"]
        for r in reports:
            lines += _report_text(r)
        lines.append("ALL CHECKS PASS" if passed else "SOME CHECKS FAILED")
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


HANDLERS: dict[str, Callable[[RunConfig, Any], int]] = {
    "fvector": _cmd_fvector,
    "hvector": _cmd_hvector,
    "euler": _cmd_euler,
    "check-ds": _check_command(check_dehn_sommerville),
    "check-lemma1": _check_command(check_lemma1),
    "check-semi-eulerian": _check_command(is_semi_eulerian),
    "link": _cmd_link,
    "boundary": _cmd_boundary,
    "double": _cmd_double,
    "generate": _cmd_generate,
    "beta-table": _cmd_beta_table,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--input", type=Path, help="facet file")
    common.add_argument("--family", help=f"generator family: {', '.join(FAMILIES)}")
    common.add_argument("--dim", type=int, help="dimension for dimensioned families")

    parser = argparse.ArgumentParser(
        prog="eulerfaces",
        description="Exact Euler characteristics and face-count identities of simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "link":
            p.add_argument("--face", required=True, help="vertex ids, e.g. '0 1' or 0,1")
        if name in ("generate", "boundary", "double"):
            p.add_argument("--output", type=Path, help="write facets here instead of stdout")
        if name == "beta-table":
            p.add_argument("--max-n", type=int, default=10)
    return parser


def _parse_face(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad --face {text!r}") from None


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        input=ns.input,
        family=ns.family,
        dim=ns.dim,
        json=ns.json,
        max_n=getattr(ns, "max_n", 10),
        face=_parse_face(ns.face) if getattr(ns, "face", None) else None,
        output=getattr(ns, "output", None),
    )


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return HANDLERS[cfg.command](cfg, out)
    except (UsageError, FacetFormatError, OSError, ValueError) as exc:
        err.write(f"eulerfaces {cfg.command}: error: {exc}\n")
        return EXIT_USAGE


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except UsageError as exc:
        sys.stderr.write(f"eulerfaces: error: {exc}\n")
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
