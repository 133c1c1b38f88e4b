"""Command-line frontend.

Exit codes: 0 success, 1 a grading violation was found, 2 some answer stayed
UNKNOWN, 3 usage, parse or input error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .affine import AffineRoot, AffineWeyl, WPlusElt, format_element, normalize_affine_root
from .bruhat import UNKNOWN, BruhatOrder, SearchBounds, tri_str
from .errors import KacMoodyError, NotInTitsCone, ParseError
from .grading import GradingRegion, verify_grading
from .plot import PlotSpec, render_apartment, render_tits_cone
from .root_datum import RootDatum, datum_from_cartan, load_datum, parse_cartan
from .roots import root_from_vector
from .tits_cone import DEFAULT_STEP_CAP

__all__ = ["main", "build_parser", "parse_affine_root"]

EXIT_OK, EXIT_VIOLATION, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--datum", help="root datum file")
    src.add_argument("--cartan", help="Cartan matrix, rows separated by ';' (e.g. '2,-1;-1,2')")
    defaults = SearchBounds()
    common.add_argument("--root-height-bound", type=int, default=defaults.root_height_bound)
    common.add_argument("--level-bound", type=int, default=defaults.level_bound)
    common.add_argument("--chain-bound", type=int, default=defaults.chain_length_bound)
    common.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP)

    parser = _Parser(prog="kmbruhat", description="Bruhat order on Kac-Moody affine Weyl semigroups")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("length", parents=[common], help="affine length of an element")
    p.add_argument("element")
    p = sub.add_parser("compare", parents=[common], help="decide x < y and print a chain")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("covers", parents=[common], help="certified upper covers of x")
    p.add_argument("x")
    p = sub.add_parser("interval", parents=[common], help="elements of the interval [x, y]")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("verify-grading", parents=[common], help="check the grading on a region")
    p.add_argument("--height-cap", type=int, default=4, help="cap on |ht(lam++)|")
    p.add_argument("--length-cap", type=int, default=4, help="cap on l(w) and l(v)")
    p.add_argument("--box", type=int, default=None, help="coordinate box for lam++")
    p.add_argument("--report-out", help="write the tab-separated certificate table here")
    for name, helptext in (("plot-tits", "SVG of the Tits cone"), ("plot-apartment", "SVG of the apartment")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--depth", type=int, default=4)
        p.add_argument("--window", default="-4,-4,4,4", help="xmin,ymin,xmax,ymax (write --window=-4,-4,4,4)")
        p.add_argument("--highlight", action="append", default=[], help="element or affine root")
        p.add_argument("--svg-out", help="output file (default stdout)")
    return parser


def _datum(args) -> RootDatum:
    if args.datum:
        return load_datum(args.datum)
    if args.cartan:
        return datum_from_cartan(parse_cartan(args.cartan).entries)
    raise _UsageError("one of --datum or --cartan is required")


def _bounds(args) -> SearchBounds:
    return SearchBounds(
        root_height_bound=args.root_height_bound,
        level_bound=args.level_bound,
        chain_length_bound=args.chain_bound,
    )


_AFFINE_ROOT = re.compile(r"^\s*\(([^)]*)\)\s*\[\s*(-?\d+)\s*\]\s*$")


def parse_affine_root(datum: RootDatum, text: str) -> AffineRoot:
    """Parse ``(c1,...,cr)[n]``: the root sum c_i alpha_i at level n."""
    m = _AFFINE_ROOT.match(text)
    if not m:
        raise ParseError(f"cannot parse affine root {text!r}; expected '(c1,...,cr)[n]'")
    try:
        coeffs = [int(t) for t in re.split(r"[,\s]+", m.group(1).strip()) if t]
    except ValueError as exc:
        raise ParseError(f"bad root coefficients in {text!r}") from exc
    if len(coeffs) != datum.rank:
        raise ParseError(f"root needs {datum.rank} coefficients, got {len(coeffs)}")
    vec = [0] * datum.lattice_rank
    for c, alpha in zip(coeffs, datum.simple_roots):
        vec = [v + c * a for v, a in zip(vec, alpha)]
    return normalize_affine_root(root_from_vector(datum, tuple(vec)), int(m.group(2)))


def _window(text: str) -> tuple[Fraction, ...]:
    try:
        parts = tuple(Fraction(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad window {text!r}") from exc
    if len(parts) != 4:
        raise ParseError("window needs four numbers xmin,ymin,xmax,ymax")
    return parts


def _write(text: str, path: Optional[str], out) -> None:
    if path:
        Path(path).write_text(text)
    else:
        out.write(text)


def _cmd_length(args, out) -> int:
    aw = AffineWeyl.from_datum(_datum(args), args.step_cap)
    x = aw.parse(args.element)
    dom = aw.dominance(x)
    base, coeff = aw.affine_length_eps(x)
    out.write(f"element: {format_element(x)}\n")
    out.write(f"affine length: {aw.affine_length(x)}\n")
    out.write(f"epsilon form: ({base}, {coeff})\n")
    out.write(f"dominant coweight: {list(dom.dominant)}\n")
    out.write(f"v: {aw.W.format_word(dom.v_min.word)}\n")
    return EXIT_OK


def _order(args) -> BruhatOrder:
    return BruhatOrder(AffineWeyl.from_datum(_datum(args), args.step_cap), _bounds(args))


def _cmd_compare(args, out) -> int:
    order = _order(args)
    x, y = order.aw.parse(args.x), order.aw.parse(args.y)
    verdict = order.less_than(x, y)
    out.write(f"{format_element(x)} < {format_element(y)}: {tri_str(verdict)}\n")
    if verdict is True:
        chain = order.find_chain(x, y)
        if chain:
            out.write(chain.format() + "\n")
    return EXIT_UNKNOWN if verdict is UNKNOWN else EXIT_OK


def _cmd_covers(args, out) -> int:
    order = _order(args)
    x = order.aw.parse(args.x)
    covers = order.upper_covers(x)
    out.write("reflection\ttarget\tkind\tdelta\toracle\tshape\n")
    unknown = False
    for c in covers:
        shape = "ok" if not c.shape_failures else "; ".join(c.shape_failures)
        out.write(f"{c.reflection}\t{format_element(c.target)}\t{c.kind}\t{c.length_delta}\t{tri_str(c.oracle)}\t{shape}\n")
        unknown = unknown or c.oracle is UNKNOWN
    if not covers.complete:
        out.write("# list limited to roots of height <= the root height bound\n")
    return EXIT_UNKNOWN if unknown else EXIT_OK


def _cmd_interval(args, out) -> int:
    order = _order(args)
    x, y = order.aw.parse(args.x), order.aw.parse(args.y)
    iv = order.interval(x, y)
    for z in iv.elements:
        out.write(f"{order.length(z)}\t{format_element(z)}\n")
    for z in iv.undecided:
        out.write(f"?\t{format_element(z)}\n")
    out.write(f"# {len(iv.elements)} elements, complete: {iv.complete}\n")
    return EXIT_OK if iv.complete else EXIT_UNKNOWN


def _cmd_verify(args, out) -> int:
    region = GradingRegion(args.height_cap, args.length_cap, args.box)
    report = verify_grading(_datum(args), region, _bounds(args), args.step_cap)
    out.write(report.text())
    if args.report_out:
        Path(args.report_out).write_text(report.tsv())
    if report.violations:
        return EXIT_VIOLATION
    return EXIT_UNKNOWN if report.unknowns else EXIT_OK


def _plot_spec(args, aw: AffineWeyl) -> PlotSpec:
    items = []
    for text in args.highlight:
        if text.strip().startswith("pi"):
            items.append(aw.parse(text))
        else:
            items.append(parse_affine_root(aw.datum, text))
    return PlotSpec(args.depth, _window(args.window), tuple(items))


def _cmd_plot(args, out) -> int:
    aw = AffineWeyl.from_datum(_datum(args), args.step_cap)
    spec = _plot_spec(args, aw)
    render = render_tits_cone if args.command == "plot-tits" else render_apartment
    _write(render(aw.datum, spec), args.svg_out, out)
    return EXIT_OK


_COMMANDS = {
    "length": _cmd_length,
    "compare": _cmd_compare,
    "covers": _cmd_covers,
    "interval": _cmd_interval,
    "verify-grading": _cmd_verify,
    "plot-tits": _cmd_plot,
    "plot-apartment": _cmd_plot,
}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise _UsageError(parser.format_usage().strip())
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except NotInTitsCone as exc:
        err.write(f"error: {exc}\n")
        for line in exc.trace[:20]:
            err.write(f"  {list(line) if isinstance(line, tuple) else line}\n")
        if len(exc.trace) > 20:
            err.write(f"  ... {len(exc.trace) - 20} more steps\n")
        return EXIT_USAGE
    except (KacMoodyError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
