import sys
import argparse
from contextlib import redirect_stderr, redirect_stdout
from typing import Optional, TextIO
import config
import emitters
from suites import suites
from rep import rep_half
from errors import DufloError, NotPolynomialInCasimir
from numeric import bernoulli, rational_text
from quantizer import MAP_KINDS, q_extended
from expression import lower_expr, parse_expr, print_expr
from expmap import decompose_pauli, kauffman_check, quantized_exp, to_intertwiner


def _order(min_value: int):
    def parse(text: str) -> int:
        value = int(text)
        if value < min_value:
            raise argparse.ArgumentTypeError(f"order must be at least {min_value}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="duflo", description="exact Duflo quantization engine for su(2)")
    commands = parser.add_subparsers(dest="command", required=True)

    quantize = commands.add_parser("quantize", help="quantize a polynomial in E1, E2, E3 and norm2")
    quantize.add_argument("--map", required=True, choices=MAP_KINDS)
    quantize.add_argument("--expr", required=True)
    quantize.add_argument("--rep", choices=["half"])
    quantize.add_argument("--format", default="json", choices=["json", "latex", "text"])

    expmap = commands.add_parser("expmap", help="quantized exponential map as a series in u")
    expmap.add_argument("--map", required=True, choices=MAP_KINDS)
    expmap.add_argument("--order", type=_order(1), default=config.default_order)
    expmap.add_argument("--basis", default="pauli", choices=["pauli", "epsilon", "swap"])
    expmap.add_argument("--format", default="json", choices=["json", "latex", "text"])

    skein = commands.add_parser("skein", help="Kauffman bracket check of the epsilon-basis coefficients")
    skein.add_argument("--map", required=True, choices=MAP_KINDS)
    skein.add_argument("--order", type=_order(4), default=config.default_order)
    skein.add_argument("--format", default="json", choices=["json", "text"])

    verify = commands.add_parser("verify", help="run the acceptance suites")
    verify.add_argument("--suite", default="all", choices=[*suites, "all"])
    verify.add_argument("--parallel", action="store_true")
    verify.add_argument("--cache", default=config.cache_file)
    verify.add_argument("--verbose", action="store_true")

    bernoulli_cmd = commands.add_parser("bernoulli", help="print the n-th Bernoulli number")
    bernoulli_cmd.add_argument("n", type=_order(0))
    bernoulli_cmd.add_argument("--second-kind", action="store_true")
    return parser


def _quantize(args: argparse.Namespace, out: TextIO):
    ast = parse_expr(args.expr)
    expr_text = print_expr(ast)
    poly = lower_expr(ast)
    element = q_extended(args.map, poly)
    if args.rep == "half":
        m = rep_half(element)
        if args.format == "json":
            out.write(emitters.dump_json(emitters.quantize_rep_document(args.map, expr_text, m)))
        else:
            out.write(emitters.matrix_text(m, latex=args.format == "latex") + "\n")
        return
    center = None
    if element.algebra.is_central(element):
        try:
            center = element.algebra.center_decompose(element)
        except NotPolynomialInCasimir:
            center = None
    if args.format == "json":
        out.write(emitters.dump_json(emitters.quantize_document(args.map, expr_text, poly, element, center)))
        return
    latex = args.format == "latex"
    out.write(emitters.uea_text(element, latex) + "\n")
    if center is not None:
        out.write(f"= {emitters.center_text(center, latex)}\n")


def _expmap(args: argparse.Namespace, out: TextIO):
    m = quantized_exp(args.map, args.order)
    c1, c2 = decompose_pauli(m) if args.basis == "pauli" else to_intertwiner(m, args.basis)
    if args.format == "json":
        out.write(emitters.dump_json(emitters.expmap_document(args.map, args.order, args.basis, c1, c2)))
    else:
        out.write(emitters.decomposition_text(args.basis, c1, c2, latex=args.format == "latex") + "\n")


def _skein(args: argparse.Namespace, out: TextIO):
    report = kauffman_check(args.map, args.order)
    if args.format == "json":
        out.write(emitters.dump_json(emitters.skein_document(report)))
        return
    out.write(emitters.decomposition_text("epsilon", report.c1, report.c2) + "\n")
    out.write(f"c1 * c2 = {emitters.series_text(report.product_check)}\n")
    out.write(f"passes_kauffman: {str(report.passes_kauffman).lower()}\n")
    if report.a_series is not None:
        out.write(f"A = {emitters.series_text(report.a_series)}\n")


def _verify(args: argparse.Namespace) -> bool:
    names = list(suites) if args.suite == "all" else [args.suite]
    passed = True
    for name in names:
        suite = suites[name](parallel=args.parallel, verbose=args.verbose, cache_path=args.cache)
        passed = suite.run() and passed
    return passed


def run_command(argv: list[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = build_parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        if args.command == "quantize":
            _quantize(args, out)
        elif args.command == "expmap":
            _expmap(args, out)
        elif args.command == "skein":
            _skein(args, out)
        elif args.command == "verify":
            return 0 if _verify(args) else 1
        elif args.command == "bernoulli":
            out.write(rational_text(bernoulli(args.n, args.second_kind)) + "\n")
    except DufloError as e:
        print(f"error: {e}", file=err)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(run_command(sys.argv[1:]))
