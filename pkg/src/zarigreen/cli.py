"""Batch command line front end.

Single-shot subcommands over a problem file; byte-identical output for
identical input, exit status 0/1/2 for success/engine error/parse error.
Engine failures print one structured line ``E<code>: <message>``.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .curvecase import green_curve
from .errors import ParseError, ZariGreenError
from .flagcone import evaluate_flag, flag_green, lambda_nef_on_S
from .goldens import selftest
from .green import RealDivisorialValuation, green_from_sigma
from .lattice import DivisorClass, SurfaceLattice
from .problemfile import ProblemFile, load_problem
from .scalars import Scalar, parse_scalar
from .zariski import pl_family, pl_family_csv, threshold_psef, zariski_decompose


def _fmt_coeff(c: Scalar) -> str:
    return f"({c})" if c.d != 0 else str(c)


def _fmt_combo(pairs) -> str:
    terms = [f"{_fmt_coeff(c)}*{lab}" for lab, c in pairs if not c.is_zero()]
    return " + ".join(terms) if terms else "0"


def _fmt_class(lat: SurfaceLattice, cls: DivisorClass) -> str:
    return _fmt_combo(zip(lat.basis_labels, cls.coeffs))


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _need(pf: ProblemFile, attr: str, what: str):
    value = getattr(pf, attr)
    if value is None:
        raise ParseError(f"this command needs a [{what}] section")
    return value


def _named_class(pf: ProblemFile, name: str) -> DivisorClass:
    if name not in pf.classes:
        raise ParseError(f"no class named {name!r} in [classes]")
    return pf.classes[name]


def _parse_grid(text: str) -> list[Fraction]:
    out = []
    for part in text.split(","):
        try:
            out.append(Fraction(part.strip()))
        except ValueError:
            raise ParseError(f"grid entry {part!r} is not a rational") from None
    if any(t < 0 for t in out):
        raise ParseError("grid entries must be nonnegative")
    return out


def cmd_validate(args) -> list[str]:
    pf = load_problem(args.input)
    lat = _need(pf, "lattice", "lattice")
    return lat.validate().lines()


def cmd_decompose(args) -> list[str]:
    pf = load_problem(args.input)
    lat = _need(pf, "lattice", "lattice")
    theta = _named_class(pf, args.name)
    zd = zariski_decompose(lat, theta)
    cert = zd.certificate
    return [
        f"theta = {_fmt_class(lat, theta)}",
        f"P = {_fmt_class(lat, zd.positive)}, N = {_fmt_combo(zd.support)}",
        f"support: {', '.join(lab for lab, _ in zd.support) or 'none'}",
        "certificate: gram_negdef=%s, orthogonality=%s, positive_nef=%s, "
        "reassembly=%s" % (_yesno(cert.gram_negative_definite),
                           _yesno(cert.orthogonality),
                           _yesno(cert.positive_nef),
                           _yesno(cert.reassembly)),
    ]


def cmd_threshold(args) -> list[str]:
    pf = load_problem(args.input)
    lat = _need(pf, "lattice", "lattice")
    omega = _named_class(pf, args.omega)
    direction = _named_class(pf, args.direction)
    lam = threshold_psef(lat, omega, direction)
    lines = [f"lambda_psef = {lam}"]
    if args.csv:
        fam = pl_family(lat, omega, direction)
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(pl_family_csv(fam))
        lines.append(f"csv: {args.csv}")
    return lines


def _green_of(pf: ProblemFile):
    lat = _need(pf, "lattice", "lattice")
    sigma = _need(pf, "sigma", "sigma")
    omega = _named_class(pf, "omega")
    return lat, green_from_sigma(lat, omega, sigma)


def cmd_green(args) -> list[str]:
    pf = load_problem(args.input)
    lat, g = _green_of(pf)
    lines = [f"tau = {g.tau()}"]
    try:
        lines.append(f"rational_PL = {'true' if g.is_rational_PL() else 'false'}")
    except ZariGreenError:
        lines.append("rational_PL = unavailable")
    for i, lam in enumerate(g.breakpoints):
        lines.append(f"breakpoint {i}: lambda = {lam}, "
                     f"B = {_fmt_class(lat, g.b_class(i))}")
    lines.append(f"center: {', '.join(g.center_divisorial())}")
    if args.csv:
        grid = _parse_grid(args.grid) if args.grid else [Fraction(0), Fraction(1, 2),
                                                         Fraction(1)]
        rows = ["divisor,t,phi"]
        for lab in lat.labels():
            for t in grid:
                if t == 0:
                    value = g.tau()
                else:
                    value = g.evaluate(RealDivisorialValuation(lab, Fraction(t)))
                rows.append(f"{lab},{Fraction(t)},{value}")
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("\n".join(rows) + "\n")
        lines.append(f"csv: {args.csv}")
    return lines


def cmd_eval(args) -> list[str]:
    pf = load_problem(args.input)
    _, g = _green_of(pf)
    t = parse_scalar(args.t)
    if t.is_zero():
        return [str(g.tau())]
    return [str(g.evaluate(RealDivisorialValuation(args.divisor, t)))]


_FLAG_GRID = [(0, 0), (0, Fraction(1, 2)), (0, 1), (Fraction(1, 2), Fraction(1, 2)),
              (Fraction(1, 2), 1), (1, 1), (1, 2), (2, 2)]


def cmd_flag(args) -> list[str]:
    pf = load_problem(args.input)
    cfg = _need(pf, "flag", "flag")
    lam = lambda_nef_on_S(cfg)
    g = flag_green(cfg)
    lines = [f"lambda_S_nef = {lam}",
             f"rational_PL = {'true' if g.is_rational_PL() else 'false'}",
             f"tau = {g.tau()}"]
    for vbz, vbs in _FLAG_GRID:
        value = evaluate_flag(g, Scalar.of(Fraction(vbz)), Scalar.of(Fraction(vbs)))
        lines.append(f"phi(vbZ={Fraction(vbz)}, vbS={Fraction(vbs)}) = {value}")
    return lines


def cmd_curve(args) -> list[str]:
    pf = load_problem(args.input)
    cs = _need(pf, "curve", "curve")
    g = green_curve(cs)
    lines = [f"A = {cs.normalization}",
             f"tau = {g.tau()}",
             f"rational_PL = {'true' if g.is_rational_PL() else 'false'}"]
    for label, t in cs.points:
        own = g.evaluate(label, t)
        half = g.evaluate(label, t / 2)
        lines.append(f"point {label}: scale {t}, phi_at_scale = {own}, "
                     f"phi_at_half_scale = {half}")
    return lines


def cmd_selftest(args) -> tuple[list[str], int]:
    results = selftest()
    lines = []
    for name, ok, detail in results:
        lines.append(f"PASS {name}" if ok else f"FAIL {name}: {detail}")
    passed = sum(1 for _, ok, _ in results if ok)
    lines.append(f"selftest: {passed} passed, {len(results) - passed} failed")
    return lines, 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zarigreen",
        description="Exact Zariski decompositions, psef thresholds and "
                    "Green's functions on surface lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", required=True, help="problem file path")
        return p

    with_input(sub.add_parser("validate", help="structural lattice report"))
    p = with_input(sub.add_parser("decompose", help="Zariski decomposition of a named class"))
    p.add_argument("name", help="class name from [classes]")
    p = with_input(sub.add_parser("threshold", help="psef threshold along a ray"))
    p.add_argument("omega", help="ample origin class name")
    p.add_argument("direction", help="effective direction class name")
    p.add_argument("--csv", help="write the breakpoint family as CSV")
    p = with_input(sub.add_parser("green", help="Green's function report"))
    p.add_argument("--csv", help="write an evaluation profile as CSV")
    p.add_argument("--grid", help="comma separated rational scales for --csv")
    p = with_input(sub.add_parser("eval", help="evaluate the Green's function"))
    p.add_argument("divisor", help="divisor label")
    p.add_argument("t", help="scale (rational or quadratic scalar)")
    with_input(sub.add_parser("flag", help="Cutkosky flag report"))
    with_input(sub.add_parser("curve", help="curve-case report"))
    sub.add_parser("selftest", help="run the built-in golden instances")
    return parser


_HANDLERS = {
    "validate": cmd_validate,
    "decompose": cmd_decompose,
    "threshold": cmd_threshold,
    "green": cmd_green,
    "eval": cmd_eval,
    "flag": cmd_flag,
    "curve": cmd_curve,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        out = handler(args)
    except ParseError as exc:
        print(f"E{exc.code}: {exc}", file=sys.stderr)
        return 2
    except ZariGreenError as exc:
        print(f"E{exc.code}: {exc}", file=sys.stderr)
        return 1
    lines, code = out if isinstance(out, tuple) else (out, 0)
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
