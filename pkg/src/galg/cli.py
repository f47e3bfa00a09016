"""Command-line front end: ``galg <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors and 2 on usage or input
errors.  Diagnostics go to stderr as a single line; nothing is written
to stdout on failure.  Twist indices on the command line are 1-based.
"""

from __future__ import annotations

import argparse
import io
import sys

from . import genusbounds, numtheory, seifert, torus, twist
from .smat import SmatError, format_smat, read_smat


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _load(path):
    try:
        return read_smat(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _witness_lines(w) -> list[str]:
    if w is None:
        return ["witness = none"]
    out = [f"witness_rank = {w.rank}", "witness:"]
    out += [" ".join(str(x) for x in col) for col in w.columns]
    return out


def cmd_alex(args, out):
    print(seifert.alexander_polynomial(_load(args.file)), file=out)


def cmd_sig(args, out):
    print(seifert.signature(_load(args.file)), file=out)


def cmd_genus(args, out):
    print(seifert.genus(_load(args.file)), file=out)


def cmd_galg_bound(args, out):
    s = _load(args.file)
    bound, w = genusbounds.galg_upper_bound(s, args.coeff_bound, args.stabilize)
    print(f"galg_upper_bound = {bound}", file=out)
    print(f"coeff_bound = {args.coeff_bound}", file=out)
    print(f"stabilizations = {args.stabilize}", file=out)
    for line in _witness_lines(w):
        print(line, file=out)


def cmd_taylor(args, out):
    res = genusbounds.isotropic_rank(_load(args.file), args.coeff_bound)
    tv = res.taylor_value
    print(f"isotropic_rank_lower = {res.lower_rank}", file=out)
    print(f"exact = {'true' if res.exact else 'false'}", file=out)
    print(f"taylor = {tv}" if isinstance(tv, int) else f"taylor_interval = [{tv[0]}, {tv[1]}]", file=out)
    if res.certificate is not None:
        cert = res.certificate
        detail = f" p={cert.prime}" if cert.prime is not None else ""
        print(f"anisotropy_certificate = {cert.kind}{detail} diag=" + ",".join(map(str, cert.form.diag)), file=out)
    if res.witness is not None:
        for line in _witness_lines(res.witness):
            print(line, file=out)


def _twist_indices(args, s):
    i, j = args.i - 1, args.j - 1
    if not (0 <= i < s.size and 0 <= j < s.size):
        raise ValueError(f"indices --i {args.i} --j {args.j} out of range 1..{s.size}")
    return i, j


def cmd_twist(args, out):
    s = _load(args.file)
    i, j = _twist_indices(args, s)
    t = twist.apply_twists(s, i, j, args.m, args.n)
    out.write(format_smat(t))
    print(f"alexander_before = {seifert.alexander_polynomial(s)}", file=out)
    print(f"alexander_after = {seifert.alexander_polynomial(t)}", file=out)


def cmd_untwist(args, out):
    s = _load(args.file)
    i, j = _twist_indices(args, s)
    spec = twist.factor_square_pair(args.m, args.n)
    u = twist.untwist_stabilize(s, i, j, spec)
    out.write(format_smat(u))
    print(f"a = {spec.a}, x = {spec.x}, y = {spec.y}", file=out)
    print(f"alexander_before = {seifert.alexander_polynomial(s)}", file=out)
    print(f"alexander_after = {seifert.alexander_polynomial(u)}", file=out)


def cmd_torus_bound(args, out):
    tp = torus.TorusParams(args.p, args.q)
    cert = torus.torus_galg_bound(tp)
    torus.audit(cert)
    print(f"bound = {cert.value}", file=out)
    if args.closed_form:
        print(f"closed_form = {torus.closed_form_bound(tp):.9f}", file=out)
    if args.certificate:
        for line in torus.certificate_lines(cert):
            print(line, file=out)


def cmd_torus_ratio(args, out):
    rows = torus.ratio_report(args.max)
    if args.format == "text":
        for r in rows:
            print(f"T({r.p},{r.q}) bound={r.bound} genus={r.genus} ratio={torus.format_ratio(r.ratio)}", file=out)
        return
    sep = "," if args.format == "csv" else "\t"
    print(sep.join(("p", "q", "bound", "genus", "ratio")), file=out)
    for r in rows:
        print(sep.join((str(r.p), str(r.q), str(r.bound), str(r.genus), torus.format_ratio(r.ratio))), file=out)


def cmd_legendre(args, out):
    print(numtheory.legendre(args.n, args.p), file=out)


def cmd_witness_prime(args, out):
    print(numtheory.find_witness_prime(args.n), file=out)


def cmd_aniso_cert(args, out):
    cert = numtheory.construct_counterexample(args.m, args.n, args.search_bound)
    for line in cert.lines():
        print(line, file=out)
    out.write(format_smat(cert.matrix))


def cmd_satellite(args, out):
    pattern = _load(args.pattern)
    block = _load(args.block)
    sat = genusbounds.satellite_matrix(pattern, block)
    out.write(format_smat(sat))
    print(f"alexander = {seifert.alexander_polynomial(sat)}", file=out)
    if args.companion_bound is not None:
        pb, _ = genusbounds.galg_upper_bound(pattern, args.coeff_bound)
        print(f"pattern_bound = {pb}", file=out)
        print(f"bound = {genusbounds.satellite_bound(pb, args.companion_bound)}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="galg", description="Seifert-form invariants and algebraic-genus bounds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    for name, func, text in (
        ("alex", cmd_alex, "Print the canonical Alexander polynomial of a .smat file."),
        ("sig", cmd_sig, "Print the signature of M + M^T."),
        ("genus", cmd_genus, "Print the genus (n - r + 1)/2 of the Seifert surface."),
    ):
        add(name, func, text).add_argument("file", help=".smat Seifert matrix file")

    p = add("galg-bound", cmd_galg_bound, "Upper bound on the algebraic genus by Alexander-trivial subgroup search.")
    p.add_argument("file", help=".smat Seifert matrix file")
    p.add_argument("--coeff-bound", type=_positive, default=3, help="max |entry| of generating vectors (default 3)")
    p.add_argument("--stabilize", type=_nonneg, default=0, metavar="K", help="stabilize K times before searching (default 0)")

    p = add("taylor", cmd_taylor, "Bounds on Taylor's invariant via isotropic subgroup search.")
    p.add_argument("file", help=".smat Seifert matrix file of a knot")
    p.add_argument("--coeff-bound", type=_positive, default=3, help="max |entry| of generating vectors (default 3)")

    for name, func, text in (
        ("twist", cmd_twist, "Apply an m-twist and an n-twist at zero diagonal entries i, j."),
        ("untwist", cmd_untwist, "Undo an (m, n) twist pair by one stabilization and a congruence (-mn must be a square)."),
    ):
        p = add(name, func, text)
        p.add_argument("file", help=".smat Seifert matrix file")
        p.add_argument("--i", type=int, required=True, help="first twisted basis index (1-based)")
        p.add_argument("--j", type=int, required=True, help="second twisted basis index (1-based)")
        p.add_argument("--m", type=int, required=True, help="first twist coefficient")
        p.add_argument("--n", type=int, required=True, help="second twist coefficient")

    p = add("torus-bound", cmd_torus_bound, "Certified algebraic-genus bound for the torus link T(p,q).")
    p.add_argument("p", type=_positive)
    p.add_argument("q", type=_positive)
    p.add_argument("--certificate", action="store_true", help="print the bound certificate tree")
    p.add_argument("--closed-form", action="store_true", help="also print pq/3 + p log2 q + q log2 p")

    p = add("torus-ratio", cmd_torus_ratio, "Bound / smooth genus for T(p, p+1), p = 2..MAX.")
    p.add_argument("--max", type=int, required=True, metavar="P", help="largest p (at least 3)")
    p.add_argument("--format", choices=("csv", "tsv", "text"), default="csv", help="output format (default csv)")

    p = add("legendre", cmd_legendre, "Legendre symbol (n/p) for an odd prime p.")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)

    p = add("witness-prime", cmd_witness_prime, "Smallest odd prime p with (n/p) = -1.")
    p.add_argument("n", type=int)

    p = add("aniso-cert", cmd_aniso_cert, "Knot K(a,b,c,d) unknotted by an m- and n-twist with anisotropic Seifert form.")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--search-bound", type=_positive, default=25, metavar="B", help="brute-force isotropy box (default 25)")

    p = add("satellite", cmd_satellite, "Block sum of a pattern with an Alexander-trivial companion block.")
    p.add_argument("pattern", help=".smat of the pattern P(U)")
    p.add_argument("block", help=".smat of an Alexander-trivial companion block (r = 1)")
    p.add_argument("--companion-bound", type=_nonneg, default=None, help="known bound for the companion; prints the summed bound")
    p.add_argument("--coeff-bound", type=_positive, default=3, help="search bound for the pattern (default 3)")
    return parser


def run(argv, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    buf = io.StringIO()
    try:
        args = build_parser().parse_args(argv)
        args.func(args, buf)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, SmatError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    stdout.write(buf.getvalue())
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
