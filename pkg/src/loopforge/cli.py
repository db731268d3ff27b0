"""Command-line front end.

Exit codes: 0 success, 1 domain error (the error class name is printed),
2 usage error.  Reports are deterministic: identical inputs produce
byte-identical output regardless of LOOPFORGE_THREADS.
"""

from __future__ import annotations

import argparse
import sys

from .core import (
    LoopError,
    center,
    commutant,
    find_homomorphisms,
    is_normal,
    is_subloop,
    factor_loop,
    loop_properties,
    nucleus,
    validate_loop,
)
from .decomposition import (
    DataPair,
    canonical_pair,
    check_mr_nuclear,
    decompose,
    shift_transversal,
)
from .equivalence import equivalent, wide_equivalent
from .extensions import classify_schreier, schreier_loop
from .fileio import (
    ParseError,
    emit_decomposition,
    emit_loop,
    emit_schreier_data,
    parse_loop,
    parse_map,
    parse_pair,
    parse_schreier_data,
    parse_subset,
)
from .gallery import (
    commutator_homomorphisms,
    enumerate_loops,
    example_bol,
    example_commutator,
    example_conjugation,
    named_group,
    right_inner_group,
)

PROPERTY_FLAGS = ("associative", "commutative", "left_inverse", "right_inverse",
                  "left_alternative", "right_alternative", "flexible",
                  "left_bol", "right_bol", "inverse_maps_coincide")


def _read(path):
    try:
        with open(path, "r") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror))


def _load_loop(path):
    return parse_loop(_read(path))


def _load_data(path):
    return parse_schreier_data(_read(path))


def _fmt_subset(subset):
    return ",".join(str(v) for v in subset)


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(args, out):
    if args.format == "table":
        L = _load_loop(args.file)
        validate_loop(L.table)
        out("valid loop, order %d, %s" %
            (L.order, "associative" if L.is_associative else "nonassociative"))
    elif args.format == "data":
        data = _load_data(args.file)
        out("valid data, |K| = %d, |G| = %d" % (data.K.order, data.G.order))
    else:
        if not args.k:
            raise ParseError("--format pair requires --k FILE for the carrier")
        K = _load_loop(args.k)
        parse_pair(_read(args.file), K)
        out("valid pair over |K| = %d" % K.order)
    return 0


def cmd_props(args, out):
    L = _load_loop(args.file)
    props = loop_properties(L)
    out("order: %d" % L.order)
    for name in PROPERTY_FLAGS:
        out("%s: %s" % (name, "yes" if getattr(props, name) else "no"))
    return 0


def cmd_nuclei(args, out):
    L = _load_loop(args.file)
    for kind in ("left", "middle", "right", "full"):
        out("%s nucleus: %s" % (kind, _fmt_subset(nucleus(L, kind))))
    out("center: %s" % _fmt_subset(center(L)))
    if args.commutant is not None:
        subset = parse_subset(args.commutant)
        out("commutant of {%s}: %s"
            % (_fmt_subset(subset), _fmt_subset(commutant(L, subset))))
    return 0


def cmd_normal(args, out):
    L = _load_loop(args.file)
    subset = parse_subset(args.subgroup)
    out("subloop: %s" % ("yes" if is_subloop(L, subset) else "no"))
    normal = is_normal(L, subset)
    out("normal: %s" % ("yes" if normal else "no"))
    if normal:
        fl = factor_loop(L, subset)
        out("factor loop order: %d" % fl.quotient.order)
    return 0


def cmd_decompose(args, out):
    L = _load_loop(args.file)
    subset = parse_subset(args.subgroup)
    if args.transversal is None and args.kappa is None:
        pair = canonical_pair(L, subset)
    else:
        base = canonical_pair(L, subset)
        sigma = (tuple(sorted(parse_subset(args.transversal)))
                 if args.transversal is not None else base.sigma)
        kappa = (parse_map(args.kappa) if args.kappa is not None else base.kappa)
        pair = DataPair(base.K, kappa, sigma)
    dec = decompose(L, subset, pair)
    out(emit_decomposition(dec), end="")
    return 0


def cmd_extend(args, out):
    data = _load_data(args.file)
    L = schreier_loop(data)
    out(emit_loop(L), end="")
    if args.classify:
        report = classify_schreier(data)
        out("automorphism-free: %s" % ("yes" if report.automorphism_free else "no"))
        out("factor-free: %s" % ("yes" if report.factor_free else "no"))
        out("embedded subgroup left nuclear: %s"
            % ("yes" if report.g_bar_left_nuclear else "no"))
        out("embedded subgroup nuclear: %s" % ("yes" if report.g_bar_nuclear else "no"))
        out("eq2: %s" % ("yes" if report.eq2 else "no"))
        out("eq3: %s" % ("yes" if report.eq3 else "no"))
    return 0


def cmd_shift(args, out):
    if args.loop is not None:
        L = _load_loop(args.loop)
        subset = parse_subset(args.subgroup)
        K = canonical_pair(L, subset).K
        pair = parse_pair(_read(args.file), K)
        n = parse_map(args.shift)
        new_pair, data = shift_transversal(L, subset, pair, n)
        out("sigma: %s" % " ".join(str(v) for v in new_pair.sigma))
        out(emit_schreier_data(data), end="")
    else:
        from .decomposition import apply_shift
        data = _load_data(args.file)
        n = parse_map(args.shift)
        if len(n) != data.K.order or n[0] != 0 or \
                any(v not in range(data.G.order) for v in n):
            from .decomposition import BadShiftError
            raise BadShiftError("shift must be K-indexed G-values with e first")
        out(emit_schreier_data(apply_shift(data, n)), end="")
    return 0


def cmd_equiv(args, out):
    d1 = _load_data(args.file1)
    d2 = _load_data(args.file2)
    if args.wide:
        witness = wide_equivalent(d1, d2)
        if witness is None:
            out("NONE")
        else:
            mu, n = witness
            out("mu: %s" % " ".join(str(v) for v in mu))
            out("n: %s" % " ".join(str(v) for v in n))
    else:
        n = equivalent(d1, d2)
        if n is None:
            out("NONE")
        else:
            out("n: %s" % " ".join(str(v) for v in n))
    return 0


def _group_arg(spec):
    """A registry name, or a path to a table file when it contains a dot or
    slash."""
    if "/" in spec or "." in spec:
        return _load_loop(spec)
    return named_group(spec)


def cmd_gallery(args, out):
    K = _group_arg(args.k)
    G = _group_arg(args.g)
    if args.family == "bol":
        h_table, _ = right_inner_group(K)
        homs = find_homomorphisms(h_table, G)
        if args.list_homs:
            out("homomorphisms: %d" % len(homs))
            return 0
        data = example_bol(K, G, homs[args.hom])
    elif args.family == "commutator":
        homs = commutator_homomorphisms(K, G)
        if args.list_homs:
            out("homomorphisms: %d" % len(homs))
            return 0
        data = example_commutator(K, G, homs[args.hom])
    else:
        homs = find_homomorphisms(K, G)
        if args.list_homs:
            out("homomorphisms: %d" % len(homs))
            return 0
        data = example_conjugation(K, G, homs[args.hom])
    out(emit_schreier_data(data), end="")
    return 0


def cmd_enumerate(args, out):
    wanted = {}
    if args.filter:
        for tok in args.filter.split(","):
            tok = tok.strip()
            if not tok:
                continue
            value = not tok.startswith("!")
            name = tok.lstrip("!")
            if name not in PROPERTY_FLAGS:
                raise LoopError("unknown property flag %r" % name)
            wanted[name] = value
    count = 0
    for L in enumerate_loops(args.order, wanted or None):
        count += 1
        if not args.count:
            out("# loop %d" % count)
            out(emit_loop(L), end="")
    out("count: %d" % count)
    return 0


def cmd_verify(args, out):
    from . import verify
    failures = verify.run_all(out=out)
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="loopforge",
        description="Finite-algebra engine for Schreier extensions of groups by loops.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a table, data or pair file")
    p.add_argument("file")
    p.add_argument("--format", choices=("table", "data", "pair"), default="table")
    p.add_argument("--k", help="carrier table file (for --format pair)")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("props", help="loop property flags")
    p.add_argument("file")
    p.set_defaults(fn=cmd_props)

    p = sub.add_parser("nuclei", help="nuclei, center and optional commutant")
    p.add_argument("file")
    p.add_argument("--commutant", metavar="SUBSET",
                   help="comma-separated elements to take the commutant of")
    p.set_defaults(fn=cmd_nuclei)

    p = sub.add_parser("normal", help="subloop/normality report for a subset")
    p.add_argument("file")
    p.add_argument("--subgroup", required=True)
    p.set_defaults(fn=cmd_normal)

    p = sub.add_parser("decompose", help="extract Schreier data from a loop")
    p.add_argument("file")
    p.add_argument("--subgroup", required=True)
    p.add_argument("--transversal", help="comma-separated transversal elements")
    p.add_argument("--kappa", help="comma-separated coset images")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("extend", help="build the loop of a Schreier data file")
    p.add_argument("file")
    p.add_argument("--classify", action="store_true")
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("shift", help="apply a transversal shift")
    p.add_argument("file", help="data file, or pair file with --loop")
    p.add_argument("--shift", required=True, metavar="MAP",
                   help="comma-separated G-values, identity first")
    p.add_argument("--loop", help="loop table file (pair mode)")
    p.add_argument("--subgroup", help="subgroup elements (pair mode)")
    p.set_defaults(fn=cmd_shift)

    p = sub.add_parser("equiv", help="decide equivalence of two data files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--wide", action="store_true",
                   help="allow an automorphism of K")
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("gallery", help="parametric example families")
    p.add_argument("family", choices=("bol", "commutator", "conjugation"))
    p.add_argument("--k", required=True, help="group name or table file")
    p.add_argument("--g", required=True, help="group name or table file")
    p.add_argument("--hom", type=int, default=0,
                   help="index of the connecting homomorphism")
    p.add_argument("--list-homs", action="store_true",
                   help="print how many homomorphisms are available")
    p.set_defaults(fn=cmd_gallery)

    p = sub.add_parser("enumerate", help="loops of a given order up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--filter", help="comma-separated flags, e.g. right_bol,!associative")
    p.add_argument("--count", action="store_true", help="print only the count")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="run the full verification suites")
    p.set_defaults(fn=cmd_verify)

    return parser


def run(argv=None, out=None):
    stream = sys.stdout if out is None else out

    def emit(text="", end="\n"):
        stream.write(str(text) + end)

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, emit)
    except (LoopError, AssertionError, IndexError, ValueError) as exc:
        sys.stderr.write("%s: %s\n" % (type(exc).__name__, exc))
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
