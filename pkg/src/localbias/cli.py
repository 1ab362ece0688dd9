"""Command-line interface.

Exit codes: 0 success / verified true, 1 verified false / not found,
2 usage or parse error, 3 infeasible / budget exhausted. The first output
line is always `ok|fail|error <summary>`.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import build, census, fileio, lattice
from .codes import hamming_code
from .cube import (are_isomorphic, degree_weight, is_locally_biased,
                   is_locally_stable, walsh_transform)
from .scenery import (DEFAULT_SEED, chi_square_report, distributions_equal,
                      exact_scenery_distribution, sample_scenery_counts)

OK, FAIL, USAGE, INFEASIBLE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad rational {text!r}: {exc}")


def _load_cube(path):
    return fileio.parse_cube(fileio.read_text(path))


def _emit(f, out):
    text = fileio.format_cube(f)
    if out:
        fileio.write_text(out, text)
    else:
        sys.stdout.write(text)


def _word_str(word) -> str:
    return "".join("+" if s > 0 else "-" for s in word)


def _build_parser() -> _Parser:
    parser = _Parser(prog="localbias")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="64-bit seed for randomized paths (fixed default)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker count (accepted for compatibility)")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a function and write it as a cube file")
    c.add_argument("builder", choices=[
        "g_n", "h", "h_k", "m_over_n", "from_code", "tensor_lift", "product",
        "signature", "stable_parity", "stable_from_biased", "stable_extend"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--c", type=int)
    c.add_argument("--sig", default="")
    c.add_argument("--fn")
    c.add_argument("--fn-a")
    c.add_argument("--fn-b")
    c.add_argument("--code")
    c.add_argument("--out")

    v = sub.add_parser("verify", help="check local bias or stability of a cube file")
    v.add_argument("--fn", required=True)
    v.add_argument("--kind", choices=["biased", "stable"], required=True)

    s = sub.add_parser("spectrum", help="print the nonzero Walsh coefficients")
    s.add_argument("--fn", required=True)
    s.add_argument("--weight-at", type=int, default=None)

    i = sub.add_parser("isomorphic", help="decide isomorphism of two cube files")
    i.add_argument("--fn-a", required=True)
    i.add_argument("--fn-b", required=True)
    i.add_argument("--exact-bound", type=int, default=None)
    i.add_argument("--budget", type=int, default=None)

    e = sub.add_parser("enumerate", help="enumerate constant-profile functions")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--p", default=None)
    e.add_argument("--kind", choices=["biased", "stable"], default="biased")
    e.add_argument("--mode", choices=["oracle", "backtrack"], default="backtrack")

    k = sub.add_parser("count", help="counting identities")
    k.add_argument("--what", choices=["solutions", "partitions", "bound"], required=True)
    k.add_argument("--k", type=int, required=True)

    sc = sub.add_parser("scenery", help="exact and sampled scenery distributions")
    scsub = sc.add_subparsers(dest="scenery_command", required=True)
    se = scsub.add_parser("exact")
    se.add_argument("--fn", required=True)
    se.add_argument("--len", type=int, required=True)
    ss = scsub.add_parser("sample")
    ss.add_argument("--fn", required=True)
    ss.add_argument("--len", type=int, required=True)
    ss.add_argument("--n-samples", type=int, required=True)
    sc2 = scsub.add_parser("compare")
    sc2.add_argument("--fn-a", required=True)
    sc2.add_argument("--fn-b", required=True)
    sc2.add_argument("--len", type=int, required=True)

    la = sub.add_parser("lattice", help="lattice extension and verification")
    lasub = la.add_subparsers(dest="lattice_command", required=True)
    le = lasub.add_parser("extend")
    le.add_argument("--fn", required=True)
    le.add_argument("--out")
    lv = lasub.add_parser("verify")
    lv.add_argument("--file", required=True)

    ca = sub.add_parser("cayley", help="Cayley-Z colorings")
    casub = ca.add_subparsers(dest="cayley_command", required=True)
    cs = casub.add_parser("search")
    cs.add_argument("--gens", required=True)
    cs.add_argument("--p", required=True)
    cs.add_argument("--pmax", type=int, required=True)
    cb = casub.add_parser("build")
    cb.add_argument("--a", type=int, required=True)
    cb.add_argument("--b", type=int, required=True)
    cb.add_argument("--out")
    cv = casub.add_parser("verify")
    cv.add_argument("--file", required=True)

    t = sub.add_parser("tree", help="greedy regular-tree labelings")
    tsub = t.add_subparsers(dest="tree_command", required=True)
    tg = tsub.add_parser("greedy")
    tg.add_argument("--deg", type=int, required=True)
    tg.add_argument("--depth", type=int, required=True)
    tg.add_argument("--b", type=int, required=True)
    tg.add_argument("--random", action="store_true")
    return parser


def _cmd_construct(args) -> int:
    b = args.builder
    if b == "g_n":
        f = build.parity_g(args.n)
    elif b == "h":
        f = build.base_h()
    elif b == "h_k":
        f = build.h_k(args.k)
    elif b == "m_over_n":
        f = build.biased_m_over_n(args.k, args.m)
    elif b == "from_code":
        if args.code:
            code = fileio.parse_code(fileio.read_text(args.code))
        else:
            code = hamming_code(args.k)
        f = build.biased_from_code(code)
    elif b == "tensor_lift":
        f = build.tensor_lift(_load_cube(args.fn), args.c)
    elif b == "product":
        f = build.product(_load_cube(args.fn_a), _load_cube(args.fn_b))
    elif b == "signature":
        sig = [int(t) for t in args.sig.split(",") if t]
        f = build.half_biased_from_signature(args.n, sig)
    elif b == "stable_parity":
        f = build.stable_parity(args.n, args.m)
    elif b == "stable_from_biased":
        f = build.stable_from_biased(_load_cube(args.fn))
    else:  # stable_extend
        f = build.stable_extend(_load_cube(args.fn), args.n)
    print(f"ok constructed {b} n={f.n}")
    _emit(f, args.out)
    return OK


def _cmd_verify(args) -> int:
    f = _load_cube(args.fn)
    p = is_locally_biased(f) if args.kind == "biased" else is_locally_stable(f)
    if p is None:
        print(f"fail not locally {args.kind}")
        return FAIL
    print(f"ok {args.kind} p={p}")
    return OK


def _cmd_spectrum(args) -> int:
    f = _load_cube(args.fn)
    spec = walsh_transform(f)
    if args.weight_at is not None:
        w = degree_weight(spec, args.weight_at)
        print(f"ok weight degree={args.weight_at} {w}")
        return OK
    print(f"ok spectrum n={f.n} nonzero={len(spec.support())}")
    for mask in spec.support():
        coords = ",".join(str(i + 1) for i in range(f.n) if (mask >> i) & 1) or "-"
        print(f"S={{{coords}}} c={spec.coeff(mask)}")
    return OK


def _cmd_isomorphic(args) -> int:
    fa, fb = _load_cube(args.fn_a), _load_cube(args.fn_b)
    kwargs = {}
    if args.exact_bound is not None:
        kwargs["exact_bound"] = args.exact_bound
    if args.budget is not None:
        kwargs["node_budget"] = args.budget
    verdict = are_isomorphic(fa, fb, **kwargs)
    if verdict.status == "isomorphic":
        a = verdict.witness
        print(f"ok isomorphic perm={','.join(map(str, a.perm))} flips={a.flips}")
        return OK
    if verdict.status == "non-isomorphic":
        print(f"fail non-isomorphic: {verdict.certificate}")
        return FAIL
    print(f"error unknown: {verdict.certificate}")
    return INFEASIBLE


def _cmd_enumerate(args) -> int:
    p = _fraction(args.p) if args.p is not None else None
    fn = (census.enumerate_locally_biased if args.kind == "biased"
          else census.enumerate_locally_stable)
    try:
        report = fn(args.n, p, mode=args.mode)
    except ValueError as exc:
        print(f"error {exc}")
        return INFEASIBLE
    print(f"ok enumerated n={args.n} kind={args.kind} "
          f"functions={report.total_functions} classes={len(report.class_representatives)} "
          f"nodes={report.nodes_visited}")
    for rep in report.class_representatives:
        print(fileio.format_cube(rep).splitlines()[1])
    return OK


def _cmd_count(args) -> int:
    if args.what == "solutions":
        print(f"ok solutions k={args.k} {census.count_solutions_leq(args.k)}")
    elif args.what == "partitions":
        print(f"ok partitions k={args.k} {census.count_partitions(args.k)}")
    else:
        exact, bound = census.half_biased_lower_bound(args.k)
        print(f"ok bound n={args.k} exact={exact} binomial={bound}")
    return OK


def _cmd_scenery(args) -> int:
    if args.scenery_command == "exact":
        f = _load_cube(args.fn)
        dist = exact_scenery_distribution(f, args.len)
        print(f"ok exact len={args.len} words={len(dist.probs)}")
        for word in dist.sorted_words():
            pr = dist.probs[word]
            print(f"{_word_str(word)} {pr.numerator}/{pr.denominator}")
        return OK
    if args.scenery_command == "sample":
        f = _load_cube(args.fn)
        counts = sample_scenery_counts(f, args.len, args.n_samples,
                                               seed=args.seed)
        ref = exact_scenery_distribution(f, args.len)
        report = chi_square_report(counts, ref)
        print(f"ok sample n={args.n_samples} chi2={report.statistic:.3f} dof={report.dof}")
        for word in sorted(counts, key=lambda w: tuple(0 if s > 0 else 1 for s in w)):
            print(f"{_word_str(word)} {counts[word]}")
        return OK
    fa, fb = _load_cube(args.fn_a), _load_cube(args.fn_b)
    da = exact_scenery_distribution(fa, args.len)
    db = exact_scenery_distribution(fb, args.len)
    if distributions_equal(da, db):
        print("ok equal")
        return OK
    print("fail distributions differ")
    return FAIL


def _cmd_lattice(args) -> int:
    if args.lattice_command == "extend":
        f = _load_cube(args.fn)
        g = lattice.extend_to_lattice(f)
        p = lattice.verify_lattice_bias(g)
        print(f"ok extended n={g.n} p={p}")
        text = fileio.format_lattice(g)
        if args.out:
            fileio.write_text(args.out, text)
        else:
            sys.stdout.write(text)
        return OK
    g = fileio.parse_lattice(fileio.read_text(args.file))
    p = lattice.verify_lattice_bias(g)
    if p is None:
        print("fail not locally biased")
        return FAIL
    print(f"ok biased p={p}")
    return OK


def _cmd_cayley(args) -> int:
    if args.cayley_command == "search":
        gens = [int(t) for t in args.gens.split(",") if t]
        results = lattice.search_cayley(gens, args.pmax, _fraction(args.p))
        print(f"ok search gens={args.gens} p={args.p} pmax={args.pmax} "
              f"classes={len(results)}")
        for f in results:
            print(f"{f.period} {f.pattern_string()}")
        return OK if results else FAIL
    if args.cayley_command == "build":
        f = lattice.cayley_half_biased(args.a, args.b)
        print(f"ok built period={f.period}")
        text = fileio.format_cayley(f)
        if args.out:
            fileio.write_text(args.out, text)
        else:
            sys.stdout.write(text)
        return OK
    f = fileio.parse_cayley(fileio.read_text(args.file))
    p = lattice.verify_cayley_bias(f)
    if p is None:
        print("fail not locally biased")
        return FAIL
    print(f"ok biased p={p}")
    return OK


def _cmd_tree(args) -> int:
    rng = np.random.Generator(np.random.Philox(args.seed)) if args.random else None
    labeling = lattice.tree_greedy(args.deg, args.depth, args.b, rng=rng)
    ok = lattice.verify_tree_quota(labeling, args.b)
    status = "ok" if ok else "fail"
    print(f"{status} tree deg={args.deg} depth={args.depth} b={args.b} "
          f"size={labeling.signs.shape[0]}")
    print(_word_str(labeling.signs))
    return OK if ok else FAIL


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "isomorphic": _cmd_isomorphic,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "scenery": _cmd_scenery,
    "lattice": _cmd_lattice,
    "cayley": _cmd_cayley,
    "tree": _cmd_tree,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error usage: {exc}")
        return USAGE
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"error usage: {exc}")
        return USAGE
    except fileio.ParseError as exc:
        print(f"error parse: {exc}")
        return USAGE
    except (ValueError, OSError) as exc:
        print(f"error {exc}")
        return USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
