"""Command-line front end.

Exit codes: 0 success (or a "true" verdict), 1 a mathematical "false",
2 bad input.  ``--json`` switches any subcommand to machine-readable output.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import lattice as lat
from . import lie_engel as le
from . import sym_modules as sm
from .tensor_core import Tensor, commutative_image, composition_sum, mobius_combination

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class _Out:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream
        self.data: dict = {}

    def line(self, text: str = "") -> None:
        if not self.as_json:
            print(text, file=self.stream)

    def put(self, key: str, value) -> None:
        self.data[key] = value

    def finish(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, sort_keys=True), file=self.stream)


def _terms(t: Tensor) -> list:
    return [[list(w), c] for w, c in t.items()]


def _show_tensor(out: _Out, t: Tensor, indent: str = "  ") -> None:
    if not t:
        out.line(f"{indent}0")
    for w, c in t.items():
        out.line(f"{indent}{' '.join(map(str, w))} : {c}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_sym_basis(args, out: _Out) -> int:
    m, n = args.m, args.n
    labels = list(sm.strict_labels(m, n))
    tensors = sm.basis_S_prime(m, n) if args.kind == "prime" else sm.basis_S_dprime(m, n)
    name = "S'" if args.kind == "prime" else "S''"
    out.line(f"basis of {name}_{n} for m={m}: {len(tensors)} elements")
    for (j, k), t in zip(labels, tensors):
        out.line(f"j={list(j)} k={list(k)}")
        _show_tensor(out, t)
    out.put("lattice", name)
    out.put("count", len(tensors))
    out.put("elements", [{"j": list(j), "k": list(k), "terms": _terms(t)} for (j, k), t in zip(labels, tensors)])
    return EXIT_OK


def cmd_gen_p(args, out: _Out) -> int:
    gens = sm.generators_P(args.m, args.n)
    out.line(f"generators of P_{args.n} for m={args.m}: {len(gens)}")
    for j, t in gens:
        out.line(f"j={list(j)}")
        _show_tensor(out, t)
    out.put("count", len(gens))
    out.put("generators", [{"j": list(j), "terms": _terms(t)} for j, t in gens])
    return EXIT_OK


def cmd_hnf_basis(args, out: _Out) -> int:
    m, n = args.m, args.n
    if args.lattice == "P":
        lattice = sm.lattice_P(m, n)
    elif args.lattice == "S'":
        lattice = sm.lattice_S_prime(m, n)
    elif args.lattice == "S''":
        lattice = sm.lattice_S_dprime(m, n)
    else:
        lattice = sm.oracle_P_lattice(m, n, args.bound if args.bound is not None else n)
    words = lattice.words
    rows = [Tensor(m, n, {w: c for w, c in zip(words, row) if c}) for row in lattice.rows]
    out.line(f"HNF basis of {args.lattice} for m={m}, n={n}: rank {lattice.rank}")
    for t in rows:
        out.line("row")
        _show_tensor(out, t)
    out.put("lattice", args.lattice)
    out.put("rank", lattice.rank)
    out.put("rows", [_terms(t) for t in rows])
    return EXIT_OK


def cmd_index(args, out: _Out) -> int:
    m, n = args.m, args.n
    fam = sm.symmetric_family(m, n)
    computed = fam.index_S()
    formula = sm.index_formula_S(m, n)
    index_p = fam.index_P()
    match = computed == formula
    out.line(f"[S'_{n} : S''_{n}] for m={m}")
    out.line(str(computed))
    out.line(f"closed form: {formula}")
    out.line(f"matches closed form: {_yes(match)}")
    out.line(f"[S'_{n} : P_{n}] = {index_p}")
    out.line(f"[P_{n} : S''_{n}] = {computed // index_p}")
    out.put("index_S", str(computed))
    out.put("closed_form", str(formula))
    out.put("matches", match)
    out.put("index_S_prime_P", str(index_p))
    return EXIT_OK if match else EXIT_FALSE


def cmd_prime_check(args, out: _Out) -> int:
    p, m = args.p, args.m
    if p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        raise ValueError(f"--p {p} is not prime")
    idx = sm.prime_index(p, m)
    holds = idx % p != 0
    out.line(f"[S'_{p} : P_{p}] for m={m} = {idx}")
    out.line(f"{p} divides index: {_yes(not holds)}")
    out.put("index", str(idx))
    out.put("holds", holds)
    return EXIT_OK if holds else EXIT_FALSE


def cmd_identity_check(args, out: _Out) -> int:
    s, n = args.s, args.n
    lhs = composition_sum(tuple(range(1, s + 1)), n, s) if s <= n else Tensor.zero(s, n)
    rhs = mobius_combination(s, n)
    ok = lhs == rhs
    image = commutative_image(rhs)
    out.line(f"inclusion-exclusion identity for s={s}, n={n}: {_yes(ok)}")
    out.line(f"terms: {len(rhs)}")
    out.line("commutative image:")
    for key, c in image.items():
        out.line(f"  {' '.join(map(str, key))} : {c}")
    out.put("holds", ok)
    out.put("terms", _terms(rhs))
    out.put("commutative_image", [[list(k), c] for k, c in image.items()])
    return EXIT_OK if ok else EXIT_FALSE


def cmd_gaussian(args, out: _Out) -> int:
    try:
        report = sm.gaussian_example_check()
    except sm.CheckFailure as exc:
        out.line(str(exc))
        out.put("passed", False)
        return EXIT_FALSE
    out.line(f"(a) four elements form a basis of P_3(Zx1+Zx2): {_yes(report.basis_spans_P3)}")
    out.line(f"(b) (1+i)(x1^(2)x2^(1))* equals the combination of cubes: {_yes(report.identity_holds)}")
    out.line(f"(c) it lies in the Z[i]-span of the four elements: {_yes(report.element_in_span)}")
    out.put("basis", report.basis_spans_P3)
    out.put("identity", report.identity_holds)
    out.put("in_span", report.element_in_span)
    out.put("passed", report.passed)
    return EXIT_OK


def _report_verdict(out: _Out, verdict: le.EngelVerdict, n: int) -> int:
    out.line(f"n-Engel: {str(verdict.holds).lower()}")
    if verdict.witness is not None:
        out.line(f"witness: {verdict.witness}")
    out.put("n", n)
    out.put("engel", verdict.holds)
    out.put("witness", None if verdict.witness is None else json.loads(json.dumps(verdict.witness)))
    return EXIT_OK if verdict.holds else EXIT_FALSE


def cmd_engel_check(args, out: _Out) -> int:
    ring = le.load_ring(args.ring)
    test = le.cg_pm_engel_test if args.signed else le.cg_engel_test
    return _report_verdict(out, test(ring, args.n), args.n)


def cmd_engel_brute(args, out: _Out) -> int:
    ring = le.load_ring(args.ring)
    return _report_verdict(out, le.brute_force_engel_test(ring, args.n, args.cap), args.n)


def cmd_count(args, out: _Out) -> int:
    count = le.condition_count(args.m, args.n)
    signed = le.signed_condition_count(args.m, args.n)
    out.line(str(count))
    out.line(f"signed conditions: {signed}")
    out.put("count", count)
    out.put("signed_count", signed)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="symengel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def mn(p):
        p.add_argument("--m", type=_positive, required=True, help="rank of M")
        p.add_argument("--n", type=_positive, required=True, help="tensor degree")

    p = add("sym-basis", cmd_sym_basis, "bases of S'_n or S''_n")
    mn(p)
    p.add_argument("--kind", choices=["prime", "dprime"], default="prime")

    mn(add("gen-p", cmd_gen_p, "generators of P_n"))

    p = add("hnf-basis", cmd_hnf_basis, "HNF basis of one of the lattices")
    mn(p)
    p.add_argument("--lattice", choices=["P", "S'", "S''", "oracle"], default="P")
    p.add_argument("--bound", type=_positive, help="coefficient bound for --lattice oracle")

    mn(add("index", cmd_index, "[S'_n : S''_n] by HNF against the closed form"))

    p = add("prime-check", cmd_prime_check, "does p divide [S'_p : P_p]")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)

    p = add("identity-check", cmd_identity_check, "inclusion-exclusion vs composition sum")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)

    add("gaussian-example", cmd_gaussian, "Gaussian-integer counterexample")

    p = add("engel-check", cmd_engel_check, "n-Engel test via composition-sum conditions")
    p.add_argument("--ring", required=True, help="ring JSON file")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--signed", action="store_true", help="use the signed condition family")

    p = add("engel-brute", cmd_engel_brute, "n-Engel test by enumerating the ring")
    p.add_argument("--ring", required=True, help="ring JSON file")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--cap", type=_positive, default=le.DEFAULT_BRUTE_FORCE_CAP)

    mn(add("count", cmd_count, "number of conditions per generator y"))
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = _Out(args.json, stdout)
    try:
        code = args.func(args, out)
    except (le.RingFormatError, le.BruteForceCapError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    out.finish()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
