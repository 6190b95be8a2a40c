"""Command-line interface: ``python3 -m spinexp <command> ...``.

Exit codes: 0 success, 2 parse error, 3 structural violation, 4 verification
deviation above 1e-8, 5 decomposition failure.
"""

import argparse
import json
import statistics
import sys
import time

import numpy as np

from .clifford import named_basis, verify_basis
from .core import DomainError
from .expm import exp_so3, exp_so3_quaternion, exp_spin_element
from .minpoly import classify_sp4, classify_su4
from .oracle import series_expm
from .sp4 import DecompositionError, decompose_sp4, reconstruct_sp4
from .spin import exp_so5, exp_so6

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_VERIFY, EXIT_DECOMP = 0, 2, 3, 4, 5
VERIFY_TOL = 1e-8
GROUP_DIM = {"so3": 3, "so5": 5, "so6": 6, "sp4": 4, "sp4hat": 4, "su4": 4}


class ParseError(ValueError):
    pass


# matrix files

def load_matrix(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return matrix_from_doc(doc)


def matrix_from_doc(doc):
    if not isinstance(doc, dict):
        raise ParseError("matrix file must be a JSON object")
    for key in ("rows", "cols", "field", "data"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    rows, cols, fld, data = doc["rows"], doc["cols"], doc["field"], doc["data"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows > 0 and cols > 0):
        raise ParseError("rows and cols must be positive integers")
    if fld not in ("real", "complex"):
        raise ParseError("field must be 'real' or 'complex'")
    if not isinstance(data, list) or len(data) != rows or any(
        not isinstance(r, list) or len(r) != cols for r in data
    ):
        raise ParseError("data dimensions do not match rows x cols")
    try:
        if fld == "real":
            out = np.array(data, dtype=float)
            if out.shape != (rows, cols):
                raise ParseError("real data must be numbers")
        else:
            arr = np.array(data, dtype=float)
            if arr.shape != (rows, cols, 2):
                raise ParseError("complex data must be [re, im] pairs")
            out = arr[..., 0] + 1j * arr[..., 1]
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"non-numeric entry: {exc}") from exc
    if not np.all(np.isfinite(out)):
        raise ParseError("entries must be finite")
    return out


def matrix_to_doc(m, fld=None):
    m = np.asarray(m)
    if fld is None:
        fld = "complex" if np.iscomplexobj(m) else "real"
    if fld == "real":
        data = [[float(v) for v in row] for row in np.real(m)]
    else:
        m = m.astype(complex)
        data = [[[float(v.real), float(v.imag)] for v in row] for row in m]
    return {"rows": m.shape[0], "cols": m.shape[1], "field": fld, "data": data}


def dumps(doc):
    return json.dumps(doc, sort_keys=True)


def _emit(text, path=None):
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def format_poly(coeffs):
    """Human-readable polynomial from lowest-first complex coefficients."""
    terms = []
    deg = len(coeffs) - 1
    for k in range(deg, -1, -1):
        c = complex(coeffs[k])
        if abs(c) < 1e-12:
            continue
        re, im = round(c.real, 12), round(c.imag, 12)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if im == 0:
            num = f"{abs(re):.12g}"
            sign = "-" if re < 0 else "+"
            body = mono if (num == "1" and mono) else (f"{num} {mono}".strip())
        elif re == 0:
            num = f"{abs(im):.12g}"
            sign = "-" if im < 0 else "+"
            body = f"{'' if num == '1' else num}i {mono}".strip()
        else:
            sign, body = "+", f"({re:.12g}{im:+.12g}i) {mono}".strip()
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _coeff_list(poly):
    return [[float(np.real(c)), float(np.imag(c))] for c in poly.coef]


# commands

def _expm_value(group, x, route):
    n = GROUP_DIM[group]
    if x.shape != (n, n):
        raise DomainError(f"{group} needs a {n}x{n} matrix")
    if group == "so3":
        return exp_so3_quaternion(x) if route == "quaternion" else exp_so3(x), "real"
    if group == "so5":
        return exp_so5(x), "real"
    if group == "so6":
        return exp_so6(x), "real"
    return exp_spin_element(x, group).value, "complex"


def cmd_expm(args):
    x = load_matrix(args.input)
    value, fld = _expm_value(args.group, x, args.route)
    _emit(dumps(matrix_to_doc(value, fld)), args.output)
    if args.verify:
        dev = float(np.linalg.norm(value - series_expm(x)))
        report = {"deviation": dev, "ok": dev <= VERIFY_TOL}
        print(dumps(report) if args.json else f"deviation from series oracle: {dev:.3e}")
        if dev > VERIFY_TOL:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_classify(args):
    x = load_matrix(args.input)
    if args.algebra == "su4":
        r = classify_su4(x)
        rep = {
            "algebra": "su4",
            "case": r.case,
            "degree": r.degree,
            "poly": _coeff_list(r.poly),
            "poly_text": format_poly(r.poly.coef),
            "E2": r.e2,
            "E3_imag": r.e3_imag,
            "E4": r.e4,
            "det": r.e4,
            "fnorm_sq": r.fnorm_sq,
        }
    else:
        r = classify_sp4(x, args.algebra)
        rep = {
            "algebra": args.algebra,
            "case": r.case,
            "degree": r.degree,
            "poly": _coeff_list(r.poly),
            "poly_text": format_poly(r.poly.coef),
            "det": r.det,
            "fnorm_sq": r.fnorm_sq,
        }
    if args.json:
        print(dumps(rep))
    else:
        for k in rep:
            if k != "poly":
                print(f"{k}: {rep[k]}")
    return EXIT_OK


VERIFY_NAMES = {"F": "F", "Y": "Y", "g": "g", "fhat": "f_hat"}


def cmd_verify_basis(args):
    names = list(VERIFY_NAMES) if args.name == "all" else [args.name]
    results = {}
    all_ok = True
    for name in names:
        basis, rev, cc = named_basis(VERIFY_NAMES[name])
        if args.perturb:
            vecs = list(basis.vectors)
            vecs[0] = vecs[0] + 1e-9 * np.eye(basis.dim)
            basis = type(basis)(basis.signature, tuple(vecs), basis.name)
        rep = verify_basis(basis, rev, cc)
        results[name] = {label: ok for label, ok in rep.checks}
        all_ok = all_ok and rep.ok
        if not args.json:
            for label, ok in rep.checks:
                print(f"{name}: {label}: {'pass' if ok else 'FAIL'}")
    if args.json:
        print(dumps({"ok": all_ok, "bases": results}))
    return EXIT_OK if all_ok else 1


def cmd_decompose_sp4(args):
    x = load_matrix(args.input)
    try:
        p = decompose_sp4(x)
    except DecompositionError as exc:
        print(dumps({"error": str(exc), "residual": exc.residual}))
        return EXIT_DECOMP
    resid = float(np.linalg.norm(reconstruct_sp4(p) - x))
    print(dumps({"params": p.as_dict(), "residual": resid}))
    return EXIT_OK


def random_antisymmetric(rng, n):
    """Upper-triangle entries uniform in [-1, 1], antisymmetrized."""
    u = np.triu(rng.uniform(-1.0, 1.0, (n, n)), 1)
    return u - u.T


def run_bench(sizes, count, seed, timing=True):
    report = {"seed": seed, "count": count, "prng": "numpy PCG64 via default_rng([seed, size, trial])", "sizes": {}}
    for n in sizes:
        fn = {3: exp_so3, 5: exp_so5, 6: exp_so6}[n]
        spin_t, oracle_t, dev = [], [], 0.0
        for trial in range(count):
            x = random_antisymmetric(np.random.default_rng([seed, n, trial]), n)
            t0 = time.perf_counter()
            r = fn(x)
            t1 = time.perf_counter()
            ref = series_expm(x)
            t2 = time.perf_counter()
            spin_t.append(t1 - t0)
            oracle_t.append(t2 - t1)
            dev = max(dev, float(np.linalg.norm(r - ref) / np.linalg.norm(ref)))
        entry = {"max_rel_deviation": dev}
        if timing:
            entry["spin_median_s"] = statistics.median(spin_t)
            entry["oracle_median_s"] = statistics.median(oracle_t)
        report["sizes"][str(n)] = entry
    return report


def cmd_bench(args):
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError as exc:
        raise ParseError(f"bad --sizes: {args.sizes}") from exc
    if not sizes or any(s not in (3, 5, 6) for s in sizes):
        raise ParseError("--sizes entries must be 3, 5 or 6")
    if args.count < 1:
        raise ParseError("--count must be positive")
    rep = run_bench(sizes, args.count, args.seed, timing=not args.no_timing)
    if args.json:
        print(dumps(rep))
    else:
        for n, e in rep["sizes"].items():
            line = f"so({n}): max relative deviation {e['max_rel_deviation']:.3e}"
            if "spin_median_s" in e:
                line += f", spin median {e['spin_median_s'] * 1e6:.1f} us, oracle median {e['oracle_median_s'] * 1e6:.1f} us"
            print(line)
    worst = max(e["max_rel_deviation"] for e in rep["sizes"].values())
    return EXIT_OK if worst <= VERIFY_TOL else EXIT_VERIFY


def build_parser():
    p = argparse.ArgumentParser(prog="spinexp", description="Closed-form exponentials via spin groups.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expm", help="exponentiate a matrix")
    e.add_argument("--group", required=True, choices=sorted(GROUP_DIM))
    e.add_argument("--input", required=True)
    e.add_argument("--output")
    e.add_argument("--verify", action="store_true")
    e.add_argument("--route", choices=("cubic", "quaternion"), default="cubic")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_expm)

    c = sub.add_parser("classify", help="minimal polynomial of an sp(4) or su(4) element")
    c.add_argument("--algebra", required=True, choices=("sp4", "sp4hat", "su4"))
    c.add_argument("--input", required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify-basis", help="check the named 1-vector bases")
    v.add_argument("--name", default="all", choices=("F", "Y", "g", "fhat", "all"))
    v.add_argument("--perturb", action="store_true", help="inject a tiny perturbation; must fail")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify_basis)

    d = sub.add_parser("decompose-sp4", help="parameters of an Sp(4) element")
    d.add_argument("--input", required=True)
    d.add_argument("--json", action="store_true", help="accepted for uniformity; output is always JSON")
    d.set_defaults(func=cmd_decompose_sp4)

    b = sub.add_parser("bench", help="spin route vs series oracle on random antisymmetric matrices")
    b.add_argument("--sizes", default="5,6")
    b.add_argument("--count", type=int, default=100)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--no-timing", action="store_true", help="omit timings for byte-identical output")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"structural violation: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


__all__ = ["main", "build_parser", "load_matrix", "matrix_to_doc", "matrix_from_doc", "format_poly", "run_bench"]
