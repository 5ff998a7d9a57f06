"""Batch command-line surface.

Deterministic JSON in, JSON or CSV out; identical inputs produce byte-identical
outputs.  Every emitted table row carries the originating parameter and the
engine version.  Exit codes: 0 pass, 1 verification failure, 2 input error,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import __version__, caps
from .gl_params import GLParam, height
from .hecke_modules import (
    bz_derivative,
    composition_factors,
    hermitian_form,
    simple_module,
    sm_character_decompose,
    standard_module,
)
from .multisegment import Multisegment, classify, speh
from .transfer import gamma_irreducible, gamma_standard

COMMANDS = ("gamma", "compose", "unitarity-scan", "dirac-scan", "bz", "verify", "selftest")


class InputError(ValueError):
    pass


def _load_input(arg):
    if arg is None:
        raise InputError("this command requires --input")
    text = arg
    if not arg.lstrip().startswith(("{", "[")):
        try:
            with open(arg) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError("cannot read input file: %s" % e)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("malformed input JSON: %s" % e)


def _param_from(d) -> GLParam:
    try:
        return GLParam.from_json(d)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError("bad parameter: %s" % e)


def _ms_from(d) -> Multisegment:
    try:
        return Multisegment.from_json(d)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError("bad multisegment: %s" % e)


def _emit(args, payload, csv_rows=None):
    if args.format == "csv" and csv_rows is not None:
        buf = io.StringIO()
        for row in csv_rows:
            buf.write(",".join(str(x) for x in row) + "\n")
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _partition_json(d):
    return {str(list(k)): v for k, v in sorted(d.items())}


def cmd_gamma(args):
    data = _load_input(args.input)
    if isinstance(data, dict):
        data = [data]
    rows = []
    for d in data:
        p = _param_from(d)
        h = height(p)
        row = {"param": p.to_json(), "engine": __version__, "height": h}
        m = d.get("m", h)
        if m is None or h is None or m != h:
            row["zero"] = True
            row["m"] = m
        else:
            res = gamma_standard(p, m)
            row.update(res.to_json())
            row["m"] = m
            row["sm_character"] = _partition_json(sm_character_decompose(res.module))
            irr = gamma_irreducible(p, m)
            row["irreducible_image"] = {
                "dim": irr.module.dim,
                "multisegment": irr.multisegment.to_json(),
            }
        rows.append(row)
    _emit(args, rows)
    return 0


def cmd_compose(args):
    data = _load_input(args.input)
    if isinstance(data, dict):
        data = [data]
    out = []
    csv_rows = [("origin", "multisegment", "multiplicity", "engine")]
    for d in data:
        if "multisegment" in d:
            ms = _ms_from(d["multisegment"])
            origin = repr(ms)
        else:
            p = _param_from(d)
            if height(p) is None:
                raise InputError("parameter has height minus infinity")
            from .multisegment import from_params

            ms = from_params(p.lambda_L, p.lambda_R)
            origin = repr(p)
        table = composition_factors(standard_module(ms))
        entry = {"origin": origin, "engine": __version__, "factors": table.to_json()}
        out.append(entry)
        for row in sorted(table.to_json(), key=lambda r: json.dumps(r, sort_keys=True)):
            csv_rows.append((origin, json.dumps(row["multisegment"]).replace(",", ";"),
                             row["multiplicity"], __version__))
    _emit(args, out, csv_rows)
    return 0


def _unitarity_row(d):
    p = _param_from(d)
    h = height(p)
    row = {"param": p.to_json(), "engine": __version__, "height": h}
    if h is None:
        row["zero"] = True
        return row
    res = gamma_irreducible(p, h)
    rep = hermitian_form(res.module)
    row.update({
        "multisegment": res.multisegment.to_json(),
        "dim": res.module.dim,
        "hermitian": rep.exists,
        "signature": list(rep.signature) if rep.signature else None,
        "unitary": rep.unitary,
    })
    return row


def cmd_unitarity_scan(args):
    data = _load_input(args.input)
    params = data["params"] if isinstance(data, dict) else data
    if args.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            rows = pool.map(_unitarity_row, params)
    else:
        rows = [_unitarity_row(d) for d in params]
    rows.sort(key=lambda r: json.dumps(r["param"], sort_keys=True))
    csv_rows = [("param", "dim", "hermitian", "unitary", "engine")]
    for r in rows:
        csv_rows.append((json.dumps(r["param"]).replace(",", ";"), r.get("dim", 0),
                         r.get("hermitian", False), r.get("unitary", False), __version__))
    _emit(args, rows, csv_rows)
    return 0


def _dirac_row(nd):
    n, d = nd
    from .gl_params import speh_param
    from .transfer import gamma_irreducible as gi

    p = speh_param(n, d)
    res = gi(p, n * d)
    rep = hermitian_form(res.module)
    cls = classify(speh(n, d))
    return {
        "n": n, "d": d, "param": p.to_json(), "engine": __version__,
        "dim": res.module.dim,
        "twisted_elliptic": cls.is_twisted_elliptic,
        "ladder": cls.is_ladder,
        "unitary": rep.unitary,
    }


def cmd_dirac_scan(args):
    data = _load_input(args.input) if args.input else {}
    max_total = int(data.get("max_total", 6)) if isinstance(data, dict) else 6
    cases = sorted((n, d) for n in range(1, max_total + 1)
                   for d in range(1, max_total + 1) if n * d <= max_total)
    if args.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            rows = pool.map(_dirac_row, cases)
    else:
        rows = [_dirac_row(nd) for nd in cases]
    rows.sort(key=lambda r: (r["n"] * r["d"], r["n"]))
    csv_rows = [("n", "d", "twisted_elliptic", "unitary", "engine")]
    for r in rows:
        csv_rows.append((r["n"], r["d"], r["twisted_elliptic"], r["unitary"], __version__))
    _emit(args, rows, csv_rows)
    return 0


def cmd_bz(args):
    data = _load_input(args.input)
    if isinstance(data, dict):
        data = [data]
    out = []
    for d in data:
        ms = _ms_from(d["multisegment"])
        tau = tuple(int(x) for x in d["tau"])
        S = simple_module(ms)
        der = bz_derivative(S, tau)
        row = {
            "origin": {"multisegment": ms.to_json(), "tau": list(tau)},
            "engine": __version__,
            "dim": der.dim,
            "rank": der.m,
        }
        if der.dim and der.m > 0:
            row["factors"] = composition_factors(der).to_json()
            row["sm_character"] = _partition_json(sm_character_decompose(der))
        out.append(row)
    _emit(args, out)
    return 0


def cmd_verify(args):
    from .acceptance import run_all

    results = run_all(verbose=True)
    return 0 if all(r.passed for r in results) else 1


def selftest_report(corrupt=False):
    """Algebra relation families, associativity fuzz, involution identities.

    corrupt=True perturbs one generator before checking: the negative-control
    fixture, which must report failures.
    """
    import random

    from .hecke_algebra import HeckeElement, im_involution, multiply, parabolic_decompose, reassemble, star

    failures = []
    for m in range(2, 5):
        one = HeckeElement.one(m)
        S = [HeckeElement.s_gen(m, i) for i in range(1, m)]
        Y = [HeckeElement.y_gen(m, j) for j in range(1, m + 1)]
        if corrupt:
            Y[0] = Y[0] + one  # simulated corrupted build
        for i in range(m):
            for j in range(m):
                if multiply(Y[i], Y[j]) != multiply(Y[j], Y[i]):
                    failures.append("m=%d: y%d y%d commute" % (m, i + 1, j + 1))
        for i in range(m - 1):
            if multiply(S[i], S[i]) != one:
                failures.append("m=%d: s%d squared" % (m, i + 1))
            for j in range(i + 2, m - 1):
                if multiply(S[i], S[j]) != multiply(S[j], S[i]):
                    failures.append("m=%d: s%d s%d commute" % (m, i + 1, j + 1))
            if i < m - 2:
                if multiply(multiply(S[i], S[i + 1]), S[i]) != multiply(multiply(S[i + 1], S[i]), S[i + 1]):
                    failures.append("m=%d: braid %d" % (m, i + 1))
            if multiply(S[i], Y[i]) - multiply(Y[i + 1], S[i]) != one:
                failures.append("m=%d: cross relation %d" % (m, i + 1))
            for j in range(m):
                if j not in (i, i + 1) and multiply(S[i], Y[j]) != multiply(Y[j], S[i]):
                    failures.append("m=%d: s%d y%d commute" % (m, i + 1, j + 1))
    rng = random.Random(2024)

    def rand_elt(m):
        e = HeckeElement.zero(m)
        for _ in range(3):
            w = list(range(1, m + 1))
            rng.shuffle(w)
            alpha = tuple(rng.randint(0, 2) for _ in range(m))
            e = e + HeckeElement(m, {(tuple(w), alpha): rng.randint(-3, 3)})
        return e

    for _ in range(8):
        a, b, c = rand_elt(3), rand_elt(3), rand_elt(3)
        if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
            failures.append("associativity")
        if star(multiply(a, b)) != multiply(star(b), star(a)):
            failures.append("star anti-homomorphism")
        if star(star(a)) != a:
            failures.append("star involution")
        if im_involution(multiply(a, b)) != multiply(im_involution(a), im_involution(b)):
            failures.append("IM homomorphism")
        if im_involution(im_involution(a)) != a:
            failures.append("IM involution")
        if reassemble(parabolic_decompose(a, (2, 1)), 3) != a:
            failures.append("parabolic reassembly")
    return failures


def cmd_selftest(args):
    corrupt = False
    if args.input:
        data = _load_input(args.input)
        corrupt = bool(data.get("corrupt", False)) if isinstance(data, dict) else False
    failures = selftest_report(corrupt=corrupt)
    if failures:
        for f in sorted(set(failures)):
            print("FAIL %s" % f)
        return 1
    print("selftest: all identities hold")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="glhecke",
        description="Exact workbench for graded Hecke algebra modules and the GL(n,C) transfer",
    )
    ap.add_argument("--command", required=True, choices=COMMANDS)
    ap.add_argument("--input", help="path to a JSON file, or inline JSON")
    ap.add_argument("--output", help="output path (default stdout)")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--max-rank", type=int, default=None)
    ap.add_argument("--max-dim", type=int, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "gamma": cmd_gamma,
        "compose": cmd_compose,
        "unitarity-scan": cmd_unitarity_scan,
        "dirac-scan": cmd_dirac_scan,
        "bz": cmd_bz,
        "verify": cmd_verify,
        "selftest": cmd_selftest,
    }
    try:
        with caps.caps(max_dim=args.max_dim, max_rank=args.max_rank):
            return handlers[args.command](args)
    except caps.CapExceeded as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except InputError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
