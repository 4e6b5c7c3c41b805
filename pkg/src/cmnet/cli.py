"""Command line front-end: ``cmnet table|verify|gvalue``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .errors import CMNetError, ConfigError
from .instances import Instance, example_instance, load_instance
from .order import OrderElem, format_order_elem, parse_order_elem
from .primes import parse_prime, prime_above
from .suites import SUITES, box_vectors, run_suite
from .theorems import F_at, denominator_generator, g_direct, quadratic_form_F

TABLE_COLUMNS = ("alpha", "x", "y", "B", "Psi", "F", "Psihat", "Phi")
BUILTIN = {"example1": 1, "example2": 2}

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def resolve_instance(spec: str) -> Instance:
    """A config path, or one of the shipped names ``example1``/``example2``."""
    if spec in BUILTIN and not Path(spec).exists():
        return example_instance(BUILTIN[spec])
    return load_instance(spec)


def table_rows(inst: Instance, box: int) -> list[dict]:
    L = inst.lattice
    F = quadratic_form_F(L, inst.primes)
    rows = []
    for v in box_vectors(box):
        R = L.point(v)
        if R.is_infinity:
            continue
        Fv = F_at(F, v)
        psi = L.psi(v)
        rows.append({
            "alpha": format_order_elem(OrderElem(v[0], v[1], inst.params)),
            "x": str(R.x),
            "y": str(R.y),
            "B": str(denominator_generator(L, v)),
            "Psi": str(psi),
            "F": str(Fv),
            "Psihat": str(Fv.generator(inst.params) * psi),
            "Phi": str(L.phi(v)),
        })
    return rows


def cmd_table(inst: Instance, box: int, fmt: str = "csv") -> str:
    rows = table_rows(inst, box) if box > 0 else []
    if fmt == "json":
        return json.dumps({"instance": inst.name, "columns": list(TABLE_COLUMNS), "rows": rows}, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_verify(inst: Instance, suite: str, seed: int = 0, box: int | None = None,
               quiet: bool = False) -> tuple[int, dict]:
    result = run_suite(inst, suite, seed, box)
    result["failures"] = [c for c in result["checks"] if not c["pass"]]
    if quiet:
        result["checks"] = [c for c in result["checks"] if not c["pass"] or "skip_reason" in c]
    code = EXIT_PASS if result["summary"]["fail"] == 0 else EXIT_FAIL
    return code, result


def parse_prime_spec(text: str, params):
    """``p=3;gen=1-1*w``, a bare rational prime, or a generator element."""
    text = text.strip()
    if "=" in text:
        return parse_prime(text, params)
    if text.lstrip("+-").isdigit():
        return prime_above(int(text), params, None)
    gen = parse_order_elem(text, params)
    n = gen.norm()
    for p in range(2, n + 1):
        if n % p == 0:
            return prime_above(p, params, text)
    raise ConfigError(f"{text!r} does not generate a prime ideal")


def cmd_gvalue(inst: Instance, z: str, prime: str) -> int:
    zz = parse_order_elem(z, inst.params)
    return g_direct(inst.lattice, zz.vector, parse_prime_spec(prime, inst.params))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cmnet", description="Elliptic nets over imaginary quadratic orders.")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate points, denominators and net values over a box")
    t.add_argument("--config", required=True)
    t.add_argument("--box", type=int, default=None)
    t.add_argument("--format", choices=("csv", "json"), default="csv")

    v = sub.add_parser("verify", help="run a verification sweep and print a JSON report")
    v.add_argument("--config", required=True)
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--box", type=int, default=None)
    v.add_argument("--quiet", action="store_true", help="list only failures and skips")

    g = sub.add_parser("gvalue", help="print the cancellation exponent g at one prime")
    g.add_argument("--config", required=True)
    g.add_argument("--z", required=True)
    g.add_argument("--prime", required=True)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inst = resolve_instance(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CMNetError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.command == "table":
            box = args.box if args.box is not None else inst.box
            sys.stdout.write(cmd_table(inst, box, args.format))
            return EXIT_PASS
        if args.command == "verify":
            code, result = cmd_verify(inst, args.suite, args.seed, args.box, args.quiet)
            sys.stdout.write(json.dumps(result, indent=2) + "\n")
            return code
        print(cmd_gvalue(inst, args.z, args.prime))
        return EXIT_PASS
    except (ConfigError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CMNetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
