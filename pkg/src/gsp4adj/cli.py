"""Command line entry point: ``gsp4adj {constants,verify,lattice,congruence}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import constants, lattice, verify
from .exactnum import PiQuantity, fraction_str, is_prime, valuation


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def _json_value(v, approx: bool):
    if isinstance(v, PiQuantity):
        out = v.to_json()
        if approx:
            out["approx"] = v.approx(20)
        return out
    if isinstance(v, Fraction):
        if approx:
            return {"exact": fraction_str(v), "approx": PiQuantity(v, 0).approx(20)}
        return fraction_str(v)
    if isinstance(v, list):
        return [_json_value(x, approx) for x in v]
    if isinstance(v, dict):
        return {k: _json_value(x, approx) for k, x in v.items()}
    return v


def _text_value(v, approx: bool) -> str:
    if isinstance(v, PiQuantity):
        text = fraction_str(v.coeff) if v.pi_exp == 0 else f"{fraction_str(v.coeff)} * pi^{v.pi_exp}"
        return f"{text} ~ {v.approx(20)}" if approx else text
    if isinstance(v, Fraction):
        text = fraction_str(v)
        return f"{text} ~ {PiQuantity(v, 0).approx(20)}" if approx else text
    if isinstance(v, list):
        return "[" + ", ".join(_text_value(x, approx) for x in v) + "]"
    if isinstance(v, bool):
        return "PASS" if v else "FAIL"
    return str(v)


def render(report: dict, fmt: str, approx: bool = False) -> str:
    """report = {"title": str, "rows": [(name, value)], "ok": bool}"""
    if fmt == "json":
        payload = {
            "title": report["title"],
            "ok": report["ok"],
            "results": {name: _json_value(v, approx) for name, v in report["rows"]},
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["quantity", "value"])
        for name, v in report["rows"]:
            writer.writerow([name, _text_value(v, approx)])
        return buf.getvalue()
    lines = [f"# {report['title']}", "", "| quantity | value |", "|---|---|"]
    for name, v in report["rows"]:
        lines.append(f"| {name} | {_text_value(v, approx)} |")
    lines.append("")
    lines.append(f"status: {'PASS' if report['ok'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_constants(k: int, kprime: int, level: int = 1) -> dict:
    if not k >= kprime >= 0:
        raise UsageError(f"need k >= k' >= 0, got k={k}, k'={kprime}")
    try:
        constants.LevelFactor(level)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        rep = constants.constants_report(k, kprime, level)
        ok = True
    except ArithmeticError as exc:
        return {"title": f"constants k={k} k'={kprime} N={level}", "rows": [("error", str(exc))], "ok": False}
    rows = [
        ("C'", rep["C_prime"]),
        ("C", rep["C"]),
        ("C' = C", rep["C_prime"] == rep["C"]),
        ("C_N", rep["C_N"]),
        ("petersson constant", rep["petersson"]),
        ("ichino constant per L-unit", rep["ichino"]),
        ("main1 constant", rep["main1"]),
        ("assembly identity", rep["petersson"] * rep["ichino"] == rep["main1"]),
    ]
    ok = all(v for name, v in rows if isinstance(v, bool))
    return {"title": f"constants k={k} k'={kprime} N={level}", "rows": rows, "ok": ok}


def cmd_verify(suite: str) -> dict:
    try:
        results = verify.run_suites(suite)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    total = passed = 0
    for name, checks in results.items():
        for c in checks:
            total += 1
            passed += c.passed
            rows.append((f"[{name}] {c.name}", f"{'PASS' if c.passed else 'FAIL'}{(' (' + c.detail + ')') if c.detail else ''}"))
    rows.append(("checks passed", f"{passed}/{total}"))
    return {"title": f"verify {suite}", "rows": rows, "ok": passed == total}


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _square_class(disc: Fraction, p: int) -> str:
    v = valuation(disc, p)
    unit = disc / Fraction(p) ** v
    square = lattice.similar_mod_unit_squares(unit, 1, p)
    return f"p^{v} * {'square' if square else 'non-square'} unit"


def cmd_lattice(path: str, action: str, prime: int | None = None) -> dict:
    data = _load_json(path)
    if prime is not None and isinstance(data, dict):
        data = dict(data, prime=prime)
    try:
        lat, form, splitter = lattice.lattice_from_json(data)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    p = lat.prime
    title = f"lattice {action} ({path}, p={p})"
    try:
        if action == "disc":
            disc = lattice.gram_discriminant(lat, form)
            rows = [("discriminant", disc), ("valuation", valuation(disc, p) if disc else "inf")]
            if disc:
                rows.append(("square class", _square_class(disc, p)))
            return {"title": title, "rows": rows, "ok": True}
        if action == "dual":
            dual = lattice.dual_lattice(lat, form)
            rows = [(f"dual basis row {i + 1}", row) for i, row in enumerate(dual.basis)]
            try:
                rows.append(("index [L*:L]", lattice.dual_index(lat, form)))
            except ValueError as exc:
                rows.append(("index [L*:L]", str(exc)))
            return {"title": title, "rows": rows, "ok": True}
        if action == "duality-check":
            if splitter is None:
                raise UsageError(f"{path}: field 'splitter' is required for duality-check")
            report = lattice.split_project_report(lat, form, splitter)
            rows = [
                ("rank of W1", len(report.projection)),
                ("projection equals dual of intersection", report.holds),
            ]
            return {"title": title, "rows": rows, "ok": report.holds}
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    raise UsageError(f"unknown lattice action {action!r}")


def cmd_congruence(path_a: str, path_b: str, bound: int, prime: int | None = None) -> dict:
    systems = []
    for path in (path_a, path_b):
        try:
            systems.append(lattice.EigenSystem.from_json(_load_json(path)))
        except ValueError as exc:
            raise UsageError(f"{path}: {exc}") from None
    title = f"congruence primes ({path_a} vs {path_b}, bound {bound})"
    try:
        found = lattice.congruence_prime_scan(systems[0], systems[1], bound)
    except lattice.IdenticalSystems:
        return {"title": title, "rows": [("result", lattice.IDENTICAL)], "ok": True}
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    primes = [w.prime for w in found]
    rows = [("congruence primes", primes)]
    for w in found:
        rows.append((f"witness at {w.prime}", f"x-factor {list(w.x_factor)}, y-factor {list(w.y_factor)}"))
    if prime is not None:
        rows.append((f"congruent mod {prime}", prime in primes))
    return {"title": title, "rows": rows, "ok": True}


# ---------------------------------------------------------------------------
# argument parsing


def _prime_arg(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "markdown", "csv"], default="markdown")
    common.add_argument("--approx", action="store_true", help="append decimal renderings")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="gsp4adj", description="Exact GSp(4) adjoint L-value toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("constants", parents=[common], help="archimedean and level constants")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--kp", type=int, required=True)
    c.add_argument("--level", type=int, default=1)

    v = sub.add_parser("verify", parents=[common], help="run invariant suites")
    v.add_argument("suite", choices=list(verify.SUITES) + ["all"])

    lat = sub.add_parser("lattice", parents=[common], help="discriminants and duals of a lattice file")
    lat.add_argument("action", choices=["disc", "dual", "duality-check"])
    lat.add_argument("input")
    lat.add_argument("--prime", type=_prime_arg)

    g = sub.add_parser("congruence", parents=[common], help="congruence primes between two eigen systems")
    g.add_argument("system_a")
    g.add_argument("system_b")
    g.add_argument("--bound", type=int, default=100)
    g.add_argument("--prime", type=_prime_arg)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "constants":
            report = cmd_constants(args.k, args.kp, args.level)
        elif args.command == "verify":
            report = cmd_verify(args.suite)
        elif args.command == "lattice":
            report = cmd_lattice(args.input, args.action, args.prime)
        else:
            report = cmd_congruence(args.system_a, args.system_b, args.bound, args.prime)
    except UsageError as exc:
        parser.error(str(exc))
    text = render(report, args.format, args.approx)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
