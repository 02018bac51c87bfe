"""Command-line interface: patterns, rep, charmat, invariants and verify."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .characteristic import KINDS, build_charmat, char_identity_residual
from .invariants import AdmissibilityError, invariant_table
from .patterns import HighestWeight, enumerate_patterns, weight_of
from .representations import DimensionCapError, build_irrep
from .scalars import NotASquareError, PoleError, QRat, eval_exact
from .verification import ALIASES, battery, default_grid, resolve, run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise UsageError(f"weights are comma-separated integers, got {text!r}") from exc


class QValue:
    """A q given on the command line: rational ("3/2"), decimal ("1.5") or integer."""

    def __init__(self, text: str):
        self.text = text.strip()
        if "/" in self.text:
            self.form = "rational"
            try:
                self.value = Fraction(self.text)
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"cannot parse q = {text!r}") from exc
        else:
            try:
                int(self.text)
                self.form = "integer"
                self.value = Fraction(int(self.text))
            except ValueError:
                try:
                    self.value = float(self.text)
                except ValueError as exc:
                    raise UsageError(f"cannot parse q = {text!r}") from exc
                self.form = "decimal"
        if not self.value > 0 or self.value == 1:
            raise UsageError("q must be positive and different from 1")

    def as_float(self) -> float:
        return float(self.value)


def resolve_backend(q: Optional[QValue], backend: Optional[str]) -> str:
    """exact or numeric; a rational q implies exact and a decimal q numeric."""
    if q is None:
        return backend or "numeric"
    if backend is None:
        return "exact" if q.form == "rational" else "numeric"
    if backend == "exact" and q.form == "decimal":
        raise UsageError("a decimal q cannot be used with the exact backend; write it as a fraction")
    if backend == "numeric" and q.form == "rational":
        raise UsageError("a rational q cannot be used with the numeric backend; write it as a decimal")
    return backend


def _common(p: argparse.ArgumentParser, hw_required: bool = True) -> None:
    p.add_argument("--n", type=int, help="rank n (checked against the length of --hw)")
    p.add_argument("--hw", required=hw_required, help="highest weight, e.g. 2,1,0")
    p.add_argument("--q", help="deformation parameter: 3/2 (exact), 1.5 (numeric) or an integer")
    p.add_argument("--backend", choices=("exact", "numeric"))
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--out", help="write to this path instead of stdout")
    p.add_argument("--tol", type=float, default=None, help="pass/fail tolerance for reported residuals")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgln", description="U_q(gl(n)) modules in the Gelfand-Tsetlin basis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("patterns", help="list GT patterns with their weights")
    _common(p)

    p = sub.add_parser("rep", help="generator matrices of V(hw) as JSON")
    _common(p)

    p = sub.add_parser("charmat", help="a characteristic matrix, its roots and identity residual")
    _common(p)
    p.add_argument("--which", choices=KINDS, default="Atilde")

    p = sub.add_parser("invariants", help="closed-form invariants for (hw, hw0)")
    _common(p)
    p.add_argument("--hw0", required=True, help="gl(n-1) weight interlacing hw")

    p = sub.add_parser("verify", help="run a verification suite or the whole battery")
    _common(p, hw_required=False)
    p.add_argument("--suite", default="all", help=f"one of {', '.join(suite_names() + list(ALIASES))} or all")
    p.add_argument("--which", choices=KINDS, default=None)
    p.add_argument("--count", type=int, default=100, help="random cases for root_identities")
    p.add_argument("--no-timing", action="store_true", help="omit wall times for byte-stable output")
    return parser


def _hw(args) -> HighestWeight:
    w = parse_weight(args.hw)
    if not w:
        raise UsageError("--hw needs at least one entry")
    if args.n is not None and args.n != len(w):
        raise UsageError(f"--n {args.n} does not match --hw of length {len(w)}")
    try:
        return HighestWeight(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _q(args) -> Optional[QValue]:
    return QValue(args.q) if args.q is not None else None


def _numeric_q(args, default: float = 1.5) -> float:
    qv = _q(args)
    backend = resolve_backend(qv, args.backend)
    if backend != "numeric":
        raise UsageError(f"{args.command} evaluates matrices in floating point; pass q as a decimal")
    return default if qv is None else qv.as_float()


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _fmt_matrix(m) -> str:
    from .representations import matrix_to_json

    rows = matrix_to_json(m)
    cells = [[x if isinstance(x, str) else f"{x:.6g}" for x in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("  " + " ".join(c.rjust(width) for c in row) for row in cells)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_patterns(args) -> tuple[str, int]:
    hw = _hw(args)
    pats = enumerate_patterns(hw)
    if args.format == "json":
        out = _dump_json([{"pattern": p.to_json(), "weight": list(weight_of(p))} for p in pats])
    elif args.format == "csv":
        out = _csv([("index", "pattern", "weight")] + [(i, str(p), ",".join(map(str, weight_of(p)))) for i, p in enumerate(pats)])
    else:
        lines = [f"V({hw}): {len(pats)} patterns"]
        lines += [f"{i:4d}  {p}  weight ({','.join(map(str, weight_of(p)))})" for i, p in enumerate(pats)]
        out = "\n".join(lines) + "\n"
    return out, EXIT_OK


def _irrep_from_args(args):
    hw = _hw(args)
    qv = _q(args)
    backend = resolve_backend(qv, args.backend)
    if backend == "exact":
        return build_irrep(hw, "exact")
    return build_irrep(hw, 1.5 if qv is None else qv.as_float())


def cmd_rep(args) -> tuple[str, int]:
    R = _irrep_from_args(args)
    if args.format == "json":
        return _dump_json(R.to_json()), EXIT_OK
    if args.format == "csv":
        raise UsageError("rep supports json and pretty output")
    lines = [f"V({R.hw}), dim {R.dimension}, q = {R.q_context}"]
    lines += [f"basis {i}: {p}" for i, p in enumerate(R.basis)]
    for nm, mats in (("e", R.e), ("f", R.f), ("k", R.k)):
        for i, m in enumerate(mats, start=1):
            lines.append(f"{nm}_{i} =")
            lines.append(_fmt_matrix(m))
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_charmat(args) -> tuple[str, int]:
    R = _irrep_from_args(args)
    M = build_charmat(R, args.which)
    res = char_identity_residual(M)
    tol = args.tol if args.tol is not None else 1e-8 * M.size
    ok = res <= tol
    if args.format == "json":
        data = M.to_json()
        data["identity_residual"] = res
        data["tol"] = tol
        data["pass"] = ok
        return _dump_json(data), EXIT_OK if ok else EXIT_FAIL
    if args.format == "csv":
        raise UsageError("charmat supports json and pretty output")
    roots = ", ".join(str(r) if isinstance(r, QRat) else f"{r:.12g}" for r in M.roots)
    lines = [
        f"{args.which} on V_0 (x) V({R.hw}), size {M.size}",
        f"roots: {roots}",
        f"identity residual: {res:.3e} (tol {tol:.1e}) {'pass' if ok else 'FAIL'}",
    ]
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL


def cmd_invariants(args) -> tuple[str, int]:
    hw = _hw(args)
    hw0 = parse_weight(args.hw0)
    qv = _q(args)
    backend = resolve_backend(qv, args.backend)
    try:
        table = invariant_table(hw, hw0)
    except AdmissibilityError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        if backend == "exact":
            if qv is None:
                raise UsageError("csv output of exact invariants needs --q")
            try:
                rows = [("name", "index", "value")] + _exact_rows(table, qv.value)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            return _csv(rows), EXIT_OK
        q = 1.5 if qv is None else qv.as_float()
        return _csv([("name", "index", "value")] + table.rows(q)), EXIT_OK
    if args.format == "json":
        data = table.to_json()
        if backend == "numeric" and qv is not None:
            data["q"] = qv.as_float()
            data["values"] = {f"{n}[{i}]" if i else n: v for n, i, v in table.rows(qv.as_float())}
        elif backend == "exact" and qv is not None:
            data["q"] = qv.text
        return _dump_json(data), EXIT_OK
    lines = [f"Lambda = ({','.join(map(str, table.hw))}), Lambda0 = ({','.join(map(str, table.hw0))})"]
    for name, value in table.to_json().items():
        if name in ("hw", "hw0"):
            continue
        lines.append(f"{name} = {value}")
    return "\n".join(lines) + "\n", EXIT_OK


def _exact_rows(table, q: Fraction) -> list[tuple[str, str, str]]:
    rows = []
    data = table.to_json()
    for name in table._SCALAR_LISTS:
        for i, x in enumerate(getattr(table, name), start=1):
            rows.append((name, str(i), str(eval_exact(x, q))))
    for name in table._MATRICES:
        for k, row in enumerate(getattr(table, name), start=1):
            for r, x in enumerate(row, start=1):
                rows.append((name, f"{k};{r}", str(eval_exact(x, q))))
    for name in table._SCALARS:
        rows.append((name, "", str(eval_exact(getattr(table, name), q))))
    for name in ("xi", "xitilde", "eta", "etatilde"):
        for i, x in enumerate(data[name], start=1):
            rows.append((name, str(i), str(x)))
    rows.append(("theta", "", str(table.theta)))
    return rows


def cmd_verify(args) -> tuple[str, int]:
    q = _numeric_q(args)
    hw = _hw(args) if args.hw else None
    if args.suite == "all":
        grid = [hw.entries] if hw is not None else default_grid()
        reports = battery(grid=grid, q=q, seed=args.seed)
    else:
        try:
            name = resolve(args.suite)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from exc
        if name == "root_identities":
            reports = [run_suite(name, q=q, seed=args.seed, count=args.count)]
        elif hw is None:
            raise UsageError(f"suite {name} needs --hw")
        else:
            reports = [run_suite(name, hw=hw.entries, q=q, which=args.which, seed=args.seed, count=args.count)]
    ok = all(r.passed for r in reports)
    timing = not args.no_timing
    if args.format == "json":
        data = [r.to_json(timing) for r in reports]
        out = _dump_json(data[0] if len(data) == 1 else data)
    elif args.format == "csv":
        rows = [("suite", "hw", "desc", "residual", "tol", "pass")]
        for r in reports:
            w = ",".join(map(str, r.params.get("hw", [])))
            rows += [(r.suite, w, c.desc, repr(c.residual), repr(c.tol), c.passed) for c in r.cases]
        out = _csv(rows)
    else:
        lines = []
        for r in reports:
            w = ",".join(map(str, r.params.get("hw", [])))
            head = f"{'PASS' if r.passed else 'FAIL'} {r.suite}" + (f" hw=({w})" if w else "")
            if timing and r.seconds is not None:
                head += f" [{r.seconds:.2f}s]"
            lines.append(head)
            for c in r.cases:
                if not c.passed:
                    lines.append(f"    FAIL {c.desc}: residual {c.residual:.3e} > tol {c.tol:.1e}")
        lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} suite runs passed")
        out = "\n".join(lines) + "\n"
    return out, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "patterns": cmd_patterns,
    "rep": cmd_rep,
    "charmat": cmd_charmat,
    "invariants": cmd_invariants,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        out, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"qgln: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DimensionCapError, NotASquareError, PoleError, ArithmeticError) as exc:
        print(f"qgln: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
