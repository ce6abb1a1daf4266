"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .donoghue import Family, a_from_kappa, classify, kappa_from_a
from .entropy import dissipation_for, entropy_for, invariants
from .errors import LSystemError
from .herglotz import ImpedanceFunction
from .oracle import dissipation_oracle, entropy_oracle, kappa_oracle
from .perturbation import perturb

CSV_HEADER = "Q,kappa,entropy,dissipation"
VERIFY_TOL = 1e-10
DEFAULT_A_GRID = (0.1, 0.25, 0.5, 0.75, 0.9, 1.0, 1.5, 2.0, 5.0)
DEFAULT_Q_GRID = (-20.0, -5.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 5.0, 20.0)
FAULT_SIZE = 1e-6


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CurveRow:
    q: float
    kappa: float
    entropy: float
    dissipation: float


@dataclass(frozen=True)
class RunConfig:
    family: Family
    a: float
    q_min: float
    q_max: float
    q_steps: int
    fmt: str = "csv"

    def __post_init__(self):
        if self.q_steps < 2:
            raise UsageError("--steps must be at least 2")
        if not self.q_min < self.q_max:
            raise UsageError("--q-min must be smaller than --q-max")
        if self.fmt not in ("csv", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")


def fmt_num(x: float) -> str:
    if math.isinf(x):
        return "inf"
    if x == 0:
        return "0"
    return format(x, ".12g")


def _real(text: str) -> float:
    """Parse ``0.5``, ``1/3`` or ``-2``."""
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        try:
            return float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def resolve_a(family: Family, kappa: float | None, entropy: float | None) -> float:
    """Normalization ``a`` for a family given kappa or the unperturbed entropy."""
    if family is Family.M:
        if kappa not in (None, 0.0) or (entropy is not None and not math.isinf(entropy)):
            raise UsageError("class M has kappa = 0 and infinite entropy")
        return 1.0
    if kappa is not None and entropy is not None:
        raise UsageError("give --kappa or --entropy, not both")
    if entropy is not None:
        if not entropy > 0 or math.isinf(entropy):
            raise UsageError("--entropy must be positive and finite for this family")
        t = math.tanh(entropy / 2.0)
        return t if family is Family.MKappa else 1.0 / t
    if kappa is None:
        raise UsageError(f"family {family.value} needs --kappa or --entropy")
    if not 0 < kappa < 1:
        raise UsageError("--kappa must lie in (0, 1) for this family")
    return a_from_kappa(family, kappa)


def q_grid(q_min: float, q_max: float, steps: int) -> list[float]:
    """Uniform grid; 0 is inserted when the range straddles it."""
    span = q_max - q_min
    grid = []
    for i in range(steps):
        q = q_min + i * span / (steps - 1)
        if abs(q) <= 1e-12 * span:
            q = 0.0
        grid.append(q)
    grid[-1] = q_max
    if q_min < 0 < q_max and 0.0 not in grid:
        grid.append(0.0)
        grid.sort()
    return grid


def curve_rows(config: RunConfig) -> list[CurveRow]:
    rows = []
    for q in q_grid(config.q_min, config.q_max, config.q_steps):
        kappa = perturb(config.a, q).kappa
        rows.append(CurveRow(q, kappa, entropy_for(config.a, q).value, dissipation_for(config.a, q).value))
    return rows


def render_curve(rows: Sequence[CurveRow], fmt: str) -> str:
    if fmt == "json":
        data = [
            {"Q": r.q, "kappa": r.kappa, "entropy": "inf" if math.isinf(r.entropy) else r.entropy,
             "dissipation": r.dissipation}
            for r in rows
        ]
        return json.dumps(data, indent=1) + "\n"
    lines = [CSV_HEADER]
    lines += [",".join(fmt_num(v) for v in (r.q, r.kappa, r.entropy, r.dissipation)) for r in rows]
    return "\n".join(lines) + "\n"


# -- table 2 -------------------------------------------------------------------

def table2_rows() -> list[tuple[str, float, float]]:
    rows = []
    for label, a, q in (("M", 1.0, 0.0), ("M^1", 1.0, 1.0), ("M_1/3", 0.5, 0.0), ("M_1/3^1", 0.5, 1.0)):
        r = invariants(a, q)
        rows.append((label, r.entropy.value, r.dissipation.value))
    return rows


def render_table2() -> str:
    out = [f"{'class':<10}{'S':>10}{'D':>10}{'S (full)':>18}{'D (full)':>18}"]
    for label, s, d in table2_rows():
        s4 = "inf" if math.isinf(s) else f"{s:.4f}"
        out.append(f"{label:<10}{s4:>10}{d:>10.4f}{fmt_num(s):>18}{fmt_num(d):>18}")
    return "\n".join(out) + "\n"


# -- verify --------------------------------------------------------------------

@dataclass
class Deviation:
    family: Family
    a: float
    q: float
    quantity: str
    error: float


def verify_grid(
    families: Iterable[Family] | None = None,
    a_values: Sequence[float] = DEFAULT_A_GRID,
    q_values: Sequence[float] = DEFAULT_Q_GRID,
    fault: float = 0.0,
) -> list[Deviation]:
    """Compare closed forms against the transfer-function oracle.

    ``fault`` is added to every closed-form kappa; it exists so the harness
    can demonstrate that it notices a wrong formula.
    """
    wanted = set(families) if families is not None else set(Family)
    out = []
    for a in a_values:
        family, _ = kappa_from_a(a)
        if family not in wanted:
            continue
        for q in q_values:
            r = invariants(a, q)
            pairs = (
                ("kappa", r.kappa + fault, kappa_oracle(a, q)),
                ("entropy", r.entropy.value, entropy_oracle(a, q).value),
                ("dissipation", r.dissipation.value, dissipation_oracle(a, q).value),
            )
            for name, got, want in pairs:
                out.append(Deviation(family, a, q, name, abs(got - want)))
    return out


def render_verify(devs: Sequence[Deviation], tol: float = VERIFY_TOL) -> tuple[str, bool]:
    lines = []
    ok = True
    for fam in Family:
        fam_devs = [d for d in devs if d.family is fam]
        if not fam_devs:
            continue
        worst = max(d.error for d in fam_devs)
        status = "ok" if worst < tol else "FAIL"
        lines.append(f"{fam.value:<10} points={len(fam_devs) // 3:<4} max_abs_dev={worst:.3e} {status}")
    bad = [d for d in devs if not d.error < tol]
    for d in bad:
        ok = False
        lines.append(f"  violation family={d.family.value} a={d.a:g} q={d.q:g} {d.quantity} dev={d.error:.3e}")
    lines.append("verify: PASS" if ok else "verify: FAIL")
    return "\n".join(lines) + "\n", ok


# -- argument handling ---------------------------------------------------------

def _add_class_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", type=_family, required=True, help="m, mkappa or mkappainv")
    p.add_argument("--kappa", type=_real, help="unperturbed von Neumann parameter")
    p.add_argument("--entropy", type=_real, help="unperturbed c-entropy")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", metavar="PATH", help="write to PATH instead of stdout")
    parser = argparse.ArgumentParser(prog="lsys", description="Invariants of perturbed L-systems.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub_parser = sub.add_parser

    def add(name, **kw):
        return sub_parser(name, parents=[common], **kw)

    p = add("classify", help="classify an impedance given as JSON")
    p.add_argument("spec", nargs="?", help='JSON like {"shift":1,"masses":[[0,1]]}; "-" or omitted reads stdin')

    for name, help_text in (
        ("perturb", "kappa(Q) and U(Q)"),
        ("entropy", "c-entropy S(Q)"),
        ("dissipation", "dissipation coefficient D(Q)"),
    ):
        p = add(name, help=help_text)
        _add_class_args(p)
        p.add_argument("--q", type=_real, required=True)

    p = add("curve", help="emit curve data over a Q grid")
    _add_class_args(p)
    p.add_argument("--q-min", type=_real, default=-5.0)
    p.add_argument("--q-max", type=_real, default=5.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    add("table2", help="reproduce the c-entropy / dissipation table of the worked examples")

    p = add("verify", help="closed forms vs transfer-function oracle")
    p.add_argument("--families", default=None, help="comma-separated subset, e.g. M,MKappa")
    p.add_argument("--perturb-formula", action="store_true",
                   help=f"self-test: offset closed-form kappa by {FAULT_SIZE:g}; must fail")
    return parser


def _read_spec(text: str | None) -> ImpedanceFunction:
    if text is None or text == "-":
        text = sys.stdin.read()
    try:
        data = json.loads(text)
        shift = float(data.get("shift", 0.0))
        masses = [(float(lam), float(m)) for lam, m in data.get("masses", [])]
    except (json.JSONDecodeError, AttributeError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot parse impedance spec: {exc}") from None
    return ImpedanceFunction.from_pairs(shift, masses)


def run(args: argparse.Namespace) -> tuple[str, int]:
    cmd = args.command
    if cmd == "classify":
        cls = classify(_read_spec(args.spec))
        text = f"family={cls.family.value} a={cls.a:g} kappa={cls.kappa:g} Q={cls.shift:g}"
        if cls.perturbed:
            text += f" (class {cls.label})"
        return text + "\n", 0
    if cmd in ("perturb", "entropy", "dissipation"):
        a = resolve_a(args.family, args.kappa, args.entropy)
        r = invariants(a, args.q)
        if cmd == "perturb":
            u = r.u
            text = f"kappa={fmt_num(r.kappa)} U={fmt_num(u.real)}{'+' if u.imag >= 0 else '-'}{fmt_num(abs(u.imag))}i"
        elif cmd == "entropy":
            text = f"S={fmt_num(r.entropy.value)}"
        else:
            text = f"D={fmt_num(r.dissipation.value)}"
        return text + "\n", 0
    if cmd == "curve":
        a = resolve_a(args.family, args.kappa, args.entropy)
        config = RunConfig(args.family, a, args.q_min, args.q_max, args.steps, args.format)
        return render_curve(curve_rows(config), config.fmt), 0
    if cmd == "table2":
        return render_table2(), 0
    if cmd == "verify":
        families = None
        if args.families:
            families = [Family.parse(f) for f in args.families.split(",") if f.strip()]
        devs = verify_grid(families, fault=FAULT_SIZE if args.perturb_formula else 0.0)
        text, ok = render_verify(devs)
        return text, 0 if ok else 1
    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = run(args)
    except (UsageError, LSystemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
