"""Command-line front end: figure reproduction runs and constraint checkers.

Angles are given as radians or pi fractions (``pi``, ``pi/4``, ``-3*pi/4``).
Outputs are byte-deterministic; CSV output starts with a ``# argv:`` comment
recording the exact invocation so every run is reproducible.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from pathlib import Path

import numpy as np

from .lattice import (
    OneComponentField,
    PositionDistribution,
    cell_probability_history,
    from_lightcone,
    project_position,
)
from .qca1 import (
    bessel_limit,
    delta_left_mover,
    delta_right_mover,
    evolve,
    propagator_closed,
    propagator_paths,
)
from .qca2 import Qca2Params, TwoComponentField, evolve2, probability2, unit_left_mover2, unit_right_mover2
from .qlga import QlgaParams, evolve_qlga, fock_state, occupation_distribution
from .render import render_pgm, write_csv
from .unitarity import NonUnitary, ScalarBandWeights, classify_no_go

_ANGLE_RE = re.compile(r"^([+-]?)(?:(\d+)\*)?pi(?:/(\d+))?$")


def parse_angle(text: str) -> float:
    """Parse an angle literal: decimal radians or a pi fraction like -3*pi/4."""
    literal = text.strip().lower()
    m = _ANGLE_RE.match(literal)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        k = int(m.group(2)) if m.group(2) else 1
        d = int(m.group(3)) if m.group(3) else 1
        if d == 0:
            raise argparse.ArgumentTypeError(f"zero denominator in angle {text!r}")
        return sign * k * math.pi / d
    try:
        return float(literal)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle literal {text!r}") from None


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _emit(data: bytes, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
    else:
        Path(path).write_bytes(data)


def _argv_comment(argv: list[str]) -> bytes:
    """Record the run configuration; the output destination is omitted."""
    kept = []
    skip = False
    for token in argv:
        if skip:
            skip = False
            continue
        if token in ("--output", "-o"):
            skip = True
            continue
        if token.startswith("--output=") or token.startswith("-o="):
            continue
        kept.append(token)
    return ("# argv: " + " ".join(kept) + "\n").encode()


def _split_init(spec: str) -> tuple[str, str]:
    kind, _, rest = spec.partition(":")
    return kind, rest


def _load_amp_rows(path: str, columns: int) -> np.ndarray:
    rows = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [float(p) for p in line.split(",")]
        if len(parts) != columns:
            raise ValueError(f"expected {columns} comma-separated values per line in {path}")
        rows.append(parts)
    return np.asarray(rows)


def _init_qca1(spec: str, n: int) -> OneComponentField:
    kind, rest = _split_init(spec)
    if kind == "delta":
        parts = rest.split(":")
        x = int(parts[0])
        direction = parts[1] if len(parts) > 1 else "right"
        if direction == "right":
            return delta_right_mover(x, n)
        if direction == "left":
            return delta_left_mover(x, n)
        raise ValueError(f"unknown mover direction {direction!r}")
    if kind == "pair":
        x1, x2 = (int(p) for p in rest.split(","))
        cells = np.zeros(n, dtype=complex)
        cells[x1 % n] = cells[x2 % n] = 1.0 / math.sqrt(2.0)
        return OneComponentField(cells, t=0)
    if kind == "amp-file":
        rows = _load_amp_rows(rest, 2)
        return OneComponentField(rows[:, 0] + 1j * rows[:, 1], t=0)
    raise ValueError(f"unsupported init spec {spec!r}")


def _init_qca2(spec: str, n: int) -> TwoComponentField:
    kind, rest = _split_init(spec)
    if kind == "delta":
        parts = rest.split(":")
        x = int(parts[0])
        direction = parts[1] if len(parts) > 1 else "right"
        if direction == "right":
            return unit_right_mover2(x, n)
        if direction == "left":
            return unit_left_mover2(x, n)
        raise ValueError(f"unknown mover direction {direction!r}")
    if kind == "pair":
        x1, x2 = (int(p) for p in rest.split(","))
        cells = np.zeros((n, 2), dtype=complex)
        cells[x1 % n, 1] = cells[x2 % n, 1] = 1.0 / math.sqrt(2.0)
        return TwoComponentField(cells, t=0)
    if kind == "amp-file":
        rows = _load_amp_rows(rest, 4)
        return TwoComponentField(rows[:, 0:3:2] + 1j * rows[:, 1:4:2], t=0)
    raise ValueError(f"unsupported init spec {spec!r}")


def _init_qlga(spec: str, n: int):
    kind, rest = _split_init(spec)
    if kind == "particles":
        cells = [int(p) for p in rest.split(",")]
        return fock_state(n, [cells])
    if kind == "pair":
        x1, x2 = (int(p) for p in rest.split(","))
        return fock_state(n, [[x1], [x2]])
    if kind == "delta":
        return fock_state(n, [[int(rest.split(":")[0])]])
    raise ValueError(f"unsupported init spec {spec!r}")


def _run_qca1(args, argv) -> int:
    init = _init_qca1(args.init, args.n)
    history = evolve(init, args.steps, args.theta)
    if args.lightcone:
        proj = project_position(history)
        half = args.steps // 2
        dist = PositionDistribution()
        for u in range(half + 1):
            for v in range(half + 1):
                t, x = from_lightcone(u, v, args.x0)
                dist.add(u, v, proj.entries.get((t, x % args.n), 0.0))
        width = height = half + 1
        header = ("u", "v", "p")
    else:
        dist = cell_probability_history(history)
        width, height = args.n, args.steps + 1
        header = ("t", "x", "p")
    if args.format == "pgm":
        _emit(render_pgm(dist, width, height), args.output)
    else:
        _emit(_argv_comment(argv) + write_csv(dist, header), args.output)
    return 0


def _run_qca2(args, argv) -> int:
    init = _init_qca2(args.init, args.n)
    history = evolve2(init, args.steps, Qca2Params(args.theta, args.rho))
    dist = PositionDistribution()
    for f in history:
        for x, p in enumerate(probability2(f)):
            dist.add(f.t, x, float(p))
    if args.format == "pgm":
        _emit(render_pgm(dist, args.n, args.steps + 1), args.output)
    else:
        _emit(_argv_comment(argv) + write_csv(dist), args.output)
    return 0


def _run_qlga(args, argv) -> int:
    init = _init_qlga(args.init, args.n)
    params = QlgaParams(args.theta, args.alpha, args.beta)
    history = evolve_qlga(init, args.steps, params)
    dist = PositionDistribution()
    for f in history:
        for x, p in enumerate(occupation_distribution(f)):
            dist.add(f.t, x, float(p))
    if args.format == "pgm":
        _emit(render_pgm(dist, args.n, args.steps + 1), args.output)
    else:
        _emit(_argv_comment(argv) + write_csv(dist), args.output)
    return 0


def _run_propagator(args, argv) -> int:
    lines = []
    if args.compare == "paths":
        lines.append(
            "u,v,closed_left_re,closed_left_im,closed_right_re,closed_right_im,"
            "paths_left_re,paths_left_im,paths_right_re,paths_right_im,abs_diff"
        )
        worst = 0.0
        for uu in range(args.u + 1):
            for vv in range(args.v + 1):
                closed = propagator_closed(uu, vv, args.theta)
                paths = propagator_paths(uu, vv, args.theta)
                diff = max(
                    abs(closed.amp_left - paths.amp_left),
                    abs(closed.amp_right - paths.amp_right),
                )
                worst = max(worst, diff)
                lines.append(
                    ",".join(
                        [str(uu), str(vv)]
                        + [
                            _fmt(z)
                            for z in (
                                closed.amp_left.real,
                                closed.amp_left.imag,
                                closed.amp_right.real,
                                closed.amp_right.imag,
                                paths.amp_left.real,
                                paths.amp_left.imag,
                                paths.amp_right.real,
                                paths.amp_right.imag,
                                diff,
                            )
                        ]
                    )
                )
        lines.append(f"# max_abs_diff = {_fmt(worst)}")
    elif args.compare == "bessel":
        t, x = from_lightcone(args.u, args.v, 0)
        limit_left, limit_right = bessel_limit(args.theta, t, x)
        lines.append(
            "inv_epsilon,lattice_left_re,lattice_left_im,limit_left_re,limit_left_im,"
            "err_left,lattice_right_re,lattice_right_im,limit_right_re,limit_right_im,err_right"
        )
        for inv_eps in (4, 8, 16):
            res = propagator_closed(args.u * inv_eps, args.v * inv_eps, args.theta / inv_eps)
            target_left = limit_left / inv_eps
            target_right = limit_right / inv_eps
            lines.append(
                ",".join(
                    [str(inv_eps)]
                    + [
                        _fmt(z)
                        for z in (
                            res.amp_left.real,
                            res.amp_left.imag,
                            target_left.real,
                            target_left.imag,
                            abs(res.amp_left - target_left),
                            res.amp_right.real,
                            res.amp_right.imag,
                            target_right.real,
                            target_right.imag,
                            abs(res.amp_right - target_right),
                        )
                    ]
                )
            )
    else:
        res = propagator_closed(args.u, args.v, args.theta)
        lines.append("u,v,amp_left_re,amp_left_im,amp_right_re,amp_right_im")
        lines.append(
            ",".join(
                [str(args.u), str(args.v)]
                + [
                    _fmt(z)
                    for z in (
                        res.amp_left.real,
                        res.amp_left.imag,
                        res.amp_right.real,
                        res.amp_right.imag,
                    )
                ]
            )
        )
    _emit(_argv_comment(argv) + ("\n".join(lines) + "\n").encode(), args.output)
    return 0


def _run_nogo(args, argv) -> int:
    rows = _load_amp_rows(args.weights, 2)
    if rows.shape[0] != 2 * args.r + 1:
        raise ValueError(f"expected {2 * args.r + 1} weight rows for radius {args.r}")
    verdict = classify_no_go(ScalarBandWeights(rows[:, 0] + 1j * rows[:, 1]), tol=args.tol)
    if isinstance(verdict, NonUnitary):
        text = f"NONUNITARY max_residual={verdict.max_residual:g}\n"
    else:
        phase = verdict.phase
        text = f"TRIVIAL k={verdict.k} phase={phase.real:g}{phase.imag:+g}i\n"
    _emit(text.encode(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlgas",
        description="Exactly unitary 1D quantum cellular automata and lattice gases",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "pgm"), default="csv")
        p.add_argument("--output", "-o", default=None, help="output path (default stdout)")

    p1 = sub.add_parser("qca1", help="one-component automaton run")
    p1.add_argument("--n", type=int, default=32)
    p1.add_argument("--steps", type=int, default=64)
    p1.add_argument("--theta", type=parse_angle, required=True)
    p1.add_argument("--init", default="delta:0", help="delta:<x>[:left|right], pair:<x1>,<x2>, amp-file:<path>")
    p1.add_argument("--lightcone", action="store_true", help="emit the position projection in lightcone coordinates")
    p1.add_argument("--x0", type=int, default=0, help="lightcone origin cell")
    add_common(p1)

    p2 = sub.add_parser("qca2", help="two-component automaton run")
    p2.add_argument("--n", type=int, default=32)
    p2.add_argument("--steps", type=int, default=64)
    p2.add_argument("--theta", type=parse_angle, required=True)
    p2.add_argument("--rho", type=parse_angle, required=True)
    p2.add_argument("--init", default="delta:0:right")
    add_common(p2)

    p3 = sub.add_parser("qlga", help="multi-particle lattice gas run")
    p3.add_argument("--n", type=int, default=16)
    p3.add_argument("--steps", type=int, default=32)
    p3.add_argument("--theta", type=parse_angle, required=True)
    p3.add_argument("--alpha", type=parse_angle, default=0.0)
    p3.add_argument("--beta", type=parse_angle, default=0.0)
    p3.add_argument("--init", default="particles:4,11", help="particles:<x1>,<x2>,..., pair:<x1>,<x2>, delta:<x>")
    add_common(p3)

    p4 = sub.add_parser("propagator", help="closed-form propagator tables")
    p4.add_argument("--u", type=int, required=True)
    p4.add_argument("--v", type=int, required=True)
    p4.add_argument("--theta", type=parse_angle, required=True)
    p4.add_argument("--compare", choices=("paths", "bessel"), default=None)
    p4.add_argument("--output", "-o", default=None)

    p5 = sub.add_parser("nogo", help="classify a band weight vector")
    p5.add_argument("--r", type=int, required=True)
    p5.add_argument("--weights", required=True, help="CSV file with 2r+1 lines of re,im")
    p5.add_argument("--tol", type=float, default=1e-10)
    p5.add_argument("--output", "-o", default=None)

    return parser


_HANDLERS = {
    "qca1": _run_qca1,
    "qca2": _run_qca2,
    "qlga": _run_qlga,
    "propagator": _run_propagator,
    "nogo": _run_nogo,
}


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args, list(argv))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
