"""Command-line surface.

Subcommands
-----------
family    generate a channel from a named family and write channel JSON
          (with a validation block) to --out
analyze   structural and information-theoretic report for a channel JSON
sweep     phase sweep of the first qubit family: entanglement of the Choi
          state (numeric and closed form), Holevo bound, map entropy, CSV
bloch     Bloch-sphere image point clouds, CSV (single phase or the batch
          theta = k pi/8, k = 0..8)
dynamics  driven-family trajectory CSV plus a non-Markovianity summary JSON

Exit codes: 0 success, 2 parameter error, 3 input-format error,
4 numerical failure.  All outputs are deterministic: the same invocation
produces byte-identical files.  Entropic columns are in nats unless --bits
is given, which rescales them by 1/ln 2 and renames headers accordingly.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .channels import KrausSet, choi_state, validate_channel
from .dynamics import (
    bloch_image,
    increase_duration,
    non_markovianity_measure,
    run_trajectory,
)
from .families import (
    FamilyParams,
    dft_matrix,
    identity_channel,
    make_family,
    qubit_family_a,
    qubit_family_b,
)
from .linalg import DEFAULT_TOL, DensityMatrix, NumericalError
from .measures import (
    classical_capacity_lower_bound,
    coherent_information,
    concurrence,
    concurrence_closed_form,
    map_entropy,
    negativity,
    negativity_closed_form,
)
from .serialize import (
    ChannelFormatError,
    channel_to_dict,
    matrix_from_pairs,
    read_channel,
    write_json_atomic,
    write_text_atomic,
)

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_FORMAT = 3
EXIT_NUMERICAL = 4

LN2 = math.log(2.0)


@dataclass
class RunConfig:
    """Parsed invocation: command, family parameters, grids, output, display."""

    command: str
    out: str
    tol: float = DEFAULT_TOL
    bits: bool = False
    family: str = "qubit-a"
    theta: float = 0.0
    phi: float = 0.0
    p: float = 0.5
    dim: int = 2
    w_source: str = "identity"
    points: int = 100
    theta_max: float = math.pi / 2
    batch: bool = False
    omega: float = 1.0
    t_max: float = math.pi
    steps: int = 4096
    channel_path: str = ""

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.points < 1:
            raise ValueError("grid size must be at least 1")


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _csv(header: list[str], rows: list[list[float]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _load_w(source: str, dim: int) -> np.ndarray:
    if source == "identity":
        return np.eye(dim)
    if source == "fourier":
        return dft_matrix(dim)
    try:
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ChannelFormatError(f"cannot read unitary parameter file {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ChannelFormatError(f"invalid JSON in {source}: {exc}") from exc
    return matrix_from_pairs(data)


def _family_channel(cfg: RunConfig) -> KrausSet:
    w = None
    if cfg.family in ("qutrit", "ndim"):
        w = _load_w(cfg.w_source, 3 if cfg.family == "qutrit" else cfg.dim)
    params = FamilyParams(
        family=cfg.family, theta=cfg.theta, phi=cfg.phi, p=cfg.p, dim=cfg.dim, w=w
    )
    return make_family(params)


def cmd_family(cfg: RunConfig) -> int:
    channel = _family_channel(cfg)
    validation = validate_channel(channel, cfg.tol)
    doc = channel_to_dict(channel)
    doc["validation"] = {
        "cptp_residual": validation.cptp_residual,
        "selfcomplementary": validation.selfcomplementary,
        "choi_rank": validation.choi_rank,
    }
    write_json_atomic(cfg.out, doc)
    return EXIT_OK


def _entropy_key(base: str, bits: bool) -> str:
    return base.replace("_nats", "_bits") if bits else base


def cmd_analyze(cfg: RunConfig) -> int:
    channel = read_channel(cfg.channel_path)
    validation = validate_channel(channel, cfg.tol)
    scale = 1.0 / LN2 if cfg.bits else 1.0
    report: dict = {
        "n_in": channel.n_in,
        "n_out": channel.n_out,
        "kraus_count": channel.k,
        "cptp_residual": validation.cptp_residual,
        "cptp_ok": validation.cptp_ok,
        "selfcomplementary": validation.selfcomplementary,
        "choi_rank": validation.choi_rank,
    }
    if validation.cptp_ok:
        rho_star = DensityMatrix.maximally_mixed(channel.n_in)
        basis = [
            DensityMatrix.pure(np.eye(channel.n_in)[:, i]) for i in range(channel.n_in)
        ]
        report[_entropy_key("map_entropy_nats", cfg.bits)] = map_entropy(channel) * scale
        report[_entropy_key("coherent_information_nats", cfg.bits)] = (
            coherent_information(channel, rho_star) * scale
        )
        report[_entropy_key("chi_bound_nats", cfg.bits)] = (
            classical_capacity_lower_bound(channel, basis) * scale
        )
    else:
        # Information measures are meaningless for a non-channel; report the
        # structural fields only.
        report["map_entropy_nats"] = None
        report["coherent_information_nats"] = None
        report["chi_bound_nats"] = None
    write_json_atomic(cfg.out, report)
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    if cfg.points < 2:
        raise ValueError("sweep needs a grid of at least 2 points")
    if not 0.0 < cfg.theta_max <= math.pi / 2:
        raise ValueError("theta-max must lie in (0, pi/2], the closed forms' domain")
    thetas = np.linspace(0.0, cfg.theta_max, cfg.points)
    scale = 1.0 / LN2 if cfg.bits else 1.0
    rows = []
    basis = [DensityMatrix.pure([1.0, 0.0]), DensityMatrix.pure([0.0, 1.0])]
    for theta in thetas:
        channel = qubit_family_a(float(theta), cfg.phi)
        omega_state = choi_state(channel)
        rows.append(
            [
                theta,
                negativity(omega_state, (2, 2)),
                negativity_closed_form(theta),
                concurrence(omega_state),
                concurrence_closed_form(float(theta)),
                classical_capacity_lower_bound(channel, basis) * scale,
                map_entropy(channel) * scale,
            ]
        )
    header = [
        "theta",
        "negativity_numeric",
        "negativity_closed",
        "concurrence_numeric",
        "concurrence_closed",
        _entropy_key("chi_bound_nats", cfg.bits),
        _entropy_key("map_entropy_nats", cfg.bits),
    ]
    write_text_atomic(cfg.out, _csv(header, rows))
    return EXIT_OK


def _bloch_channel(cfg: RunConfig, theta: float) -> KrausSet:
    if cfg.family == "identity":
        return identity_channel(2)
    if cfg.family == "qubit-b":
        return qubit_family_b(theta, cfg.phi)
    return qubit_family_a(theta, cfg.phi)


def cmd_bloch(cfg: RunConfig) -> int:
    header = ["x", "y", "z"]
    if cfg.batch:
        stem, ext = os.path.splitext(cfg.out)
        ext = ext or ".csv"
        for k in range(9):
            points = bloch_image(_bloch_channel(cfg, k * math.pi / 8.0), cfg.points)
            write_text_atomic(f"{stem}_k{k}{ext}", _csv(header, [list(p) for p in points]))
        return EXIT_OK
    points = bloch_image(_bloch_channel(cfg, cfg.theta), cfg.points)
    write_text_atomic(cfg.out, _csv(header, [list(p) for p in points]))
    return EXIT_OK


def cmd_dynamics(cfg: RunConfig) -> int:
    if cfg.steps < 2:
        raise ValueError("dynamics needs at least 2 steps")
    # --steps counts uniform intervals; sampling the endpoints too keeps the
    # grid aligned with the extrema of the driven records.
    traj = run_trajectory(cfg.family, cfg.omega, cfg.t_max, cfg.steps + 1)
    scale = 1.0 / LN2 if cfg.bits else 1.0
    header = [
        "t",
        "theta",
        "negativity",
        "concurrence",
        _entropy_key("map_entropy_nats", cfg.bits),
    ]
    rows = [
        [
            traj.times[i],
            traj.parameter[i],
            traj.negativity[i],
            traj.concurrence[i],
            traj.map_entropy[i] * scale,
        ]
        for i in range(traj.times.size)
    ]
    write_text_atomic(cfg.out, _csv(header, rows))
    summary = {
        "family": cfg.family,
        "omega": cfg.omega,
        "t_max": cfg.t_max,
        "steps": cfg.steps,
        "non_markovianity_positive_variation": non_markovianity_measure(traj, "negativity"),
        "increase_duration": increase_duration(traj, "negativity"),
        "concurrence_positive_variation": non_markovianity_measure(traj, "concurrence"),
    }
    stem = os.path.splitext(cfg.out)[0] or cfg.out
    write_json_atomic(stem + ".summary.json", summary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchan",
        description="Quantum-channel toolkit: families, conversions, measures, dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", required=True, help="output path")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="validation tolerance")
        p.add_argument(
            "--bits", action="store_true", help="report entropic quantities in bits instead of nats"
        )

    p_family = sub.add_parser("family", help="generate a family channel as JSON")
    p_family.add_argument(
        "--id",
        dest="family",
        required=True,
        choices=["qubit-a", "qubit-b", "ad", "qutrit", "ndim", "ndim-theta0"],
    )
    p_family.add_argument("--theta", type=float, default=0.0)
    p_family.add_argument("--phi", type=float, default=0.0)
    p_family.add_argument("--p", type=float, default=0.5, help="decay probability for --id ad")
    p_family.add_argument("--n", dest="dim", type=int, default=2, help="dimension for ndim ids")
    p_family.add_argument(
        "--w",
        dest="w_source",
        default="identity",
        help="unitary parameter: 'identity', 'fourier', or a JSON matrix file",
    )
    common(p_family)

    p_analyze = sub.add_parser("analyze", help="report on a channel JSON file")
    p_analyze.add_argument("--in", dest="channel_path", required=True)
    common(p_analyze)

    p_sweep = sub.add_parser("sweep", help="phase sweep CSV for the first qubit family")
    p_sweep.add_argument("--points", type=int, default=100)
    p_sweep.add_argument("--theta-max", dest="theta_max", type=float, default=math.pi / 2)
    p_sweep.add_argument("--phi", type=float, default=0.0)
    common(p_sweep)

    p_bloch = sub.add_parser("bloch", help="Bloch-sphere image CSV")
    p_bloch.add_argument("--family", default="qubit-a", choices=["qubit-a", "qubit-b", "identity"])
    p_bloch.add_argument("--theta", type=float, default=0.0)
    p_bloch.add_argument("--phi", type=float, default=0.0)
    p_bloch.add_argument("--points", type=int, default=500)
    p_bloch.add_argument(
        "--batch", action="store_true", help="emit the theta = k pi/8 batch, k = 0..8"
    )
    common(p_bloch)

    p_dyn = sub.add_parser("dynamics", help="driven-family trajectory CSV + summary JSON")
    p_dyn.add_argument("--family", default="qubit-a", choices=["qubit-a", "qubit-b", "ad"])
    p_dyn.add_argument("--omega", type=float, default=1.0)
    p_dyn.add_argument("--t-max", dest="t_max", type=float, default=math.pi)
    p_dyn.add_argument("--steps", type=int, default=4096, help="number of uniform time intervals")
    common(p_dyn)

    return parser


COMMANDS = {
    "family": cmd_family,
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "bloch": cmd_bloch,
    "dynamics": cmd_dynamics,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fields = {k: v for k, v in vars(args).items() if v is not None}
    try:
        cfg = RunConfig(**fields)
        return COMMANDS[cfg.command](cfg)
    except (ChannelFormatError,) as exc:
        print(f"qchan: input format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except NumericalError as exc:
        print(f"qchan: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, OSError) as exc:
        print(f"qchan: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":
    sys.exit(main())
