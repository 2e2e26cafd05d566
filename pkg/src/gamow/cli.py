"""Command-line front end: reps, poles, phase, evolve, spectral, hardy.

Output is deterministic: floats are printed with 12 significant digits, JSON
keys are sorted, CSV uses a header row with '.' decimals and no locale
dependence.  Exit codes: 0 success, 1 domain/model error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import dynamics, reps, scattering, spectral

__all__ = ["RunConfig", "parse_args", "run", "main"]


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    params: dict
    fmt: str
    out: str | None


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _round12(x: float) -> float:
    return float(_fmt(x))


def _finite(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"number must be finite, got {text!r}")
    return value


def _pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated numbers, got {text!r}")
    return _finite(parts[0]), _finite(parts[1])


def _packet_spec(text: str) -> tuple[str, float, float]:
    kind, _, rest = text.partition(":")
    if kind != "gaussian":
        raise argparse.ArgumentTypeError(f"unknown packet kind {kind!r}; expected gaussian:<center>,<width>")
    center, width = _pair(rest)
    return kind, center, width


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamow",
        description="Delta-shell resonances, Gamow semigroup evolution, "
        "inversion co-representations, and spectral expansions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, default_format="text"):
        p.add_argument("--format", choices=["text", "json", "csv"], default=default_format)
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    p = sub.add_parser("reps", help="build one co-representation row and verify its relations")
    p.add_argument("--row", type=int, choices=[1, 2, 3, 4], required=True)
    p.add_argument("--twice-j", type=int, required=True, dest="twice_j")
    add_common(p)

    p = sub.add_parser("poles", help="locate resonance poles in a k-plane rectangle")
    p.add_argument("--g", type=_finite, required=True)
    p.add_argument("--a", type=_finite, required=True)
    p.add_argument("--re", type=_pair, required=True, metavar="MIN,MAX")
    p.add_argument("--im", type=_pair, required=True, metavar="MIN,MAX")
    p.add_argument("--seeds", type=int, nargs=2, default=(48, 24), metavar=("NRE", "NIM"))
    add_common(p)

    p = sub.add_parser("phase", help="phase shift and sin^2(delta) on an energy grid")
    p.add_argument("--g", type=_finite, required=True)
    p.add_argument("--a", type=_finite, required=True)
    p.add_argument("--emin", type=_finite, required=True)
    p.add_argument("--emax", type=_finite, required=True)
    p.add_argument("--n", type=int, default=200)
    add_common(p, default_format="csv")

    p = sub.add_parser("evolve", help="sample one semigroup evolution law")
    p.add_argument("--er", type=_finite, required=True)
    p.add_argument("--gamma", type=_finite, required=True)
    p.add_argument("--law", choices=["g0", "d0", "g1", "d1"], required=True)
    p.add_argument("--t0", type=_finite, required=True)
    p.add_argument("--t1", type=_finite, required=True)
    p.add_argument("--n", type=int, default=100)
    add_common(p, default_format="csv")

    p = sub.add_parser("spectral", help="wavepacket reconstruction from the eigenfunction expansion")
    p.add_argument("--g", type=_finite, required=True)
    p.add_argument("--a", type=_finite, required=True)
    p.add_argument("--kmax", type=_finite, default=30.0)
    p.add_argument("--nk", type=int, default=2000)
    p.add_argument("--rmax", type=_finite, default=10.0)
    p.add_argument("--nr", type=int, default=4001)
    p.add_argument("--packet", type=_packet_spec, required=True, metavar="gaussian:CENTER,WIDTH")
    add_common(p)

    p = sub.add_parser("hardy", help="Paley-Wiener membership of a windowed resonance function")
    p.add_argument("--pole", type=_pair, required=True, metavar="ER,GAMMA")
    p.add_argument("--emin", type=_finite, default=None)
    p.add_argument("--emax", type=_finite, default=None)
    p.add_argument("--n", type=int, default=131072)
    p.add_argument("--half-plane", choices=["upper", "lower", "both"], default="both",
                   dest="half_plane")
    add_common(p)

    return parser


def parse_args(argv) -> RunConfig:
    """Parse argv into a RunConfig; exits with status 2 on usage errors."""
    ns = _build_parser().parse_args(argv)
    params = vars(ns)
    sub = params.pop("subcommand")
    fmt = params.pop("format")
    out = params.pop("out")
    return RunConfig(subcommand=sub, params=params, fmt=fmt, out=out)


def _emit(config: RunConfig, text_lines, json_obj, csv_rows, csv_header):
    if config.fmt == "json":
        body = json.dumps(json_obj, indent=2, sort_keys=True) + "\n"
    elif config.fmt == "csv":
        lines = [",".join(csv_header)]
        lines += [",".join(row) for row in csv_rows]
        body = "\n".join(lines) + "\n"
    else:
        body = "\n".join(text_lines) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _matrix_lines(name: str, op: reps.SymmetryOperator) -> list[str]:
    kind = "antilinear" if op.antilinear else "linear"
    lines = [f"{name} ({kind}):"]
    for row in np.asarray(op.matrix, dtype=int):
        lines.append("  [" + " ".join(f"{v:2d}" for v in row) + "]")
    return lines


def _run_reps(config: RunConfig) -> None:
    row = reps.RepRow(config.params["row"])
    spin = reps.SpinLabel(config.params["twice_j"])
    report = reps.verify_group_relations(row, spin)
    sigma = reps.build_sigma(row, spin)
    r_op = reps.build_r(row, spin)
    t_op = reps.build_t(row, spin)
    c_op = reps.build_c_matrix(spin)

    text = [
        f"row {row.value}, twice_j = {spin.twice_j} (j = {_fmt(spin.j)})",
        f"eps_r = {report.eps_r:+d}   eps_t = {report.eps_t:+d}   "
        f"commutation_sign = {report.commutation_sign:+d}",
        f"sigma_squared_is_identity = {report.sigma_squared_is_identity}",
        f"r_squared_matches_eps_r   = {report.r_squared_matches_eps_r}",
        f"t_squared_matches_eps_t   = {report.t_squared_matches_eps_t}",
        f"t_equals_sigma_r          = {report.t_equals_sigma_r}",
        f"sigma_r_equals_r_sigma    = {report.sigma_r_equals_r_sigma}",
    ]
    for name, op in (("C", c_op), ("Sigma", sigma), ("R", r_op), ("T", t_op)):
        text += _matrix_lines(name, op)

    json_obj = report.as_dict()
    json_obj.update(
        {
            "c": np.asarray(c_op.matrix, dtype=int).tolist(),
            "sigma": np.asarray(sigma.matrix, dtype=int).tolist(),
            "r": np.asarray(r_op.matrix, dtype=int).tolist(),
            "t": np.asarray(t_op.matrix, dtype=int).tolist(),
        }
    )
    header = ["relation", "value"]
    rows = [[k, str(v)] for k, v in report.as_dict().items()]
    _emit(config, text, json_obj, rows, header)


def _run_poles(config: RunConfig) -> None:
    p = config.params
    model = scattering.DeltaShellModel(g=p["g"], a=p["a"])
    region = scattering.SearchRegion(
        p["re"][0], p["re"][1], p["im"][0], p["im"][1],
        n_re=p["seeds"][0], n_im=p["seeds"][1],
    )
    poles = scattering.find_poles(model, region)
    header = ["re_k", "im_k", "e_r", "gamma", "abs_denominator"]
    rows = []
    for pole in poles:
        resid = abs(complex(scattering.denominator(model, pole.k_pole)))
        rows.append([
            _fmt(pole.k_pole.real), _fmt(pole.k_pole.imag),
            _fmt(pole.e_r), _fmt(pole.gamma), _fmt(resid),
        ])
    text = [f"{len(poles)} pole(s) in Re k in [{_fmt(region.re_min)}, {_fmt(region.re_max)}], "
            f"Im k in [{_fmt(region.im_min)}, {_fmt(region.im_max)}]"]
    text.append("  ".join(f"{h:>16s}" for h in header))
    for row in rows:
        text.append("  ".join(f"{v:>16s}" for v in row))
    json_obj = {
        "g": _round12(model.g), "a": _round12(model.a),
        "poles": [
            {
                "re_k": _round12(pole.k_pole.real),
                "im_k": _round12(pole.k_pole.imag),
                "e_r": _round12(pole.e_r),
                "gamma": _round12(pole.gamma),
                "abs_denominator": _round12(abs(complex(scattering.denominator(model, pole.k_pole)))),
            }
            for pole in poles
        ],
    }
    _emit(config, text, json_obj, rows, header)


def _run_phase(config: RunConfig) -> None:
    p = config.params
    model = scattering.DeltaShellModel(g=p["g"], a=p["a"])
    if p["n"] < 2:
        raise ValueError("need at least 2 grid points")
    energies = np.linspace(p["emin"], p["emax"], p["n"])
    if np.any(energies <= 0):
        raise ValueError("phase shift requires positive energies (emin > 0)")
    delta = scattering.phase_shift_curve(model, energies)
    s2 = np.sin(delta) ** 2
    header = ["E", "delta", "sin2delta"]
    rows = [[_fmt(e), _fmt(d), _fmt(s)] for e, d, s in zip(energies, delta, s2)]
    text = ["  ".join(f"{h:>16s}" for h in header)]
    text += ["  ".join(f"{v:>16s}" for v in row) for row in rows]
    json_obj = {
        "g": _round12(model.g), "a": _round12(model.a),
        "samples": [
            {"E": _round12(e), "delta": _round12(d), "sin2delta": _round12(s)}
            for e, d, s in zip(energies, delta, s2)
        ],
    }
    _emit(config, text, json_obj, rows, header)


def _run_evolve(config: RunConfig) -> None:
    p = config.params
    pole = scattering.ResonancePole.from_energy(p["er"], p["gamma"])
    law = dynamics.Law.from_code(p["law"])
    if p["n"] < 1:
        raise ValueError("need at least 1 sample")
    times = np.linspace(p["t0"], p["t1"], p["n"]) if p["n"] > 1 else np.array([p["t0"]])
    state = dynamics.GamowState(pole=pole, kind=law.kind, regime=law.regime)
    samples = dynamics.evolution_series(state, times)
    header = ["t", "re_amp", "im_amp", "survival"]
    rows = [
        [_fmt(s.t), _fmt(s.amplitude.real), _fmt(s.amplitude.imag), _fmt(s.survival)]
        for s in samples
    ]
    text = [f"law {law.code} ({law.kind.value}, r={law.regime}), domain {law.time_domain}"]
    text.append("  ".join(f"{h:>16s}" for h in header))
    text += ["  ".join(f"{v:>16s}" for v in row) for row in rows]
    json_obj = {
        "er": _round12(p["er"]), "gamma": _round12(p["gamma"]), "law": law.code,
        "samples": [
            {
                "t": _round12(s.t),
                "re_amp": _round12(s.amplitude.real),
                "im_amp": _round12(s.amplitude.imag),
                "survival": _round12(s.survival),
            }
            for s in samples
        ],
    }
    _emit(config, text, json_obj, rows, header)


def _run_spectral(config: RunConfig) -> None:
    p = config.params
    model = scattering.DeltaShellModel(g=p["g"], a=p["a"])
    _, center, width = p["packet"]
    if width <= 0:
        raise ValueError("packet width must be positive")
    decomp = spectral.build_decomposition(model, p["kmax"], p["nk"], p["rmax"], p["nr"])
    packet = spectral.gaussian_packet(center, width, p["rmax"], p["nr"])
    rebuilt = spectral.reconstruct(decomp, packet)
    error = spectral.reconstruct_error(decomp, packet)
    bound = [e for e, _ in decomp.discrete]
    text = [
        f"g = {_fmt(model.g)}, a = {_fmt(model.a)}, k_max = {_fmt(p['kmax'])}, "
        f"n_k = {decomp.k.size}, r_max = {_fmt(p['rmax'])}, n_r = {p['nr']}",
        f"packet: gaussian center = {_fmt(center)}, width = {_fmt(width)}",
        f"bound states: {len(bound)}"
        + ("" if not bound else " (E = " + ", ".join(_fmt(e) for e in bound) + ")"),
        f"relative L2 reconstruction error = {_fmt(error)}",
    ]
    header = ["r", "input", "reconstructed"]
    rows = [
        [_fmt(r), _fmt(v), _fmt(w)]
        for r, v, w in zip(decomp.r, packet.values, rebuilt.values)
    ]
    json_obj = {
        "g": _round12(model.g), "a": _round12(model.a),
        "k_max": _round12(p["kmax"]), "n_k": int(decomp.k.size),
        "r_max": _round12(p["rmax"]), "n_r": int(p["nr"]),
        "packet_center": _round12(center), "packet_width": _round12(width),
        "bound_energies": [_round12(e) for e in bound],
        "reconstruction_error": _round12(error),
    }
    _emit(config, text, json_obj, rows, header)


def _run_hardy(config: RunConfig) -> None:
    p = config.params
    e_r, gamma = p["pole"]
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    e_min = p["emin"] if p["emin"] is not None else e_r - 10000.0 * gamma
    e_max = p["emax"] if p["emax"] is not None else e_r + 10000.0 * gamma
    energies, samples = spectral.windowed_resonance_samples(e_r, gamma, e_min, e_max, p["n"])
    planes = ["upper", "lower"] if p["half_plane"] == "both" else [p["half_plane"]]
    reports = [spectral.hardy_check(energies, samples, hp) for hp in planes]
    text = [f"pole at {_fmt(e_r)} - {_fmt(0.5 * gamma)}i, window [{_fmt(e_min)}, {_fmt(e_max)}], "
            f"n = {p['n']}"]
    for rep in reports:
        text.append(
            f"{rep.half_plane:>5s} half-plane: leakage = {_fmt(rep.leakage)}, "
            f"member = {rep.is_member}"
        )
    json_obj = {
        "e_r": _round12(e_r), "gamma": _round12(gamma),
        "e_min": _round12(e_min), "e_max": _round12(e_max), "n": int(p["n"]),
        "reports": {
            rep.half_plane: {"leakage": _round12(rep.leakage), "is_member": rep.is_member}
            for rep in reports
        },
    }
    header = ["half_plane", "leakage", "is_member"]
    rows = [[rep.half_plane, _fmt(rep.leakage), str(rep.is_member)] for rep in reports]
    _emit(config, text, json_obj, rows, header)


_HANDLERS = {
    "reps": _run_reps,
    "poles": _run_poles,
    "phase": _run_phase,
    "evolve": _run_evolve,
    "spectral": _run_spectral,
    "hardy": _run_hardy,
}


def run(config: RunConfig) -> int:
    """Dispatch a parsed config; returns the process exit code."""
    try:
        _HANDLERS[config.subcommand](config)
    except (ValueError, OverflowError, scattering.PoleOnContourError,
            scattering.ResonanceFitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(parse_args(sys.argv[1:])))
