"""Command-line front end: ``ychannel {bounds,sweep,certify,simulate}``.

Exit codes: 0 success, 1 a certified claim failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from .fdf_protocol import ProtocolError, run_schedule, throughput, write_jsonl
from .gap_analysis import certify_gaps, gap, symmetric_gap
from .lower_bounds import lower_bound_report
from .model import ChannelGains, ChannelMode, DomainError, PowerBudget, PreconditionError, db_to_linear
from .outer_region import build_outer_region, max_sum_rate
from .upper_bounds import (
    sum_upper_cutset,
    sum_upper_general,
    sum_upper_restricted,
    symmetric_uppers,
)

CSV_COLUMNS = ("snr_db", "c_sigma", "c_sigma_g", "c_sigma_r",
               "c_I", "c_II", "c_III", "region_max", "gap")

EXIT_OK, EXIT_CLAIM, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def evaluate_point(ch: ChannelGains, pw: PowerBudget,
                   mode: ChannelMode = ChannelMode.GENERAL) -> dict:
    """Every bound at one operating point; P = Pr-only bounds are None otherwise."""
    region_mode = ChannelMode.RESTRICTED if mode is ChannelMode.RESTRICTED else ChannelMode.GENERAL
    poly = build_outer_region(ch, pw, region_mode)
    region_value, argmax = max_sum_rate(poly)
    lows = lower_bound_report(ch, pw)
    out = {
        "h": list(ch.h), "permutation": list(ch.permutation),
        "P": pw.p_user, "Pr": pw.p_relay, "mode": mode.value,
        "c_sigma": None, "c_sigma_g": None, "c_sigma_r": None,
        "c_I": lows.c_I, "c_II": lows.c_II, "c_III": lows.c_III,
        "lower_binding": lows.binding_terms,
        "region_max": region_value, "region_argmax": list(argmax.as_tuple()),
        "constraints": [{"label": c.label, "lhs": c.lhs_text(), "rhs": c.rhs,
                         "binding": c.binding} for c in poly.constraints],
        "gap": None, "gap_report": None,
    }
    if pw.is_equal:
        out["c_sigma"] = sum_upper_cutset(ch, pw)
        out["c_sigma_g"] = sum_upper_general(ch, pw)
        out["c_sigma_r"] = sum_upper_restricted(ch, pw)
    if ch.is_symmetric:
        c_cs, c_s, c_g = symmetric_uppers(pw)
        out.update(c_cs=c_cs, c_s=c_s, c_g=c_g, delta_g=symmetric_gap(pw))
    if mode is ChannelMode.SYMMETRIC:
        out["gap"] = out["delta_g"]
    elif pw.is_equal:
        rep = gap(ch, pw, mode)
        out["gap"] = rep.additive_gap
        out["gap_report"] = rep.as_dict()
    return out


# -- sweeps -----------------------------------------------------------------

@dataclass(frozen=True)
class SweepSpec:
    snr_from: float
    snr_to: float
    snr_step: float
    gains: ChannelGains
    mode: ChannelMode = ChannelMode.GENERAL
    link: str = "equal"

    def __post_init__(self):
        if not self.snr_step > 0:
            raise DomainError(f"snr_step must be positive, got {self.snr_step}")
        if self.snr_from > self.snr_to:
            raise DomainError("snr_from must not exceed snr_to")
        if self.link not in ("equal", "grid"):
            raise DomainError(f"link must be 'equal' or 'grid', got {self.link!r}")
        if self.mode is ChannelMode.SYMMETRIC and not self.gains.is_symmetric:
            raise DomainError("symmetric mode requires --h 1,1,1")

    def grid(self) -> list[float]:
        n = int(math.floor((self.snr_to - self.snr_from) / self.snr_step + 1e-9)) + 1
        return [round(self.snr_from + i * self.snr_step, 10) for i in range(n)]


def sweep_rows(spec: SweepSpec) -> list[dict]:
    rows = []
    snrs = spec.grid()
    pairs = ([(s, s) for s in snrs] if spec.link == "equal"
             else [(s, r) for s in snrs for r in snrs])
    for s, r in pairs:
        pw = PowerBudget(db_to_linear(s), db_to_linear(r))
        point = evaluate_point(spec.gains, pw, spec.mode)
        row = {k: point[k] for k in CSV_COLUMNS[1:]}
        row["snr_db"] = s
        if spec.link == "grid":
            row["snr_relay_db"] = r
        rows.append(row)
    return rows


def _fmt(v) -> str:
    return "" if v is None else f"{v:.6g}"


def write_sweep_csv(rows: list[dict], fh, link: str = "equal"):
    cols = list(CSV_COLUMNS)
    if link == "grid":
        cols.insert(1, "snr_relay_db")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_fmt(row[c]) for c in cols])


# -- argument handling --------------------------------------------------------

def _parse_gains(text: str) -> tuple[float, float, float]:
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"gains must be three numbers, got {text!r}")
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected three gains, got {len(vals)}")
    return vals


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _q_value(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"q must be >= 2, got {v}")
    return v


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    return str(text).strip().lower() in ("1", "true", "yes", "on")


def _add_channel_flags(p: argparse.ArgumentParser):
    p.add_argument("--h", type=_parse_gains, default=(1.0, 0.8, 0.7),
                   help="channel gains h1,h2,h3 (default 1,0.8,0.7)")
    p.add_argument("--canonicalize", action="store_true",
                   help="relabel users so that h1^2 >= h2^2 >= h3^2")
    p.add_argument("--mode", choices=[m.value for m in ChannelMode], default="general")


def _add_common_flags(p: argparse.ArgumentParser):
    p.add_argument("--config", help="key=value file mirroring the flags; flags win")
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p.add_argument("--out", help="write output to this path")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ychannel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="evaluate every bound at one operating point")
    _add_channel_flags(p)
    _add_common_flags(p)
    p.add_argument("--snr-db", type=float, help="user power in dB (unit noise)")
    p.add_argument("--snr-relay-db", type=float, help="relay power in dB (default: = --snr-db)")
    p.add_argument("--power", type=float, help="user power, linear")
    p.add_argument("--power-relay", type=float, help="relay power, linear (default: = --power)")

    p = sub.add_parser("sweep", help="bounds over an SNR range as CSV")
    _add_channel_flags(p)
    _add_common_flags(p)
    p.add_argument("--from", dest="snr_from", type=float, default=0.0)
    p.add_argument("--to", dest="snr_to", type=float, default=50.0)
    p.add_argument("--step", dest="snr_step", type=float, default=1.0)
    p.add_argument("--link", choices=["equal", "grid"], default="equal",
                   help="P = Pr, or an independent P x Pr grid over the same range")

    p = sub.add_parser("certify", help="sample random instances and check the gap claims")
    _add_common_flags(p)
    p.add_argument("--trials", type=_positive_int, default=100_000)
    p.add_argument("--mode", choices=["general", "restricted", "both"], default="both")

    p = sub.add_parser("simulate", help="run the three-slot FDF schedule")
    _add_common_flags(p)
    p.add_argument("--frames", type=_positive_int, default=100)
    p.add_argument("--q", type=_q_value, default=256)
    p.add_argument("--no-drain", action="store_true",
                   help="omit the trailing relay-only block")
    p.add_argument("--rate", type=float, default=1.0, help="bits per delivered message")
    return parser


def _load_config(path: str) -> dict:
    cp = configparser.ConfigParser()
    with open(path) as fh:
        cp.read_string("[ychannel]\n" + fh.read())
    return {k.replace("-", "_"): v for k, v in cp["ychannel"].items()}


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        subparser = parser._subparsers._group_actions[0].choices[args.command]
        known = {}
        for action in subparser._actions:
            known[action.dest] = action
            for opt in action.option_strings:
                known[opt.lstrip("-").replace("-", "_")] = action
        defaults = {}
        for key, value in _load_config(args.config).items():
            action = known.get(key)
            if action is None or action.dest in ("config", "help"):
                parser.error(f"unknown config key {key!r} for {args.command}")
            defaults[action.dest] = _bool(value) if action.nargs == 0 else value
        # String defaults go through each action's type on the second parse.
        subparser.set_defaults(**defaults)
        args = parser.parse_args(argv)
    return args


def _gains(args) -> ChannelGains:
    h = args.h
    if args.canonicalize:
        return ChannelGains.canonical(*h)
    return ChannelGains(*h)


def _powers(args) -> PowerBudget:
    if args.snr_db is not None:
        if args.power is not None:
            raise UsageError("give either --snr-db or --power, not both")
        relay = args.snr_relay_db if args.snr_relay_db is not None else args.snr_db
        return PowerBudget.from_db(args.snr_db, relay)
    if args.power is not None:
        relay = args.power_relay if args.power_relay is not None else args.power
        return PowerBudget(args.power, relay)
    raise UsageError("one of --snr-db or --power is required")


def _emit(text: str, path: str | None, stdout):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _bounds_table(point: dict) -> str:
    def line(name, value):
        return f"  {name:<12} {'n/a' if value is None else f'{value:.6f}'}\n"

    buf = io.StringIO()
    buf.write(f"h = {tuple(point['h'])}  (users {tuple(point['permutation'])})  "
              f"P = {point['P']:.6g}  Pr = {point['Pr']:.6g}  mode = {point['mode']}\n")
    buf.write("sum-rate upper bounds [bits/channel use]\n")
    for key in ("c_sigma", "c_sigma_g", "c_sigma_r", "c_cs", "c_s", "c_g"):
        if key in point:
            buf.write(line(key, point[key]))
    buf.write(line("region_max", point["region_max"]))
    buf.write("sum-rate lower bounds\n")
    for key in ("c_I", "c_II", "c_III"):
        buf.write(line(key, point[key]))
    buf.write("gap\n")
    buf.write(line("additive", point["gap"]))
    rep = point["gap_report"]
    if rep is not None:
        buf.write(f"  {'regime':<12} {rep['regime']}\n")
        buf.write(line("analytic_cap", rep["analytic_cap"]))
        buf.write(line("multiplicative", rep["multiplicative_gap"]))
    buf.write("outer-region constraints\n")
    width = max(len(c["label"]) for c in point["constraints"])
    for c in point["constraints"]:
        buf.write(f"  {c['label']:<{width}}  {c['lhs']:<20} <= {c['rhs']:.6f}"
                  f"{'  (' + c['binding'] + ')' if c['binding'] else ''}\n")
    return buf.getvalue()


def cmd_bounds(args, stdout) -> int:
    mode = ChannelMode(args.mode)
    ch = _gains(args)
    if mode is ChannelMode.SYMMETRIC and not ch.is_symmetric:
        raise UsageError("symmetric mode requires --h 1,1,1")
    point = evaluate_point(ch, _powers(args), mode)
    text = json.dumps(point, indent=2) + "\n" if args.json else _bounds_table(point)
    _emit(text, args.out, stdout)
    return EXIT_OK


def cmd_sweep(args, stdout) -> int:
    spec = SweepSpec(args.snr_from, args.snr_to, args.snr_step, _gains(args),
                     ChannelMode(args.mode), args.link)
    rows = sweep_rows(spec)
    if args.json:
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        write_sweep_csv(rows, buf, spec.link)
        text = buf.getvalue()
    _emit(text, args.out, stdout)
    return EXIT_OK


def cmd_certify(args, stdout) -> int:
    modes = ((ChannelMode.GENERAL, ChannelMode.RESTRICTED) if args.mode == "both"
             else (ChannelMode(args.mode),))
    cert = certify_gaps(args.trials, args.seed, modes=modes)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(cert.to_json(indent=2) + "\n")
    if args.json:
        stdout.write(cert.to_json(indent=2) + "\n")
    else:
        for c in cert.claims:
            observed = "n/a" if c.max_observed is None else f"{c.max_observed:.6f}"
            stdout.write(f"{'PASS' if c.passed else 'FAIL'}  {c.claim:<32} "
                         f"max {observed} <= {c.bound:.6f}  ({c.samples} samples)\n")
            if not c.passed:
                stdout.write(f"      witness trial {c.witness_trial}: {c.witness}\n")
    return EXIT_OK if cert.passed else EXIT_CLAIM


def cmd_simulate(args, stdout) -> int:
    transcripts, delivered, correct = run_schedule(args.frames, args.q, args.seed,
                                                   drain=not args.no_drain)
    if args.out:
        with open(args.out, "w") as fh:
            write_jsonl(transcripts, fh)
    summary = {"frames": args.frames, "q": args.q, "seed": args.seed,
               "blocks": len(transcripts), "delivered": delivered, "correct": correct,
               "throughput": throughput(transcripts, args.rate)}
    if args.json:
        stdout.write(json.dumps(summary) + "\n")
    else:
        stdout.write(" ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}"
                              for k, v in summary.items()) + "\n")
    return EXIT_OK if correct else EXIT_CLAIM


COMMANDS = {"bounds": cmd_bounds, "sweep": cmd_sweep,
            "certify": cmd_certify, "simulate": cmd_simulate}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, stdout)
    except (UsageError, DomainError, PreconditionError, ProtocolError) as exc:
        stderr.write(f"ychannel {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
