"""Command line front end: ``outage-dea {efficiency,estimate-cost,what-if}``.

Exit codes: 0 success, 1 computation failure, 2 usage or input error.
Machine output goes to ``--out`` (stdout when omitted); diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .cost import (
    EnergyDistribution,
    SkipSample,
    average_power,
    energy_distribution,
    interruption_cost,
    monte_carlo_estimate,
)
from .dea import DEAError, efficiency, efficiency_all
from .ingest import (
    ParseError,
    ProducerReport,
    Report,
    file_digest,
    parse_distributions,
    parse_outages,
    parse_producers,
    write_efficiency,
    write_report,
)
from .inverse import InverseDEAError, estimate_output, perturbed_inputs
from .lp import LPIterationError
from .reference import DISTRIBUTIONS_CSV, EXPECTED_COSTS, PRODUCERS_CSV

log = logging.getLogger("outage_dea")

COST_BAND = 0.20
# 4*std vs (mean - base): std printed to 0.1 MWh, mean and base to 1 MWh
SIGMA_LINK_TOL_MWH = 0.5


class UsageError(Exception):
    pass


def _read(path):
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_dataset(args, digests):
    if args.dataset:
        raw = _read(args.dataset)
        digests["dataset"] = file_digest(raw)
        return parse_producers(raw), False
    if not args.builtin:
        raise UsageError("need --dataset PATH or --builtin")
    digests["dataset"] = file_digest(PRODUCERS_CSV)
    return parse_producers(PRODUCERS_CSV), True


def _load_distributions(args, dataset, digests):
    if args.distributions and args.outages:
        raise UsageError("--distributions and --outages are mutually exclusive")
    if args.distributions:
        raw = _read(args.distributions)
        digests["distributions"] = file_digest(raw)
        return parse_distributions(raw, dataset), False
    if args.outages:
        raw = _read(args.outages)
        digests["outages"] = file_digest(raw)
        records = parse_outages(raw)
        known = set(dataset.ids)
        for r in records:
            if r.producer_id not in known:
                raise UsageError(f"outage record for unknown producer {r.producer_id!r}")
        dists = []
        for p in dataset:
            own = [r for r in records if r.producer_id == p.id]
            demand = average_power(p.electricity_mwh, args.work_hours)
            dists.append(energy_distribution(p.id, p.electricity_mwh, own, demand))
        return dists, False
    if not args.builtin:
        raise UsageError("need --distributions PATH, --outages PATH or --builtin")
    digests["distributions"] = file_digest(DISTRIBUTIONS_CSV)
    return parse_distributions(DISTRIBUTIONS_CSV, dataset), True


def _emit(text, args):
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def reference_notes(dists, estimates) -> list[str]:
    """Discrepancies between a run on the built-in data and the published figures."""
    notes = []
    for d in dists:
        lost = d.mean_mwh - d.base_mwh
        if abs(4 * d.std_mwh - lost) > SIGMA_LINK_TOL_MWH:
            notes.append(
                f"{d.producer_id}: published std {d.std_mwh!r} MWh != (mean - base)/4 = {lost / 4!r} MWh; "
                "published std used"
            )
    for est in estimates:
        target = EXPECTED_COSTS.get(est.producer_id)
        if target is None:
            continue
        if est.mean_ic is None:
            notes.append(f"{est.producer_id}: no usable samples; published cost {target!r} Rial/kWh")
        elif abs(est.mean_ic - target) > COST_BAND * target:
            notes.append(
                f"{est.producer_id}: mean_ic {est.mean_ic:.6g} Rial/kWh outside +/-20% of published "
                f"{target!r} Rial/kWh"
            )
    usable = [e for e in estimates if e.mean_ic is not None]
    if usable:
        lo = min(usable, key=lambda e: e.mean_ic).producer_id
        hi = max(usable, key=lambda e: e.mean_ic).producer_id
        if lo != "P1" or hi != "P7":
            notes.append(f"ordering: lowest mean_ic is {lo}, highest is {hi} (published: P1 lowest, P7 highest)")
    return notes


def cmd_efficiency(args) -> int:
    digests = {}
    dataset, _ = _load_dataset(args, digests)
    _emit(write_efficiency(efficiency_all(dataset), args.format), args)
    return 0


def cmd_estimate_cost(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.seed < 0:
        raise UsageError("--seed must be >= 0")
    if not args.work_hours > 0:
        raise UsageError("--work-hours must be > 0")
    digests = {}
    dataset, builtin_data = _load_dataset(args, digests)
    dists, builtin_dists = _load_distributions(args, dataset, digests)

    by_id = {d.producer_id: d for d in dists}
    rows, estimates = [], []
    for k, p in enumerate(dataset):
        dist = by_id.get(p.id)
        if dist is None:
            log.warning("%s: no distribution given, skipped", p.id)
            continue
        eff = efficiency(dataset, k)
        est = monte_carlo_estimate(dataset, k, dist, args.samples, args.seed)
        estimates.append(est)
        rows.append(ProducerReport(p.id, p.electricity_mwh, eff.efficiency_index, eff.z, dist, est))

    notes = reference_notes(dists, estimates) if (builtin_data and builtin_dists) else []
    for note in notes:
        log.warning("discrepancy: %s", note)
    report = Report(rows, args.seed, args.samples, __version__, digests, notes)
    _emit(write_report(report, args.format), args)
    return 0


def cmd_what_if(args) -> int:
    digests = {}
    dataset, _ = _load_dataset(args, digests)
    try:
        k = dataset.index_of(args.producer)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    p = dataset[k]
    if not args.e_new >= p.electricity_mwh:
        raise UsageError(f"--e-new {args.e_new} is below {p.id}'s consumption {p.electricity_mwh}")
    z0 = efficiency(dataset, k).z
    beta = estimate_output(dataset, k, perturbed_inputs(p, args.e_new), z0).beta
    beta = max(beta, p.sales_value)
    try:
        ic = interruption_cost(beta, p.sales_value, args.e_new, p.electricity_mwh)
    except SkipSample:
        ic = None
    if args.format == "json":
        out = {"producer_id": p.id, "e_new_mwh": args.e_new, "z0": z0, "beta": beta,
               "ic_rial_per_kwh": "n/a" if ic is None else ic}
        text = json.dumps(out, indent=2, sort_keys=True) + "\n"
    else:
        text = "producer_id,e_new_mwh,z0,beta,ic_rial_per_kwh\n"
        text += f"{p.id},{args.e_new!r},{z0!r},{beta!r},{'n/a' if ic is None else repr(ic)}\n"
    _emit(text, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outage-dea", description="DEA-based power interruption cost estimation"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dataset", help="producers CSV")
    common.add_argument("--builtin", action="store_true", help="use the embedded reference data")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("efficiency", parents=[common], help="CCR efficiency of every producer")
    p.set_defaults(func=cmd_efficiency)

    p = sub.add_parser("estimate-cost", parents=[common], help="Monte Carlo interruption cost")
    p.add_argument("--distributions", help="CSV of producer_id,mean_mwh,std_mwh")
    p.add_argument("--outages", help="CSV of producer_id,duration_h,demand_mw")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--work-hours", type=float, default=8760.0,
                   help="annual work hours for the average-power demand fallback")
    p.set_defaults(func=cmd_estimate_cost)

    p = sub.add_parser("what-if", parents=[common], help="output estimate at one electricity level")
    p.add_argument("--producer", required=True)
    p.add_argument("--e-new", type=float, required=True, help="new electricity consumption (MWh)")
    p.set_defaults(func=cmd_what_if)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DEAError, InverseDEAError, LPIterationError, RuntimeError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
