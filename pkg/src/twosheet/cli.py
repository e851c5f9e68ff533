"""Command-line front end: JSON scenarios in, JSON/CSV results out.

Exit codes: 0 success, 1 domain error (error name from the owning module),
2 malformed input (bad JSON, schema violation, unreadable file).  Errors are
emitted as machine-readable JSON objects on stdout.  Output is byte-stable
for identical inputs and seeds.
"""

import argparse
import csv
import io
import json
import math
import sys

import jsonschema
import numpy as np

from . import causality, dispersion, distance, fluctuation
from .clifford import build_gamma_basis
from .errors import StateError, TwoSheetError
from .finite_triple import (decode_complex, electroweak_triple, encode_matrix,
                            triple_from_dict, validate_axioms)
from .schemas import INPUT_SCHEMAS, TRIPLE_SCHEMA


class InputError(Exception):
    """Malformed input: maps to exit code 2."""


def _num(x: float):
    return "inf" if math.isinf(x) else float(x)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _validated(doc, schema, context: str):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise InputError(f"{context}: {exc.message}") from exc
    return doc


def _load_triple(path: str):
    doc = _validated(_read_json(path), TRIPLE_SCHEMA, f"triple file {path}")
    return triple_from_dict(doc)


def _scenario(args, command: str):
    return _validated(_read_json(args.input), INPUT_SCHEMAS[command],
                      f"scenario for {command}")


def _event(doc) -> causality.Event:
    return causality.Event(t=doc["t"], x=np.asarray(doc["x"], dtype=float))


def _parse_state(text: str, n: int) -> distance.AlgebraState:
    try:
        return distance.AlgebraState.pure(int(text), n)
    except ValueError:
        pass
    try:
        weights = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"state {text!r} is neither an index nor a JSON list") from exc
    if not isinstance(weights, list):
        raise InputError(f"state {text!r} must decode to a list of weights")
    return distance.AlgebraState(np.asarray(weights, dtype=float))


def _cmd_validate(args, basis):
    triple = _load_triple(args.triple)
    tol = args.tolerance if args.tolerance is not None else 1e-10
    report = validate_axioms(triple, basis, tol=tol)
    return {
        "all_passed": report.all_passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in report.checks],
    }


def _cmd_distance(args, basis):
    triple = _load_triple(args.triple)
    n = len(triple.algebra_generators)
    state_a = _parse_state(args.state_a, n)
    state_b = _parse_state(args.state_b, n)
    tol = args.tolerance if args.tolerance is not None else 1e-12
    result = distance.connes_distance(triple, state_a, state_b, seed=args.seed,
                                      oracle_step=args.oracle_step, tol=tol)
    return {
        "value": _num(result.value),
        "maximizer": None if result.maximizer is None else encode_matrix(result.maximizer),
        "gap": None if result.gap is None else float(result.gap),
    }


def _cmd_causal(args, basis):
    doc = _scenario(args, "causal")
    ev_a, ev_b = _event(doc["event_a"]), _event(doc["event_b"])
    m = decode_complex(doc["m"])
    tol = args.tolerance if args.tolerance is not None else causality.BOUNDARY_TOL
    precedes = causality.minkowski_precedes(ev_a, ev_b)
    tau = causality.proper_time(ev_a, ev_b) if precedes else None

    if "sheets" in doc:
        i, j = doc["sheets"]
        pa = causality.SheetPoint(ev_a, i)
        pb = causality.SheetPoint(ev_b, j)
        related = causality.causally_related_pure(pa, pb, m, tol=tol)
        l2m = causality.extremal_length_sq_sheets(pa, pb, m)
        threshold = causality.crossing_threshold(m) if i != j else 0.0
    else:
        xi, eta = doc["xis"]
        sa = causality.MixedState(ev_a, xi)
        sb = causality.MixedState(ev_b, eta)
        related = causality.causally_related_mixed(sa, sb, m, tol=tol)
        l2m = None
        if m == 0:
            threshold = 0.0 if xi == eta else math.inf
        else:
            threshold = abs(math.asin(math.sqrt(eta)) - math.asin(math.sqrt(xi))) / abs(m)

    return {
        "related": related,
        "L2m": None if l2m is None else _num(l2m),
        "proper_time": None if tau is None else float(tau),
        "threshold": _num(threshold),
    }


def _cmd_cone(args, basis):
    doc = _scenario(args, "cone")
    tol = args.tolerance if args.tolerance is not None else causality.BOUNDARY_TOL
    if "k" in doc:
        k = np.asarray(doc["k"], dtype=float)
        worst = float(np.max(np.linalg.eigvalsh(causality.affine_cone_matrix(k, basis))))
        return {"causal": worst <= tol, "worst_eigenvalue": worst}

    box = doc["box"]
    axes = [np.linspace(box[name][0], box[name][1], box["n"]) for name in ("t", "x", "y", "z")]
    mesh = np.meshgrid(*axes, indexing="ij")
    events = [causality.Event(t=pt[0], x=np.asarray(pt[1:]))
              for pt in np.stack([m.ravel() for m in mesh], axis=1)]
    m = decode_complex(doc["m"])
    worst = -math.inf
    for ev in events:
        mat = causality.two_sheet_cone_matrix(doc["k0"], doc["k1"], doc["c0"],
                                              doc["c1"], m, ev, basis)
        worst = max(worst, float(np.max(np.linalg.eigvalsh(mat))))
    return {"causal": worst <= tol, "worst_eigenvalue": worst}


def _cmd_lightcone_scan(args, basis):
    doc = _scenario(args, "lightcone-scan")
    m = decode_complex(doc["m"])
    origin = causality.SheetPoint(causality.Event(0.0, np.zeros(3)), 0)
    tol = args.tolerance if args.tolerance is not None else causality.BOUNDARY_TOL
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "r", "sheet_crossing_allowed"])
    for t in np.linspace(doc["t_min"], doc["t_max"], doc["t_steps"]):
        for r in np.linspace(doc["r_min"], doc["r_max"], doc["r_steps"]):
            target = causality.SheetPoint(
                causality.Event(float(t), np.array([float(r), 0.0, 0.0])), 1)
            allowed = causality.causally_related_pure(origin, target, m, tol=tol)
            writer.writerow([repr(float(t)), repr(float(r)), int(allowed)])
    return buf.getvalue()


def _cmd_classify(args, basis):
    doc = _scenario(args, "classify")
    triple = _load_triple(doc["triple_file"])
    tol = doc.get("tol")
    if tol is None:
        tol = args.tolerance if args.tolerance is not None else 1e-9
    mode = dispersion.PlaneWaveMode(E=doc["E"], p=np.asarray(doc["p"], dtype=float),
                                    internal=doc["internal_index"])
    result = dispersion.classify_spinor(triple, mode, basis, tol=tol)
    mass = dispersion.internal_mass(triple, doc["internal_index"])
    return {
        "class": result.kind.value,
        "ratio": result.ratio,
        "on_shell_E": dispersion.on_shell_energy(mode.p, mass),
    }


def _field_from_doc(doc) -> fluctuation.HiggsField:
    if "h1" in doc:
        return fluctuation.HiggsField(h1=decode_complex(doc["h1"]),
                                      h2=decode_complex(doc["h2"]))
    return fluctuation.HiggsField.broken(doc["v"], doc["h"])


def _cmd_fluctuate(args, basis):
    doc = _scenario(args, "fluctuate")
    m_e = decode_complex(doc["m_e"])
    field = _field_from_doc(doc)
    phi = fluctuation.higgs_phi(m_e, field)
    full = fluctuation.higgs_phi_completion(m_e, field)
    pair = fluctuation.pair_for_higgs(field.h1, field.h2)
    rebuilt = fluctuation.inner_fluctuation(electroweak_triple(m_e), *pair)
    return {
        "phi": encode_matrix(phi),
        "Phi": encode_matrix(full),
        "trace_phi_sq": fluctuation.trace_phi_sq(phi),
        "closed_form": fluctuation.trace_phi_sq_closed_form(m_e, field),
        "max_abs_diff": float(np.max(np.abs(rebuilt - full))),
    }


def _cmd_ew_dispersion(args, basis):
    doc = _scenario(args, "ew-dispersion")
    m_e = decode_complex(doc["m_e"])
    field = fluctuation.HiggsField.broken(doc["v"], doc["h"])
    triple = electroweak_triple(m_e)
    if doc["state"] not in triple.labels:
        raise StateError(f"unknown internal state label {doc['state']!r}")
    index = triple.labels.index(doc["state"])
    phi_full = fluctuation.higgs_phi_completion(m_e, field)
    mass_sq = float(np.real((phi_full @ phi_full)[index, index]))
    p = np.asarray(doc["p"], dtype=float)
    energy = math.sqrt(float(p @ p) + mass_sq)
    block_tol = args.tolerance if args.tolerance is not None else 1e-12
    residual = fluctuation.fluctuated_dispersion(triple, m_e, field, energy, p,
                                                 doc["state"], basis,
                                                 block_tol=block_tol)
    return {"E_on_shell": energy, "residual": residual}


_HANDLERS = {
    "validate": _cmd_validate,
    "distance": _cmd_distance,
    "causal": _cmd_causal,
    "cone": _cmd_cone,
    "lightcone-scan": _cmd_lightcone_scan,
    "classify": _cmd_classify,
    "fluctuate": _cmd_fluctuate,
    "ew-dispersion": _cmd_ew_dispersion,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=None,
                        help="override the default tolerance of the operation")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized internals (distance multi-start)")
    common.add_argument("--output", default=None,
                        help="write the result to this path instead of stdout")

    parser = argparse.ArgumentParser(prog="twosheet",
                                     description="two-sheet spectral geometry toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check finite-triple axioms")
    p.add_argument("--triple", required=True, help="path to a triple JSON document")

    p = sub.add_parser("distance", parents=[common], help="Connes distance between states")
    p.add_argument("--triple", required=True)
    p.add_argument("--state-a", required=True,
                   help="pure-state index or JSON list of weights")
    p.add_argument("--state-b", required=True)
    p.add_argument("--oracle-step", type=float, default=None,
                   help="also run the grid oracle with this step")

    for name, help_text in (
        ("causal", "causal relation between two (sheet or mixed) points"),
        ("cone", "causal-cone test for an affine function or two-sheet element"),
        ("lightcone-scan", "CSV scan of the cross-sheet cone boundary"),
        ("classify", "classify a plane-wave mode"),
        ("fluctuate", "assemble the fluctuated internal operator"),
        ("ew-dispersion", "fluctuated dispersion relation residual"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", nargs="?", default="-",
                       help="scenario JSON path (default: stdin)")
    return parser


def _emit(text: str, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    basis = build_gamma_basis()
    handler = _HANDLERS[args.command]
    try:
        result = handler(args, basis)
    except InputError as exc:
        sys.stdout.write(json.dumps({"error": "MalformedInput", "message": str(exc)},
                                    sort_keys=True) + "\n")
        return 2
    except TwoSheetError as exc:
        sys.stdout.write(json.dumps({"error": type(exc).__name__, "message": str(exc)},
                                    sort_keys=True) + "\n")
        return 1
    if isinstance(result, str):
        _emit(result, args.output)
    else:
        _emit(json.dumps(result, sort_keys=True) + "\n", args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
