"""Serialization for command output and P-object round trips.

CSV columns and the JSON schema tag are stable interfaces; numbers are
written in scientific notation with 12 significant digits so identical
inputs produce identical bytes.
"""
from __future__ import annotations

import csv
import json

from .geomphase import PhaseScenario, ReconciliationReport, ReconciliationRow
from .pdistribution import (
    DeltaDerivativeTerm,
    PhaseSpacePoint,
    QuasiProbability,
    mehta_p_function,
)

__all__ = [
    "SCHEMA",
    "SWEEP_COLUMNS",
    "format_float",
    "scenario_to_dict",
    "row_to_dict",
    "sweep_row",
    "write_sweep_csv",
    "sweep_document",
    "phase_document",
    "validation_document",
    "reconciliation_document",
    "pfunc_document",
    "pfunc_from_document",
    "dump_json",
]

SCHEMA = "bargmann-phase/1"

SWEEP_COLUMNS = (
    "theta1",
    "theta2",
    "phase_fock",
    "phase_pairing",
    "phase_printed",
    "abs_delta_max",
    "flag",
)


def format_float(x) -> str:
    """12 significant digits, scientific; nan encodes an undefined phase."""
    if x is None:
        return "nan"
    return f"{float(x):.11e}"


def _round_trip(x) -> float | None:
    # JSON carries floats; round through the fixed precision so CSV and
    # JSON views of the same run cannot disagree.
    return None if x is None else float(format_float(x))


def scenario_to_dict(scenario: PhaseScenario) -> dict:
    def mode_pair(vertex):
        return [vertex[0].q, vertex[0].p, vertex[1].q, vertex[1].p]

    doc = {
        "kind": "evolved" if scenario.is_evolved else "independent",
        "occupation": list(scenario.occupation),
        "vertex_a": mode_pair(scenario.vertex_a),
    }
    if scenario.is_evolved:
        doc["theta1"] = scenario.theta1
        doc["theta2"] = scenario.theta2
    else:
        doc["vertex_b"] = mode_pair(scenario.vertex_b)
        doc["vertex_c"] = mode_pair(scenario.vertex_c)
    return doc


def row_to_dict(row: ReconciliationRow) -> dict:
    methods = {}
    for name, res in row.results.items():
        methods[name] = {
            "invariant": [res.invariant.real, res.invariant.imag],
            "phase": _round_trip(res.phase),
        }
    return {
        "scenario": scenario_to_dict(row.scenario),
        "methods": methods,
        "deltas": {k: _round_trip(v) for k, v in sorted(row.deltas.items())},
        "abs_delta_max": _round_trip(row.abs_delta_max),
        "flag": row.flag,
    }


def sweep_row(row: ReconciliationRow) -> dict:
    scenario = row.scenario
    return {
        "theta1": scenario.theta1,
        "theta2": scenario.theta2,
        "phase_fock": row.phase_of("fock_oracle"),
        "phase_pairing": row.phase_of("phase_space_pairing"),
        "phase_printed": row.phase_of("printed_closed_form"),
        "abs_delta_max": row.abs_delta_max,
        "flag": row.flag,
    }


def write_sweep_csv(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                format_float(row["theta1"]),
                format_float(row["theta2"]),
                format_float(row["phase_fock"]),
                format_float(row["phase_pairing"]),
                format_float(row["phase_printed"]),
                format_float(row["abs_delta_max"]),
                row["flag"],
            ]
        )


def sweep_document(rows, n_max: int, tolerance: float) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "sweep",
        "n_max": n_max,
        "tolerance": tolerance,
        "rows": [
            {
                "theta1": _round_trip(r["theta1"]),
                "theta2": _round_trip(r["theta2"]),
                "phase_fock": _round_trip(r["phase_fock"]),
                "phase_pairing": _round_trip(r["phase_pairing"]),
                "phase_printed": _round_trip(r["phase_printed"]),
                "abs_delta_max": _round_trip(r["abs_delta_max"]),
                "flag": r["flag"],
            }
            for r in rows
        ],
    }


def phase_document(row: ReconciliationRow, n_max: int, tolerance: float) -> dict:
    doc = {"schema": SCHEMA, "kind": "phase", "n_max": n_max, "tolerance": tolerance}
    doc.update(row_to_dict(row))
    return doc


def validation_document(checks, n_max: int, seed: int) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "validation",
        "n_max": n_max,
        "seed": seed,
        "all_passed": all(c.passed for c in checks),
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "value": c.value,
                "threshold": c.threshold,
                "detail": c.detail,
            }
            for c in checks
        ],
    }


def reconciliation_document(report: ReconciliationReport, audit: dict | None = None) -> dict:
    doc = {
        "schema": SCHEMA,
        "kind": "reconciliation",
        "n_max": report.n_max,
        "tolerance": report.tolerance,
        "disagreements": report.disagreements,
        "rows": [row_to_dict(row) for row in report.rows],
    }
    if audit is not None:
        doc["closed_form_audit"] = audit
    return doc


def pfunc_document(
    occupation: tuple[int, int],
    shift: tuple[PhaseSpacePoint, PhaseSpacePoint],
    p: QuasiProbability,
) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "pfunc",
        "occupation": list(occupation),
        "shift": [shift[0].q, shift[0].p, shift[1].q, shift[1].p],
        "envelope": p.envelope,
        "terms": [
            {
                "coeff": [t.coeff.real, t.coeff.imag],
                "center": list(t.centers),
                "orders": list(t.orders),
            }
            for t in p.terms
        ],
    }


def pfunc_from_document(doc: dict) -> tuple[tuple[int, int], tuple[PhaseSpacePoint, PhaseSpacePoint], QuasiProbability]:
    """Parse a pfunc document; verifies the terms match the metadata.

    The occupation and shift are what downstream consumers (the matrix
    oracle in particular) need; the explicit term list must agree with
    the one they generate, otherwise the document is inconsistent.
    """
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    if doc.get("kind") != "pfunc":
        raise ValueError(f"expected a pfunc document, got kind {doc.get('kind')!r}")
    occupation = tuple(int(n) for n in doc["occupation"])
    s = [float(x) for x in doc["shift"]]
    shift = (PhaseSpacePoint(s[0], s[1]), PhaseSpacePoint(s[2], s[3]))
    terms = []
    for t in doc["terms"]:
        c = t["center"]
        terms.append(
            DeltaDerivativeTerm(
                coeff=complex(t["coeff"][0], t["coeff"][1]),
                center1=PhaseSpacePoint(float(c[0]), float(c[1])),
                center2=PhaseSpacePoint(float(c[2]), float(c[3])),
                orders=tuple(int(o) for o in t["orders"]),
            )
        )
    p = QuasiProbability(terms=tuple(terms), envelope=bool(doc.get("envelope", True)))
    expected = mehta_p_function(occupation, shift)
    if len(expected.terms) != len(p.terms):
        raise ValueError("pfunc terms do not match the declared state")
    for have, want in zip(p.terms, expected.terms):
        if have.orders != want.orders or abs(have.coeff - want.coeff) > 1e-12:
            raise ValueError("pfunc terms do not match the declared state")
        for hc, wc in zip(have.centers, want.centers):
            if abs(hc - wc) > 1e-9:
                raise ValueError("pfunc centers do not match the declared shift")
    return occupation, shift, p


def dump_json(doc: dict, fh):
    json.dump(doc, fh, indent=2, sort_keys=True)
    fh.write("\n")
