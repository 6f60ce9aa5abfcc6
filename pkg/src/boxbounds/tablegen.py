"""Recompute the embedded reference tables and report per-cell differences.

Shared by the `table` CLI command and the acceptance suite.  Cells whose exact
computation exceeds the desk budget (the deepest Rosenbrock scans, the largest
eigenproblems) are emitted with computed=None and an explanatory note; the
cutoffs are module constants so they are visible and testable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import baselines as bl
from .feasible import NonUnique, density_mode, expectation_point
from .handelman import f_handelman_powered, near_optimal_pairs, uniform_value
from .moments import ratio_table
from .polynomial import (TestFunction, builtin, evaluate, relative_gap,
                         rosenbrock_poly)
from .sos import f_sos, graded_basis

# Rosenbrock n=4 column of table 2: scans above this degree are outside the
# 10-second budget (C(57,7) ~ 2.6e8 candidates at k=50)
TABLE2_R4_KMAX = 18

# largest eigenproblem order the self-contained Jacobi solver is asked for
# (order 330 solves in ~7s; 495 and 715 are outside the desk budget)
SOS_ORDER_CAP = 335


@dataclass(frozen=True)
class TableCell:
    table: int
    function: str
    k: int
    r: int | None
    column: str
    computed: float | None
    reference: float | None
    diff: float | None
    note: str = ""


def _tf(key: str) -> TestFunction:
    name, n = bl.FUNCTIONS[key]
    return builtin(name, n)


def _cell(table, key, k, r, column, computed, reference, note="") -> TableCell:
    diff = None
    if computed is not None and reference is not None:
        diff = abs(computed - reference)
    return TableCell(table, key, k, r, column, computed, reference, diff, note)


def _bound_values(tf: TestFunction, ks: list[int], r: int = 1,
                  workers: int | None = None) -> dict[int, float]:
    """Degree-k bound values for several k, sharing one moment-ratio table."""
    if not ks:
        return {}
    amax = max((max(a) for a in tf.poly.terms), default=0)
    kmax = max(ks)
    table = ratio_table(r * kmax, r * kmax, amax)
    return {k: f_handelman_powered(tf.poly, k, r, workers=workers, _table=table).value
            for k in ks}


def compute_table2(workers: int | None = None) -> list[TableCell]:
    rows: list[TableCell] = []
    for key, refs in bl.TABLE2.items():
        tf = _tf(key)
        cutoff = TABLE2_R4_KMAX if key == "rosenbrock_4" else None
        ks = [k for k in bl.TABLE2_KS[:len(refs)] if cutoff is None or k <= cutoff]
        values = _bound_values(tf, ks, workers=workers)
        for k, ref in zip(bl.TABLE2_KS, refs):
            if k in values:
                rows.append(_cell(2, key, k, 1, "h_rg",
                                  relative_gap(values[k], tf), ref))
            else:
                rows.append(_cell(2, key, k, 1, "h_rg", None, ref,
                                  note=f"skipped: scan budget caps this column at k={cutoff}"))
    return rows


def _sos_order(n: int, half_k: int) -> int:
    return len(graded_basis(n, half_k))


def compute_table345(table_id: int, workers: int | None = None,
                     sos_order_cap: int = SOS_ORDER_CAP) -> list[TableCell]:
    data = {3: bl.TABLE3, 4: bl.TABLE4, 5: bl.TABLE5}[table_id]
    ks = bl.TABLE345_KS[table_id]
    rows: list[TableCell] = []
    for key, cols in data.items():
        tf = _tf(key)
        values = _bound_values(tf, ks, workers=workers)
        for k, ref in zip(ks, cols["h"]):
            rows.append(_cell(table_id, key, k, 1, "h_rg",
                              relative_gap(values[k], tf), ref))
        sos_poly = tf.poly
        sos_note = ""
        if key == "rosenbrock_3":
            # the reference sos column for n=3 was produced with one anchor
            # term per chain link, unlike the scan columns (see builtin notes)
            sos_poly = rosenbrock_poly(3, (0, 1))
            sos_note = "reference sos column uses the per-link anchor variant"
        for k, ref in zip(ks, cols["sos"]):
            order = _sos_order(tf.n_vars, k // 2)
            if order > sos_order_cap:
                rows.append(_cell(table_id, key, k, None, "sos_rg", None, ref,
                                  note=f"skipped: eigenproblem order {order} over cap "
                                       f"{sos_order_cap}"))
                continue
            value = f_sos(sos_poly, k // 2)
            rows.append(_cell(table_id, key, k, None, "sos_rg",
                              relative_gap(value, tf), ref, note=sos_note))
    return rows


def _tie_matches(tf: TestFunction, k: int, column: str, ref: float,
                 tol: float = 5e-4) -> str | None:
    """Check whether some value-tied density at degree <= k reproduces `ref`.

    Feasible-point columns depend on which optimal density the scan reports;
    exact ties make that choice conventional.  Returns a note naming the
    matching tied pair, or None.
    """
    for kk in range(k, max(k - 3, 0), -1):
        for pair, _ in near_optimal_pairs(tf.poly, kk, rel_tol=1e-11):
            if column == "mode":
                point = density_mode(pair)
                if point is NonUnique:
                    continue
            else:
                point = expectation_point(pair)
            if abs(evaluate(tf.poly, point) - ref) <= tol:
                return (f"tie: density eta={pair.eta} beta={pair.beta} "
                        f"(degree {kk}) attains the same bound and matches")
    return None


def compute_table6(workers: int | None = None) -> list[TableCell]:
    rows: list[TableCell] = []
    for key, cols in bl.TABLE6.items():
        tf = _tf(key)
        results = {}
        amax = max((max(a) for a in tf.poly.terms), default=0)
        table = ratio_table(max(bl.TABLE6_KS), max(bl.TABLE6_KS), amax)
        for k in bl.TABLE6_KS:
            results[k] = f_handelman_powered(tf.poly, k, 1, workers=workers,
                                             _table=table)
        for k, ref in zip(bl.TABLE6_KS, cols["value"]):
            rows.append(_cell(6, key, k, 1, "value", results[k].value, ref))
        for k, ref in zip(bl.TABLE6_KS, cols["mode"]):
            point = density_mode(results[k].argmin)
            if point is NonUnique:
                computed = None
                note = "mode not unique" if ref is None else "mode not unique; reference has a value"
                rows.append(_cell(6, key, k, 1, "mode", computed, ref, note))
                continue
            value = evaluate(tf.poly, point)
            note = ""
            if ref is not None and abs(value - ref) > 5e-4:
                tie = _tie_matches(tf, k, "mode", ref)
                note = tie or "mismatch"
            rows.append(_cell(6, key, k, 1, "mode", value, ref, note))
        for k, ref in zip(bl.TABLE6_KS, cols.get("mean", [])):
            point = expectation_point(results[k].argmin)
            value = evaluate(tf.poly, point)
            note = ""
            if ref is not None and abs(value - ref) > 5e-4:
                tie = _tie_matches(tf, k, "mean", ref)
                note = tie or "mismatch"
            rows.append(_cell(6, key, k, 1, "mean", value, ref, note))
    return rows


def compute_table9_11(table_id: int, workers: int | None = None) -> list[TableCell]:
    key = {9: "styblinski_tang_2", 10: "rosenbrock_3", 11: "rosenbrock_4"}[table_id]
    data = {9: bl.TABLE9, 10: bl.TABLE10, 11: bl.TABLE11}[table_id]
    tf = _tf(key)
    rows: list[TableCell] = []
    amax = max((max(a) for a in tf.poly.terms), default=0)
    kmax = max(bl.TABLE9_11_KS)
    rmax = max(bl.TABLE9_11_RS)
    table = ratio_table(rmax * kmax, rmax * kmax, amax)
    for k in bl.TABLE9_11_KS:
        for r, ref in zip(bl.TABLE9_11_RS, data[k]):
            bound = f_handelman_powered(tf.poly, k, r, workers=workers, _table=table)
            # reference scans kept the uniform (k=0) candidate in the running min
            value = min(bound.value, uniform_value(tf.poly, r))
            rows.append(_cell(table_id, key, k, r, "h_rg",
                              relative_gap(value, tf), ref))
    return rows


def compute_table(table_id: int, workers: int | None = None) -> list[TableCell]:
    """Recompute one embedded table; ids follow baselines.TABLE_IDS."""
    if table_id == 2:
        return compute_table2(workers)
    if table_id in (3, 4, 5):
        return compute_table345(table_id, workers)
    if table_id == 6:
        return compute_table6(workers)
    if table_id in (9, 10, 11):
        return compute_table9_11(table_id, workers)
    raise ValueError(f"no embedded table {table_id}; available: {bl.TABLE_IDS}")
