#!/usr/bin/env python3
"""
Command implementation module for heislift.

This module provides functions for executing the subcommands:
- Lifting planar maps and reporting on a grid
- Contact and distortion checks of catalog maps
- Horizontal lifts and holonomy of curve files
- Listing the catalog and reloading lifted maps

Every command returns a result dictionary with 'success' and 'exit_code' keys.
"""

import json
import logging
from typing import Any, Callable, Dict, List, Optional

from heislift.analysis import StarMap, analyse_point, contact_residuals, contact_tolerance
from heislift.catalog import list_entries, load_lifted_map, resolve
from heislift.config import (
    EXIT_OK, EXIT_RESIDUAL_BREACH, EXIT_NOT_SYMPLECTIC, EXIT_QUADRATURE_FAILURE,
    EXIT_MALFORMED_CURVE, EXIT_USAGE, GRID_AREA_TOL, HORIZONTAL_TOL, JACOBIAN_REL_TOL
)
from heislift.curves import (
    CurveKind, format_curve, holonomy_closed, lift_hyperbolic_curve, lift_plane_curve_heis, read_curve
)
from heislift.errors import (
    DegenerateMap, HeisliftError, MalformedCurveFile, NotClosed, NotSymplectic, OrientationReversed,
    QuadratureNonConvergence
)
from heislift.geometry import HeisPoint
from heislift.models import ContactRow, ContactSummary, LiftRow, RunConfig, pair
from heislift.utils import csv_rows, json_document, print_catalog_table, save_to_file, status_line
from heislift.utils.grids import grid_points, sweep

logger = logging.getLogger(__name__)

# --kind names the target group or the source curve; the source kind is what gets read
SOURCE_KINDS = {'heis': 'plane', 'star': 'hyperbolic', 'plane': 'plane', 'hyperbolic': 'hyperbolic'}


def exit_code_for(error: Exception) -> int:
    """Exit code of the error contract for a library exception."""
    if isinstance(error, NotSymplectic):
        return EXIT_NOT_SYMPLECTIC
    if isinstance(error, QuadratureNonConvergence):
        return EXIT_QUADRATURE_FAILURE
    if isinstance(error, (MalformedCurveFile, NotClosed)):
        return EXIT_MALFORMED_CURVE
    return EXIT_USAGE


def _failure(error: Exception, command: str) -> Dict[str, Any]:
    code = exit_code_for(error) if isinstance(error, HeisliftError) else EXIT_USAGE
    status_line(False, f"{command}: {error}")
    return {'success': False, 'error': str(error), 'exit_code': code}


def _emit(config: RunConfig, text: str) -> Optional[Dict[str, Any]]:
    """Write machine output; a failure result when the file cannot be written."""
    if save_to_file(text, config.output_path):
        if config.output_path:
            logger.info("report written to %s", config.output_path)
        return None
    status_line(False, f"cannot write {config.output_path}")
    return {'success': False, 'error': f"cannot write {config.output_path}", 'exit_code': EXIT_USAGE}


def _report_text(config: RunConfig, rows: List[Any], **sections: Any) -> str:
    if config.format_or('json') == 'csv':
        return csv_rows(rows)
    return json_document(**sections, rows=rows)


def _max(values) -> float:
    values = [v for v in values if v is not None]
    return max(values) if values else 0.0


def _mu_bound(max_K: Optional[float], max_mu: Optional[float], tol: float):
    """k = (K - 1)/(K + 1) at the worst point and whether sup |mu| stays below it."""
    if max_K is None or max_mu is None:
        return None, None
    k = (max_K - 1.0) / (max_K + 1.0)
    return k, max_mu <= k + tol


# --- lift -------------------------------------------------------------------------

def _lift_row(F: StarMap, p: HeisPoint) -> LiftRow:
    zeta = complex(-p.modulus_sq, p.t) if F.kind == 'star' else p.z
    row = {'z': pair(p.z), 't': p.t, 'zeta': pair(zeta)}
    try:
        image_z, image_t = F.value(p)
        report = analyse_point(F, p, with_jacobian=False)
        mu_expected = F.expected_mu(p)
    except QuadratureNonConvergence:
        raise
    except HeisliftError as e:
        return LiftRow(**row, error=str(e))
    return LiftRow(
        **row,
        potential=F.potential_at(p),
        f_I=pair(image_z), f_3=image_t,
        R1=pair(report.R1), R2=pair(report.R2),
        lambda_star=report.lambda_star, K=report.K,
        mu=pair(report.mu), mu_expected=pair(mu_expected),
    )


def _summarize_lift(rows: List[LiftRow], tol: float) -> ContactSummary:
    good = [r for r in rows if r.error is None]
    residual = _max(max(abs(complex(*r.R1)), abs(complex(*r.R2))) for r in good)
    lam_dev = _max(abs(r.lambda_star - 1.0) for r in good)
    max_K = _max(r.K for r in good) if good else None
    max_mu = _max(abs(complex(*r.mu)) for r in good) if good else None
    mu_dev = _max(abs(complex(*r.mu) - complex(*r.mu_expected)) for r in good)
    k, k_ok = _mu_bound(max_K, max_mu, tol)
    passed = len(good) == len(rows) and residual < tol and lam_dev < tol and mu_dev < tol
    return ContactSummary(
        points=len(rows), failed_points=len(rows) - len(good),
        max_contact_residual=residual, max_lambda_deviation=lam_dev,
        max_K=max_K, max_mu=max_mu, k_bound=k, k_bound_satisfied=k_ok,
        max_mu_deviation=mu_dev, tolerance=tol, passed=passed,
    )


def _report_lift(config: RunConfig, F: StarMap, label: str) -> Dict[str, Any]:
    tol = config.tol or contact_tolerance(F)
    points = grid_points(config.grid, kind=F.kind)
    rows = sweep(lambda p: _lift_row(F, p), points, workers=config.workers,
                 progress=config.progress, desc=label)
    summary = _summarize_lift(rows, tol)

    failure = _emit(config, _report_text(config, rows, command='lift', map=F.descriptor(), summary=summary))
    if failure:
        return failure

    status_line(summary.passed,
                f"lift {label}: {summary.points} points, max residual {summary.max_contact_residual:.3g}, "
                f"max |lambda - 1| {summary.max_lambda_deviation:.3g}, tolerance {tol:g}")
    if summary.failed_points:
        status_line(False, f"{summary.failed_points} point(s) could not be analysed")
    return {
        'success': summary.passed,
        'summary': summary,
        'exit_code': EXIT_OK if summary.passed else EXIT_RESIDUAL_BREACH,
    }


def lift_command(config: RunConfig) -> Dict[str, Any]:
    """
    Lift the planar map of --map and report per grid point.

    Rows carry zeta, the potential, f_I, f_3, R1, R2, lambda*, K, mu and the
    expected mu; the run passes when residuals, |lambda* - 1| and |mu - mu_f|
    all stay below the tolerance.

    Parameters:
        config (RunConfig): Validated run configuration

    Returns:
        dict: Result with 'success', 'exit_code' and the summary
    """
    try:
        entry = resolve(config.map_spec)
        F = entry.lift(basepoint=config.basepoint, phase=config.phase, force=config.force, grid=config.grid)
        if F.forced:
            status_line(False, f"{entry.name}: symplectic gate bypassed with --force")
        return _report_lift(config, F, entry.name)
    except (HeisliftError, ValueError) as e:
        return _failure(e, 'lift')


def load_lifted_map_command(config: RunConfig) -> Dict[str, Any]:
    """
    Reload a lifted map from a descriptor file and report on the grid like 'lift'.

    The file holds a descriptor, or a JSON lift report whose 'map' section is one.
    """
    try:
        try:
            with open(config.input_path, 'r', encoding='utf-8') as file:
                document = json.load(file)
        except (OSError, json.JSONDecodeError) as e:
            raise ValueError(f"cannot read descriptor {config.input_path}: {e}")
        if isinstance(document, dict) and isinstance(document.get('map'), dict):
            document = document['map']
        if not isinstance(document, dict):
            raise ValueError("descriptor must be a JSON object")
        document.pop('schema', None)
        F = load_lifted_map(document)
        return _report_lift(config, F, str(F.descriptor().source.get('name', 'composite')))
    except (HeisliftError, ValueError) as e:
        return _failure(e, 'lifted-map load')


# --- contact and distortion --------------------------------------------------------

def _contact_row(F: StarMap, p: HeisPoint, with_jacobian: bool) -> ContactRow:
    row = {'z': pair(p.z), 't': p.t}
    try:
        report = analyse_point(F, p, with_jacobian=with_jacobian)
    except QuadratureNonConvergence:
        raise
    except (OrientationReversed, DegenerateMap) as e:
        base = contact_residuals(F, p)
        return ContactRow(**row, R1=pair(base.R1), R2=pair(base.R2),
                          R3_minus_lambda=base.R3_minus_lambda, lambda_star=base.lambda_star, error=str(e))
    except HeisliftError as e:
        return ContactRow(**row, error=str(e))
    return ContactRow(
        **row,
        R1=pair(report.R1), R2=pair(report.R2), R3_minus_lambda=report.R3_minus_lambda,
        lambda_star=report.lambda_star, lambda1=report.lambda1, lambda2=report.lambda2, K=report.K,
        mu_re=report.mu.real, mu_im=report.mu.imag, jacobian_residual=report.jacobian_residual,
    )


def _summarize_contact(rows: List[ContactRow], tol: float, with_jacobian: bool) -> ContactSummary:
    analysed = [r for r in rows if r.R1 is not None]
    complete = [r for r in rows if r.error is None]
    residual = _max(max(abs(complex(*r.R1)), abs(complex(*r.R2))) for r in analysed)
    max_K = _max(r.K for r in complete) if complete else None
    max_mu = _max(abs(complex(r.mu_re, r.mu_im)) for r in complete) if complete else None
    k, k_ok = _mu_bound(max_K, max_mu, tol)
    jac = _max(r.jacobian_residual for r in complete) if with_jacobian and complete else None

    passed = len(complete) == len(rows) and residual < tol
    if with_jacobian and jac is not None:
        passed = passed and jac < JACOBIAN_REL_TOL
    return ContactSummary(
        points=len(rows), failed_points=len(rows) - len(complete),
        max_contact_residual=residual,
        max_lambda_deviation=_max(abs(r.lambda_star - 1.0) for r in analysed),
        max_K=max_K, max_mu=max_mu, k_bound=k, k_bound_satisfied=k_ok,
        max_jacobian_residual=jac, tolerance=tol, passed=passed,
    )


def _check_command(config: RunConfig, with_jacobian: bool) -> Dict[str, Any]:
    name = 'distortion' if with_jacobian else 'check-contact'
    try:
        entry = resolve(config.map_spec)
        F = entry.analysis_map()
        tol = config.tol or contact_tolerance(F)
        rows = sweep(lambda p: _contact_row(F, p, with_jacobian), grid_points(config.grid, kind=F.kind),
                     workers=config.workers, progress=config.progress, desc=entry.name)
    except (HeisliftError, ValueError) as e:
        return _failure(e, name)

    summary = _summarize_contact(rows, tol, with_jacobian)
    failure = _emit(config, _report_text(config, rows, command=name, map=entry.spec, summary=summary))
    if failure:
        return failure

    details = f"max residual {summary.max_contact_residual:.3g}"
    if summary.max_K is not None:
        details += f", max K {summary.max_K:.6g}, sup|mu| {summary.max_mu:.6g} (k = {summary.k_bound:.6g})"
    status_line(summary.passed, f"{name} {entry.name}: {summary.points} points, {details}")
    if summary.failed_points:
        status_line(False, f"{summary.failed_points} point(s) failed; see the error column")
    return {
        'success': summary.passed,
        'summary': summary,
        'exit_code': EXIT_OK if summary.passed else EXIT_RESIDUAL_BREACH,
    }


def check_contact_command(config: RunConfig) -> Dict[str, Any]:
    """Contact residuals, multiplier, K and mu of the --map analysis map on the grid."""
    return _check_command(config, with_jacobian=False)


def distortion_command(config: RunConfig) -> Dict[str, Any]:
    """As check-contact, plus the Jacobian identity J_F = lambda^2 at every point."""
    return _check_command(config, with_jacobian=True)


# --- curves ------------------------------------------------------------------------

def _read_source_curve(config: RunConfig, command: str):
    """
    Read the --in curve as a plane or hyperbolic curve.

    Raises:
        MalformedCurveFile: If the file is unreadable or holds a curve of H or H*
    """
    kind = SOURCE_KINDS.get(config.curve_kind) if config.curve_kind else None
    curve = read_curve(config.input_path, kind)
    if curve.kind not in (CurveKind.PLANE, CurveKind.HYPERBOLIC):
        raise MalformedCurveFile(
            f"{command} needs a plane or hyperbolic curve (s,re,im), got a {curve.kind.value} curve"
        )
    return curve


def curve_lift_command(config: RunConfig) -> Dict[str, Any]:
    """
    Horizontal lift of a curve file: plane curves to H, hyperbolic curves to H*.

    Writes the lifted curve as CSV (default) or JSON.
    """
    lifters: Dict[CurveKind, Callable] = {
        CurveKind.PLANE: lift_plane_curve_heis,
        CurveKind.HYPERBOLIC: lift_hyperbolic_curve,
    }
    try:
        curve = _read_source_curve(config, 'curve-lift')
        lifted = lifters[curve.kind](curve)
    except (HeisliftError, ValueError) as e:
        return _failure(e, 'curve-lift')

    failure = _emit(config, format_curve(lifted, config.format_or('csv')))
    if failure:
        return failure
    status_line(True, f"lifted {len(curve)} nodes of a {curve.kind.value} curve to a {lifted.kind.value} curve")
    return {'success': True, 'curve': lifted, 'exit_code': EXIT_OK}


def holonomy_command(config: RunConfig) -> Dict[str, Any]:
    """
    Holonomy of the horizontal lift of a closed curve against the area oracles.

    Passes when |delta + c * area| is below the tolerance (c = 4 on H, 2 on H*).
    """
    tol = config.tol or HORIZONTAL_TOL
    try:
        curve = _read_source_curve(config, 'holonomy')
        group = 'heis' if curve.kind is CurveKind.PLANE else 'star'
        report = holonomy_closed(curve, group)
    except (HeisliftError, ValueError) as e:
        return _failure(e, 'holonomy')

    passed = report.residual < tol
    if config.format_or('json') == 'csv':
        text = csv_rows([report])
    else:
        text = json_document(command='holonomy', holonomy=report, tolerance=tol, passed=passed)
    failure = _emit(config, text)
    if failure:
        return failure

    status_line(passed, f"holonomy ({group}): delta {report.delta:.12g}, area {report.area_oracle:.12g}, "
                        f"residual {report.residual:.3g}")
    if report.grid_residual is not None and report.grid_residual > GRID_AREA_TOL:
        status_line(False, f"column-grid area differs from the boundary area by {report.grid_residual:.3g}")
    return {
        'success': passed,
        'report': report,
        'exit_code': EXIT_OK if passed else EXIT_RESIDUAL_BREACH,
    }


# --- catalog ------------------------------------------------------------------------

def catalog_list_command(config: RunConfig) -> Dict[str, Any]:
    """List catalog families as a table, or as JSON or CSV with --format."""
    entries = list_entries()
    fmt = config.format_or('table')
    if fmt == 'table' and config.output_path is None:
        print_catalog_table(entries)
    else:
        text = csv_rows(entries) if fmt == 'csv' else json_document(entries=entries)
        failure = _emit(config, text)
        if failure:
            return failure
    return {'success': True, 'entries': entries, 'exit_code': EXIT_OK}
