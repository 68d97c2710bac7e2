#!/usr/bin/env python3
"""
Reading and writing curve files.

CSV files carry a header 's,re,im' (plane or hyperbolic curves) or 's,re,im,t'
(curves in H or H*). JSON files hold the same columns as lists.
"""

import csv
import io
import json
import os
from typing import Optional

import numpy as np
from pydantic import ValidationError

from heislift.config import CSV_FLOAT_FORMAT, REPORT_SCHEMA_VERSION
from heislift.curves.curve import Curve, CurveKind
from heislift.errors import MalformedCurveFile, HeisliftError
from heislift.models.reports import CurvePayload

PLANAR_HEADER = ['s', 're', 'im']
GROUP_HEADER = ['s', 're', 'im', 't']


def _parse_csv(text: str) -> CurvePayload:
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise MalformedCurveFile("empty curve file")
    if header not in (PLANAR_HEADER, GROUP_HEADER):
        raise MalformedCurveFile(f"unexpected header {','.join(header)}; expected s,re,im or s,re,im,t")

    columns = {name: [] for name in header}
    for line_no, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise MalformedCurveFile(f"line {line_no}: expected {len(header)} fields, got {len(row)}")
        try:
            for name, cell in zip(header, row):
                columns[name].append(float(cell))
        except ValueError:
            raise MalformedCurveFile(f"line {line_no}: non-numeric field")

    kind = 'heis' if 't' in columns else 'plane'
    return CurvePayload(kind=kind, **columns)


def _parse_json(text: str) -> CurvePayload:
    try:
        return CurvePayload.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        raise MalformedCurveFile(f"invalid curve JSON: {e}")


def curve_from_payload(payload: CurvePayload, kind: Optional[str] = None) -> Curve:
    """
    Build a sampled curve from a payload.

    Parameters:
        payload (CurvePayload): Parsed columns
        kind (str, optional): Overrides the payload kind (e.g. 'hyperbolic' for a 3-column CSV)

    Returns:
        Curve: Spline-interpolated curve

    Raises:
        MalformedCurveFile: If the columns are inconsistent with the kind
    """
    kind = CurveKind(kind or payload.kind)
    lengths = {len(payload.s), len(payload.re), len(payload.im)}
    if payload.t is not None:
        lengths.add(len(payload.t))
    if len(lengths) != 1:
        raise MalformedCurveFile("curve columns have different lengths")
    if kind.is_group and payload.t is None:
        raise MalformedCurveFile(f"a {kind.value} curve needs a t column")
    z = np.asarray(payload.re) + 1j * np.asarray(payload.im)
    t = payload.t if kind.is_group else None
    try:
        return Curve.from_samples(kind, payload.s, z, t)
    except MalformedCurveFile:
        raise
    except HeisliftError as e:
        raise MalformedCurveFile(str(e))


def read_curve(path: str, kind: Optional[str] = None) -> Curve:
    """
    Read a curve from a CSV or JSON file.

    Parameters:
        path (str): File path; '.json' selects JSON, anything else CSV
        kind (str, optional): Curve kind override

    Returns:
        Curve: The sampled curve

    Raises:
        MalformedCurveFile: If the file is missing or cannot be parsed
    """
    try:
        with open(path, 'r', encoding='utf-8') as file:
            text = file.read()
    except OSError as e:
        raise MalformedCurveFile(f"cannot read curve file {path}: {e}")

    if os.path.splitext(path)[1].lower() == '.json':
        payload = _parse_json(text)
    else:
        payload = _parse_csv(text)
    return curve_from_payload(payload, kind)


def curve_to_payload(curve: Curve) -> CurvePayload:
    return CurvePayload(
        kind=curve.kind.value,
        s=curve.params.tolist(),
        re=curve.z.real.tolist(),
        im=curve.z.imag.tolist(),
        t=None if curve.t is None else curve.t.tolist(),
    )


def format_curve(curve: Curve, fmt: str = 'csv') -> str:
    """
    Serialize a curve as CSV or JSON text.

    Parameters:
        curve (Curve): The curve
        fmt (str): 'csv' or 'json'

    Returns:
        str: File contents
    """
    if fmt == 'json':
        document = {'schema': REPORT_SCHEMA_VERSION}
        document.update(curve_to_payload(curve).model_dump())
        return json.dumps(document, indent=2)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    header = GROUP_HEADER if curve.t is not None else PLANAR_HEADER
    writer.writerow(header)
    for i in range(len(curve)):
        row = [curve.params[i], curve.z[i].real, curve.z[i].imag]
        if curve.t is not None:
            row.append(curve.t[i])
        writer.writerow([CSV_FLOAT_FORMAT % value for value in row])
    return buffer.getvalue()
