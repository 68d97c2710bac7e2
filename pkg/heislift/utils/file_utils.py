#!/usr/bin/env python3
"""
File utility functions for heislift.

This module provides functions for file operations such as:
- Creating directories
- Saving report text to files or stdout
- Rendering report documents as JSON or flat CSV
"""

import csv
import io
import json
import logging
import os
import sys
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel

from heislift.config import CSV_FLOAT_FORMAT, REPORT_SCHEMA_VERSION

logger = logging.getLogger(__name__)


def ensure_dir_exists(directory: str) -> bool:
    """
    Create a directory if it does not already exist.

    Parameters:
        directory (str): The directory path to create

    Returns:
        bool: True if the directory exists or was created successfully
    """
    if not directory:
        return True
    try:
        os.makedirs(directory, exist_ok=True)
        return True
    except OSError as e:
        logger.error("Error creating directory %s: %s", directory, e)
        return False


def save_to_file(content: str, file_path: Optional[str]) -> bool:
    """
    Write report text to a file, or to stdout when no path is given.

    Parameters:
        content (str): The text to write
        file_path (str, optional): Destination; None writes to stdout

    Returns:
        bool: True if the text was written successfully
    """
    if file_path is None:
        sys.stdout.write(content)
        if not content.endswith('\n'):
            sys.stdout.write('\n')
        return True
    try:
        ensure_dir_exists(os.path.dirname(file_path))
        with open(file_path, 'w', encoding='utf-8', newline='') as file:
            file.write(content)
        return True
    except OSError as e:
        logger.error("Error writing to file %s: %s", file_path, e)
        return False


def _plain(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump()
    if isinstance(value, list):
        return [_plain(v) for v in value]
    return value


def json_document(**sections: Any) -> str:
    """
    Render a versioned JSON report.

    Every keyword becomes a top-level key; pydantic models are dumped first.
    """
    document: Dict[str, Any] = {'schema': REPORT_SCHEMA_VERSION}
    for key, value in sections.items():
        document[key] = _plain(value)
    return json.dumps(document, indent=2)


def _flatten(record: Dict[str, Any]) -> Dict[str, Any]:
    flat = {}
    for key, value in record.items():
        if isinstance(value, (list, tuple)) and len(value) == 2:
            flat[f"{key}_re"], flat[f"{key}_im"] = value
        else:
            flat[key] = value
    return flat


def _cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (int, float)):
        return CSV_FLOAT_FORMAT % value
    return str(value)


def csv_rows(rows: Iterable[BaseModel]) -> str:
    """
    Render report rows as CSV.

    Complex [re, im] fields become two columns name_re and name_im; numbers use
    17 significant digits; missing values are empty cells.
    """
    records: List[Dict[str, Any]] = [_flatten(row.model_dump()) for row in rows]
    if not records:
        return ''
    header = list(records[0].keys())
    for record in records[1:]:
        header.extend(key for key in record if key not in header)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for record in records:
        writer.writerow([_cell(record.get(key)) for key in header])
    return buffer.getvalue()
