#!/usr/bin/env python3
"""
Data models for heislift.

This package provides pydantic models for:
- Report rows and summaries of contact, distortion and lift runs
- Holonomy reports
- Catalog and lifted-map descriptors, curve payloads
- The validated run configuration of the command line
"""

from heislift.models.reports import (
    ComplexPair, pair, unpair, HolonomyReport, ContactRow, LiftRow, ContactSummary,
    CatalogDescriptor, LiftedMapDescriptor, CurvePayload
)
from heislift.models.run_config import GridSpec, RunConfig

__all__ = [
    'ComplexPair', 'pair', 'unpair', 'HolonomyReport', 'ContactRow', 'LiftRow', 'ContactSummary',
    'CatalogDescriptor', 'LiftedMapDescriptor', 'CurvePayload',
    'GridSpec', 'RunConfig'
]
