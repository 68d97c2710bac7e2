#!/usr/bin/env python3
"""
Catalog of closed-form example maps.
"""

from .entries import (
    CatalogEntry, make_identity, make_su11, make_twist, make_twist_naive, make_spiral_stretch,
    make_plain_stretch, make_heis_isometry, make_heis_affine, make_noncontact_shear, make_fibre_shear
)
from .registry import catalog_names, parse_map_spec, resolve, list_entries, load_lifted_map

__all__ = [
    'CatalogEntry', 'make_identity', 'make_su11', 'make_twist', 'make_twist_naive',
    'make_spiral_stretch', 'make_plain_stretch', 'make_heis_isometry', 'make_heis_affine',
    'make_noncontact_shear', 'make_fibre_shear',
    'catalog_names', 'parse_map_spec', 'resolve', 'list_entries', 'load_lifted_map'
]
