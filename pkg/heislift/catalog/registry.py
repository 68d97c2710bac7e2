#!/usr/bin/env python3
"""
Catalog lookup by name and JSON parameters.

A map specification is either a bare name ("identity") or a JSON object such as
{"name": "twist", "k": 2.0, "c": 0.0}. {"compose": [outer, inner]} composes two
planar maps of the same domain.
"""

import json
import logging
from typing import Any, Callable, Dict, List, Union

from heislift.analysis.maps import StarMap
from heislift.catalog.entries import (
    CatalogEntry, make_identity, make_su11, make_twist, make_twist_naive, make_spiral_stretch,
    make_plain_stretch, make_heis_isometry, make_heis_affine, make_noncontact_shear, make_fibre_shear
)
from heislift.errors import UnknownCatalogEntry
from heislift.models.reports import CatalogDescriptor, LiftedMapDescriptor, unpair

logger = logging.getLogger(__name__)

MapSpec = Union[str, Dict[str, Any]]

_FACTORIES: Dict[str, Callable[..., CatalogEntry]] = {
    'identity': make_identity,
    'su11': make_su11,
    'twist': make_twist,
    'twist_naive': make_twist_naive,
    'spiral_stretch': make_spiral_stretch,
    'plainstretch': make_plain_stretch,
    'heis_translation': lambda **kw: make_heis_isometry('translation', **kw),
    'heis_rotation': lambda **kw: make_heis_isometry('rotation', **kw),
    'heis_conjugation': lambda **kw: make_heis_isometry('conjugation', **kw),
    'heis_dilation': lambda **kw: make_heis_isometry('dilation', **kw),
    'heis_inversion': lambda **kw: make_heis_isometry('inversion', **kw),
    'heis_affine': make_heis_affine,
    'noncontact_shear': make_noncontact_shear,
    'fibre_shear': make_fibre_shear,
}

# parameters shown by 'catalog list'
_LISTING_DEFAULTS: Dict[str, Dict[str, float]] = {
    'su11': {'a': 1.0, 'b': 0.0, 'c': 0.0, 'd': 1.0, 'theta': 0.0},
    'twist': {'k': 1.0, 'c': 0.0},
    'twist_naive': {'k': 1.0, 'c': 0.0},
    'spiral_stretch': {'k': 0.0, 'kp': 0.0, 'c': 0.0},
    'heis_translation': {'w_re': 0.0, 'w_im': 0.0, 's': 0.0},
    'heis_rotation': {'theta': 0.0},
    'heis_dilation': {'delta': 1.0},
    'heis_affine': {'a_re': 1.0, 'a_im': 0.0, 'b_re': 0.0, 'b_im': 0.0, 'c_re': 0.0, 'c_im': 0.0},
}


def catalog_names() -> List[str]:
    return sorted(_FACTORIES)


def parse_map_spec(text: str) -> Dict[str, Any]:
    """
    Parse a --map argument: a bare catalog name or a JSON object.

    Text starting with '{' or '[' is read as JSON.

    Raises:
        UnknownCatalogEntry: If the JSON is malformed or is not an object
    """
    text = text.strip()
    if not text.startswith(('{', '[')):
        return {'name': text}
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as e:
        raise UnknownCatalogEntry(f"map specification is not valid JSON: {e}")
    if not isinstance(spec, dict):
        raise UnknownCatalogEntry("map specification must be a JSON object")
    return spec


def resolve(spec: MapSpec) -> CatalogEntry:
    """
    Build the catalog entry a specification names.

    Raises:
        UnknownCatalogEntry: For an unknown name or unexpected parameters
        DeterminantViolation: For SU(1,1) or affine parameters off their constraint
    """
    if isinstance(spec, str):
        spec = parse_map_spec(spec)
    spec = dict(spec)

    if 'compose' in spec:
        return _resolve_composite(spec['compose'])

    name = spec.pop('name', None)
    factory = _FACTORIES.get(name)
    if factory is None:
        raise UnknownCatalogEntry(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}")
    try:
        params = {key: float(value) for key, value in spec.items()}
    except (TypeError, ValueError):
        raise UnknownCatalogEntry(f"parameters of {name!r} must be numbers")
    try:
        entry = factory(**params)
    except TypeError as e:
        raise UnknownCatalogEntry(f"bad parameters for {name!r}: {e}")
    logger.debug("resolved catalog entry %s with %s", name, params)
    return entry


def _resolve_composite(parts) -> CatalogEntry:
    if not isinstance(parts, list) or len(parts) != 2:
        raise UnknownCatalogEntry("'compose' takes a list of two map specifications")
    outer, inner = resolve(parts[0]), resolve(parts[1])
    if outer.planar is None or inner.planar is None or outer.planar.domain != inner.planar.domain:
        raise UnknownCatalogEntry("'compose' needs two planar maps of the same domain")
    planar = outer.planar.compose(inner.planar)
    return CatalogEntry(
        name=f"{outer.name}o{inner.name}", kind=outer.kind, planar=planar,
        description=f"{outer.name} after {inner.name}",
    )


def list_entries() -> List[CatalogDescriptor]:
    """Descriptors of every catalog family with its listing parameters."""
    descriptors = []
    for name in catalog_names():
        entry = resolve({'name': name, **_LISTING_DEFAULTS.get(name, {})})
        descriptors.append(entry.descriptor())
    return descriptors


def load_lifted_map(descriptor: Union[LiftedMapDescriptor, Dict[str, Any]]) -> StarMap:
    """
    Rebuild a lifted map from its descriptor; potential values are recomputed on demand.

    Raises:
        UnknownCatalogEntry: If the source specification cannot be resolved
        NotSymplectic: If the source fails the gate and the descriptor is not forced
    """
    if not isinstance(descriptor, LiftedMapDescriptor):
        descriptor = LiftedMapDescriptor.model_validate(descriptor)
    entry = resolve(descriptor.source)
    if entry.kind != descriptor.kind:
        raise UnknownCatalogEntry(f"descriptor kind {descriptor.kind!r} does not match {entry.name!r}")
    return entry.lift(basepoint=unpair(descriptor.basepoint), phase=descriptor.phase, force=descriptor.forced)
