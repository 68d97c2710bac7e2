#!/usr/bin/env python3
"""
Lifting symplectic planar maps to contact maps of H* and H.

This package provides:
- Planar maps of the left half-plane and of the plane
- Symplectic and closedness checks
- The potentials psi and phi, memoized per map and basepoint
- The lifted maps themselves
"""

from .planar import PlanarMap
from .potentials import (
    symplectic_tolerance, symplectic_residual, euclidean_symplectic_residual, symplectic_gate,
    psi_gradient, phi_gradient, closedness_residual, Potential, potential_for,
    clear_potential_cache, psi_potential, phi_potential
)
from .lift import LiftedStarMap, LiftedHeisMap, bundle_partials, lift_star, lift_heis

__all__ = [
    'PlanarMap',
    'symplectic_tolerance', 'symplectic_residual', 'euclidean_symplectic_residual', 'symplectic_gate',
    'psi_gradient', 'phi_gradient', 'closedness_residual', 'Potential', 'potential_for',
    'clear_potential_cache', 'psi_potential', 'phi_potential',
    'LiftedStarMap', 'LiftedHeisMap', 'bundle_partials', 'lift_star', 'lift_heis'
]
