#!/usr/bin/env python3
"""
Validated run configuration for the command line.
"""

import math
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from heislift.config import (
    GRID_RADII, GRID_ANGLES, GRID_HEIGHTS, GRID_MIN_RADIUS, DEFAULT_PHASE
)


class GridSpec(BaseModel):
    """
    Sample grid over H*: |z| radii x uniform angles x t heights.

    For Heisenberg maps the same grid is read as points of H.
    """
    radii: List[float] = Field(default_factory=lambda: list(GRID_RADII))
    angles: int = Field(GRID_ANGLES, gt=0)
    heights: List[float] = Field(default_factory=lambda: list(GRID_HEIGHTS))
    allow_small_radius: bool = False

    @field_validator('radii', 'heights')
    @classmethod
    def _non_empty(cls, values: List[float]) -> List[float]:
        if not values:
            raise ValueError("grid axes must not be empty")
        return values

    @model_validator(mode='after')
    def _avoid_origin(self) -> 'GridSpec':
        if not self.allow_small_radius and min(self.radii) < GRID_MIN_RADIUS:
            raise ValueError(
                f"grid radii must be at least {GRID_MIN_RADIUS} (frame fields degenerate at z = 0)"
            )
        if min(self.radii) <= 0.0:
            raise ValueError("grid radii must be positive")
        return self

    @property
    def size(self) -> int:
        return len(self.radii) * self.angles * len(self.heights)


class RunConfig(BaseModel):
    """Options shared by the subcommands."""
    command: str
    map_spec: Optional[Dict[str, Any]] = None
    grid: GridSpec = Field(default_factory=GridSpec)
    tol: Optional[float] = Field(None, gt=0.0, description="Residual tolerance; per-command default when unset")
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    output_format: Optional[Literal['json', 'csv', 'table']] = None
    force: bool = False
    basepoint: Optional[complex] = Field(None, description="Potential basepoint; -1 on L and 0 on C when unset")
    phase: float = DEFAULT_PHASE
    curve_kind: Optional[Literal['heis', 'star', 'plane', 'hyperbolic']] = None
    workers: int = Field(1, ge=1)
    progress: bool = False

    @field_validator('phase')
    @classmethod
    def _finite_phase(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("phase must be finite")
        return value

    def format_or(self, default: str) -> str:
        return self.output_format or default
