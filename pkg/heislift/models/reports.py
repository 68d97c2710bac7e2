#!/usr/bin/env python3
"""
Report models for heislift.

Every machine-readable record the command line emits is a pydantic model here.
Complex numbers are carried as [re, im] pairs.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

ComplexPair = Tuple[float, float]


def pair(value: complex) -> ComplexPair:
    """Serialize a complex number as [re, im]."""
    value = complex(value)
    return (value.real, value.imag)


def unpair(value: ComplexPair) -> complex:
    return complex(value[0], value[1])


class HolonomyReport(BaseModel):
    """Holonomy of the horizontal lift of a closed curve."""
    kind: str = Field(..., description="'heis' (delta is t) or 'star' (delta is the angle)")
    delta: float = Field(..., description="Vertical or angular displacement of the lift")
    area_oracle: float = Field(..., description="Signed enclosed area from the boundary integral")
    residual: float = Field(..., description="|delta + c * area_oracle| with c = 4 (heis) or 2 (star)")
    grid_area: Optional[float] = Field(None, description="Signed enclosed area from the column grid")
    grid_residual: Optional[float] = Field(None, description="|area_oracle - grid_area|")


class ContactRow(BaseModel):
    """One grid point of a contact or distortion report."""
    z: ComplexPair = Field(..., description="z coordinate of the evaluation point")
    t: float = Field(..., description="t coordinate of the evaluation point")
    R1: Optional[ComplexPair] = Field(None, description="First contact residual")
    R2: Optional[ComplexPair] = Field(None, description="Second contact residual")
    R3_minus_lambda: Optional[float] = Field(None, description="Difference between the two contact multiplier formulas")
    lambda_star: Optional[float] = Field(None, description="Contact multiplier (lambda on H)")
    lambda1: Optional[float] = Field(None, description="Largest horizontal stretch")
    lambda2: Optional[float] = Field(None, description="Smallest horizontal stretch")
    K: Optional[float] = Field(None, description="Maximal distortion lambda1 / lambda2")
    mu_re: Optional[float] = Field(None, description="Real part of the Beltrami coefficient")
    mu_im: Optional[float] = Field(None, description="Imaginary part of the Beltrami coefficient")
    jacobian_residual: Optional[float] = Field(None, description="|J_F - lambda^2| / lambda^2")
    error: Optional[str] = Field(None, description="Set when the point could not be analysed")


class LiftRow(BaseModel):
    """One grid point of a lift report."""
    z: ComplexPair
    t: float
    zeta: ComplexPair = Field(..., description="alpha(z, t), or z for Heisenberg lifts")
    potential: Optional[float] = Field(None, description="psi(zeta) for H* lifts, phi(z) for H lifts")
    f_I: Optional[ComplexPair] = None
    f_3: Optional[float] = None
    R1: Optional[ComplexPair] = None
    R2: Optional[ComplexPair] = None
    lambda_star: Optional[float] = None
    K: Optional[float] = None
    mu: Optional[ComplexPair] = None
    mu_expected: Optional[ComplexPair] = None
    error: Optional[str] = None


class ContactSummary(BaseModel):
    """Aggregate of a contact or lift report."""
    points: int
    failed_points: int = 0
    max_contact_residual: float
    max_lambda_deviation: float
    max_K: Optional[float] = None
    max_mu: Optional[float] = None
    k_bound: Optional[float] = Field(None, description="(K - 1)/(K + 1) at the worst point")
    k_bound_satisfied: Optional[bool] = None
    max_jacobian_residual: Optional[float] = None
    max_mu_deviation: Optional[float] = None
    tolerance: float
    passed: bool


class CatalogDescriptor(BaseModel):
    """A catalog family as listed by 'catalog list'."""
    name: str
    kind: str = Field(..., description="'star' for maps of L, 'heis' for maps of the plane")
    params: Dict[str, float] = Field(default_factory=dict, description="Default parameters")
    closed_form_psi: bool = False
    closed_form_lift: bool = False
    expected_mu: bool = False
    description: str = ""


class LiftedMapDescriptor(BaseModel):
    """A lifted map, re-loadable without stored potential values."""
    kind: str = Field(..., description="'star' or 'heis'")
    source: Dict[str, Any] = Field(..., description="Catalog map specification")
    basepoint: ComplexPair = Field((-1.0, 0.0), description="Normalization point of the potential")
    phase: float = Field(0.0, description="Constant added to the potential")
    forced: bool = Field(False, description="True when the symplectic gate was bypassed")


class CurvePayload(BaseModel):
    """JSON form of a curve: parameters and coordinate columns."""
    kind: str = Field("plane", description="plane, hyperbolic, heis or star")
    s: List[float]
    re: List[float]
    im: List[float]
    t: Optional[List[float]] = None
