#!/usr/bin/env python3
"""
heislift - contact and quasiconformal lifts on the Heisenberg groups.

This package provides the Heisenberg group H and the hyperbolic Heisenberg group H*,
their frames and forms, the Koranyi map, horizontal curves and holonomy, contact and
quasiconformal analysis of maps, and the lifting of symplectic planar maps to
contact maps, with a catalog of example maps and a command line.
"""

__version__ = "0.1.0"
