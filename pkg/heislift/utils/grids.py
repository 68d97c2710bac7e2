#!/usr/bin/env python3
"""
Sample grids and grid sweeps.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

import numpy as np
from tqdm import tqdm

from heislift.geometry.points import HeisPoint, StarPoint
from heislift.models.run_config import GridSpec

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def grid_points(spec: GridSpec = None, kind: str = 'star') -> List[HeisPoint]:
    """
    Points r e^{i phi} + height for every radius, angle and height of the grid.

    Parameters:
        spec (GridSpec, optional): Grid definition; the standard grid when omitted
        kind (str): 'star' yields StarPoints, 'heis' HeisPoints

    Returns:
        list: Points ordered by (radius, angle, height)
    """
    spec = spec or GridSpec()
    point_type = StarPoint if kind == 'star' else HeisPoint
    angles = 2.0 * np.pi * np.arange(spec.angles) / spec.angles
    return [
        point_type(r * np.exp(1j * phi), h)
        for r in spec.radii
        for phi in angles
        for h in spec.heights
    ]


def grid_zetas(spec: GridSpec = None) -> List[complex]:
    """alpha(z, t) = -|z|^2 + i t over the grid, one value per (radius, height)."""
    spec = spec or GridSpec()
    return [complex(-r * r, h) for r in spec.radii for h in spec.heights]


def sweep(func: Callable[[T], R], items: Sequence[T], workers: int = 1,
          progress: bool = False, desc: str = "grid") -> List[R]:
    """
    Apply func to every item, optionally on a thread pool.

    Results are returned in the order of items regardless of completion order.

    Parameters:
        func (callable): Per-item computation
        items (sequence): Inputs
        workers (int): Thread count; 1 runs inline
        progress (bool): Show a tqdm progress bar on stderr
        desc (str): Progress bar label

    Returns:
        list: func(item) for each item, in input order
    """
    items = list(items)
    logger.debug("sweeping %d %s points with %d worker(s)", len(items), desc, workers)

    with tqdm(total=len(items), desc=desc, disable=not progress) as bar:
        if workers <= 1:
            results = []
            for item in items:
                results.append(func(item))
                bar.update(1)
            return results

        results = [None] * len(items)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(func, item): index for index, item in enumerate(items)}
            for future in futures:
                results[futures[future]] = future.result()
                bar.update(1)
        return results
