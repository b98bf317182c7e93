#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import logging
import time
import numpy as np
import pandas as pd
from typing import Iterable

from .constants import BENCH_SIZES
from .game import WinLosePartition
from .generate import gen_bench_chain
from .winlose import solve_winlose

logger = logging.getLogger(__name__)

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def run_scaling_benchmark(
    sizes: Iterable[int] = BENCH_SIZES
) -> pd.DataFrame:
    """
    Returns the wall-clock time of `solve_winlose()` on benchmark chains of
    (approximately) the supplied numbers of vertices, with the time ratio to
    the previous size; player 1 wins the terminal t1 and the chain's cyclic
    outcomes.

    Only the solve is timed; building the chain (and its decomposition) is
    not.

    Args:
        sizes (Iterable[int], optional): Target numbers of vertices, in
            increasing order. Defaults to 10³, 10⁴, 10⁵, 10⁶.

    Returns:
        pd.DataFrame: Size, vertex and edge counts, time (s), and time ratio
        to the previous row (NaN in the first row).

    Raises:
        ValueError: If a size is < 4 (smaller than one chain component and
            its two terminals).
    """

    rows = []
    for size in sizes:
        if size < 4:
            raise ValueError(
                f'benchmark sizes must be >= 4; got {size}'
            )
        structure = gen_bench_chain((size - 2) // 2)
        partition = WinLosePartition.from_winning_set(
            structure,
            (a for a in structure.outcome_ids if a != 't2')
        )
        logger.info(
            'timing a chain of %d vertices', len(structure.digraph)
        )
        t0 = time.perf_counter()
        solve_winlose(structure, partition)
        seconds = time.perf_counter() - t0
        rows.append({
            'size': size,
            'vertices': len(structure.digraph),
            'edges': len(structure.digraph.edges),
            'seconds': seconds
        })

    results = pd.DataFrame(
        rows, columns = ['size', 'vertices', 'edges', 'seconds']
    )
    results['ratio'] = results['seconds'] / results['seconds'].shift(1)
    results['ratio'] = results['ratio'].replace([np.inf, -np.inf], np.nan)

    return results

# =============================================================================
#                                     EOF
# =============================================================================
