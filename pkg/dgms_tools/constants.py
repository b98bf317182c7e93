#!/usr/bin/env python3

# =============================================================================
#                                  CONSTANTS
# =============================================================================

CYCLIC_OUTCOME_PREFIX: str = 'c:'

MERGED_OUTCOME_ID: str = 'c'

DEFAULT_MAX_PROFILES: int = 100_000

GAME_FORM_MAX_PROFILES: int = 1_000_000

MAX_EXHAUSTIVE_ORDERINGS: int = 5040

MAX_SOLVABILITY_OUTCOMES: int = 12

DEFAULT_UTILITY_SAMPLES: int = 1000

DEFAULT_SEED: int = 0

BENCH_SIZES: tuple[int, ...] = (
    1_000,
    10_000,
    100_000,
    1_000_000
)

PLAYER_LABELS: dict[int, str] = {
    1: 'max',
    2: 'min'
}

# =============================================================================
#                                     EOF
# =============================================================================
