#!/usr/bin/env python3

# =============================================================================
#                                   CLASSES
# =============================================================================

class ContractViolationError(RuntimeError):
    """
    Raised when a solver or oracle result contradicts a guarantee that holds
    for every valid DGMS input, e.g., a win/lose game that is not determined
    or a zero-sum game whose max-min and min-max values differ.
    """

# =============================================================================
#                                     EOF
# =============================================================================
