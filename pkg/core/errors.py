"""
Exception hierarchy shared by every toolkit module.
"""

from typing import Optional

import numpy as np


class VerifierError(Exception):
    """Base class for all toolkit errors."""


class DomainError(VerifierError, ValueError):
    """A parameter or precondition outside the operation's domain."""


class ParseError(DomainError):
    """Malformed serialized input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapabilityError(VerifierError):
    """Request exceeds a configured cap or an unsupported feature."""


class NumericError(VerifierError):
    """Eigen-solver failed to reach the residual bound."""

    def __init__(self, message: str, best_vector: Optional[np.ndarray] = None,
                 residual: float = float("inf"), iterations: int = 0):
        super().__init__(f"{message} (residual {residual:.3e} after {iterations} iterations)")
        self.best_vector = best_vector
        self.residual = residual
        self.iterations = iterations
