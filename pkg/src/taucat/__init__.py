"""taucat: exact computations in categories graded by a group homomorphism."""

__version__ = "0.1.0"
