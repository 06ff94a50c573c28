"""Weighing matrices, BGWs and symmetric designs from seed matrices and orthogonal arrays."""

__version__ = "0.1.0"
