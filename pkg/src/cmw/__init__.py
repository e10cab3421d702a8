"""Exact computations for the Lie algebra of formal vector fields, its Hopf
algebra counterpart and the comparison maps between their cohomologies."""

__version__ = "0.1.0"
