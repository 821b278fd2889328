# Core numerics for the two-level atom toolkit

__version__ = "0.1.0"
