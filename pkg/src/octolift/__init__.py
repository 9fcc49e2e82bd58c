"""Exact arithmetic and numerics for split-SO(8) coefficient structures:
split octonions, triality, coefficient lifts, orbit reduction, and
Whittaker/K-Bessel identities."""

__version__ = "0.1.0"
