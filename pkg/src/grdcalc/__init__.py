"""Exact intersection-theory calculator for curves with linear series.

Computes Schubert integrals on Grassmannians, Brill-Noether numerology,
divisor class pull-backs and push-forwards between moduli spaces of stable
pointed curves, and slope bounds for the resulting divisor classes.  Every
quantity is an arbitrary-precision rational; no float appears anywhere in
the computation chain, so results are reproducible bit for bit.
"""

__version__ = "0.1.0"
