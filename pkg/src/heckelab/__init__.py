"""
Exact computations in the type-A Iwahori-Hecke algebra and around it:
Kazhdan-Lusztig basis elements, parabolic induced characters (by trace and
by binary-word enumeration), Frobenius characters in the classical
symmetric-function bases, chromatic quasisymmetric functions of
indifference graphs, and unicellular LLT polynomials.

All arithmetic is exact (big integers, exact rationals where needed); all
outputs are deterministic.
"""

__version__ = "0.1.0"
