"""Young/Maya diagram calculus, tableau counting, balanced-sum identities,
Pluecker coordinates of polynomial curves and exponential-curve perimeters."""

__version__ = "0.1.0"
