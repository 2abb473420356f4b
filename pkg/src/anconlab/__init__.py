"""Desk-scale lab for self-training under distribution shift.

Implements anchored-confidence label smoothing with an uncertainty-aware
temporal ensemble, the vanilla/ELR/GCE baselines, unsupervised model
selection and calibration metrics, synthetic covariate-shift benchmarks,
and a numerical verification suite for the method's guarantees.
"""

from anconlab._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
