"""Closed-form exponentials of so(3), so(5) and so(6) through spin groups."""

from .core import ConvergenceError, DegenerateError, DomainError
from .expm import ExpResult, exp_so3, exp_so3_quaternion, exp_spin_element
from .minpoly import classify_sp4, classify_su4
from .oracle import brute_minpoly, series_expm
from .sp4 import decompose_sp4, reconstruct_sp4
from .spin import exp_so5, exp_so6, psi5_inverse, psi6_inverse

__all__ = [
    "ConvergenceError",
    "DegenerateError",
    "DomainError",
    "ExpResult",
    "brute_minpoly",
    "classify_sp4",
    "classify_su4",
    "decompose_sp4",
    "exp_so3",
    "exp_so3_quaternion",
    "exp_so5",
    "exp_so6",
    "exp_spin_element",
    "psi5_inverse",
    "psi6_inverse",
    "reconstruct_sp4",
    "series_expm",
]
