"""Exact genus coefficients, quasimodular Eisenstein traces and theta-function checks."""

from __future__ import annotations

__version__ = "0.1.0"

from .arith import bernoulli, divisor_sigma
from .genera import (
    QuasiBasis,
    QuasiPoly,
    ahat_genus,
    basis_convert,
    fourier_basis_convert,
    l_genus,
    quasi_to_qseries,
    quasi_to_sympoly,
    ramanujan_u,
    trace,
    witten_coefficient,
)
from .partitions import Partition, PhiKind, enumerate_partitions
from .report import Report
from .series import QSeries, ThetaSeries, eisenstein_E, eisenstein_G
from .symfun import AHAT_SERIES, L_SERIES, Basis, CharSeries, SymPoly, genus_coefficient

__all__ = [
    "AHAT_SERIES",
    "Basis",
    "CharSeries",
    "L_SERIES",
    "Partition",
    "PhiKind",
    "QSeries",
    "QuasiBasis",
    "QuasiPoly",
    "Report",
    "SymPoly",
    "ThetaSeries",
    "__version__",
    "ahat_genus",
    "basis_convert",
    "bernoulli",
    "divisor_sigma",
    "eisenstein_E",
    "eisenstein_G",
    "enumerate_partitions",
    "fourier_basis_convert",
    "genus_coefficient",
    "l_genus",
    "quasi_to_qseries",
    "quasi_to_sympoly",
    "ramanujan_u",
    "trace",
    "witten_coefficient",
]
