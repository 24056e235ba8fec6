"""Counting quasiplatonic topological actions of cyclic groups."""

from ._kernels import BACKEND
from .actions import (
    QCReport,
    TValueBreakdown,
    build_report,
    corollary_constant,
    qc_closed,
    qc_sum,
    qc_unified,
    r_cyclic,
    t_value,
)
from .lloyd import PowerSeries, lloyd_coefficient, lloyd_series
from .numtheory import Factorization, euler_phi, factorize, tau1_closed, tau2_closed
from .oracle import count_classes, dessin_pairs_oracle, enumerate_triples, qc_oracle
from .signatures import Signature, enumerate_signatures, genus, is_admissible

__version__ = "0.1.0"
