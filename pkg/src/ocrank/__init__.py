"""Residual cranks of overpartitions: tables, positive moments and checks.

Everything is exact integer arithmetic on truncated power series in q.
"""
from ._kernels import get_backend, set_backend
from .bivariate import (
    CrankSeries,
    CrankTable,
    crank_kernel,
    moment_from_table,
    ordinary_crank_table,
    residual_crank_product,
)
from .enumeration import (
    Overpartition,
    Partition,
    crank,
    crank_table_enum,
    overpartitions,
    partitions,
    pbar,
    residual_crank,
    residual_part,
)
from .eulerian import eulerian_triangle
from .moments import MomentVector, crank_moment_series, h_series, rank_moment_series
from .series import TruncSeries, make_series, overpartition_gf

__version__ = "0.1.0"
