"""Exact computations for over-restricted representations of restricted Lie
algebras in characteristic p: root data, Chevalley algebras over F_p,
truncated exponentials, pseudo-Chevalley groups and extension thresholds."""

import json as _json

from ._core import (
    centre_dimension,
    cone_size_and_span,
    coxeter_number,
    deviation_degree,
    group_order,
    integrability_threshold,
    is_n_over_restricted,
    is_over_restricted,
    min_n_for_p,
    min_prime_for_n,
    over_env_dimension,
    phi_report,
    positive_root_count,
    table1_json,
    table2_csv,
    table2_json,
    two_rho_max,
    u0_height,
    verify_abs_chev_all,
    weyl_height,
)

__all__ = [
    "centre_dimension",
    "cone_size_and_span",
    "coxeter_number",
    "deviation_degree",
    "group_order",
    "integrability_threshold",
    "is_n_over_restricted",
    "is_over_restricted",
    "min_n_for_p",
    "min_prime_for_n",
    "over_env_dimension",
    "phi_report",
    "positive_root_count",
    "table1",
    "table2",
    "table2_csv",
    "two_rho_max",
    "u0_height",
    "verify_abs_chev_all",
    "weyl_height",
]


def table1():
    """Coxeter table rows as a list of dicts."""
    return _json.loads(table1_json())["rows"]


def table2():
    """Extension requirement table with its discrepancy report, as dicts."""
    return _json.loads(table2_json())
