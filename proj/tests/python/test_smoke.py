import json

import pytest

import overchev


def test_root_data():
    assert overchev.positive_root_count("G", 2) == 6
    assert overchev.positive_root_count("E", 8) == 120
    assert overchev.coxeter_number("A", 4) == 5
    assert overchev.two_rho_max("G", 2) == 10
    assert overchev.two_rho_max("E", 8) == 270


def test_centres():
    assert overchev.centre_dimension("A", 4, 5) == 1
    assert overchev.centre_dimension("A", 4, 3) == 0
    assert overchev.centre_dimension("E", 7, 2) == 1


def test_thresholds():
    assert overchev.min_prime_for_n("E", 8, 2) == 1087
    assert overchev.min_prime_for_n("G", 2, 2) == 41
    assert overchev.min_n_for_p("E", 8, 2) == 11
    assert overchev.integrability_threshold(3, 5) == 1


def test_modules():
    assert overchev.weyl_height(4, 5) == 5
    assert overchev.u0_height(3) == 5
    assert overchev.is_over_restricted(2, 5)
    assert not overchev.is_over_restricted(3, 5)
    assert overchev.is_n_over_restricted(3, 2, 3)
    assert not overchev.is_n_over_restricted(4, 2, 3)
    assert overchev.over_env_dimension(3) == 5
    assert overchev.deviation_degree(5) >= 3


def test_groups_and_phi():
    assert overchev.group_order("natural", 1, 5) == 120
    assert overchev.group_order("adjoint", 1, 3) == 12
    assert overchev.verify_abs_chev_all(2, 5)
    report = overchev.phi_report(1, 5)
    assert report["is_function"]
    assert report["kernel_size"] == 2


def test_cone():
    points, span = overchev.cone_size_and_span("A", 1, 3)
    assert points == 9
    assert span == 3


def test_tables():
    rows = overchev.table1()
    assert len(rows) == 31
    g2 = [r for r in rows if r["type"] == "G"][0]
    assert (g2["two_h_minus_2"], g2["a"]) == (10, 10)

    t2 = overchev.table2()
    assert t2["rows"][-1]["p0_n2"] == 1087
    # the discrepancy report carries the published-table corrections
    kinds = {(d["row"], d["column"]) for d in t2["discrepancies"]}
    assert ("C6", "G(2)") in kinds

    csv = overchev.table2_csv()
    assert csv.splitlines()[0].startswith("type,rank,a")
    assert len(csv.splitlines()) == 32
