import math

import ternwb


def test_cyclotomic_constants():
    j = ternwb.Cyclo12.j_unit()
    one = ternwb.Cyclo12.one()
    assert one + j + j * j == ternwb.Cyclo12.zero()
    assert j.pow(3) == one
    i = ternwb.Cyclo12.i_unit()
    assert i * i == -one
    z = j.to_complex()
    assert abs(z - complex(-0.5, math.sqrt(3) / 2)) < 1e-14
    assert j.conj() == j * j


def test_exact_suites_are_clean():
    records = ternwb.run_suite("all")
    assert len(records) >= 60
    statuses = {r["status"] for r in records}
    assert "fail" not in statuses
    assert "pass" in statuses
    assert "discrepancy_documented" in statuses


def test_dimension_census():
    assert ternwb.hilbert_dims("Lam", 2) == [1, 2, 4, 2, 0]
    assert ternwb.hilbert_dims("Lam", 3) == [1, 3, 9, 8, 0]
    assert ternwb.quotient_dim("S", 2, 3) == 6
    assert ternwb.surjection("S", "S1", 2)
    assert not ternwb.surjection("Lam", "Lam1", 2)


def test_sextic_ground_state():
    sp = ternwb.sextic_spectrum(M=96)
    assert abs(sp["eigenvalues"][0] / 2.9530453962581533 - 1.0) < 1e-7
    assert sp["converged_count"] >= 6


def test_series_match_flags():
    m0 = ternwb.series_match(0)
    assert m0["printed_matches"]
    assert m0["argument_minus_matches"]
    m2 = ternwb.series_match(2)
    assert not m2["printed_matches"]
    assert m2["p_derived"] == "7/6"
    assert m2["p_printed"] == "7/3"


def test_quantization_constants():
    c = ternwb.en_coefficient()
    assert abs(c - 0.1427461942609395) < 1e-12
    a = ternwb.action_integral(1.0)
    g = ternwb.gamma_closed_form(1.0)
    assert abs(a / g - 1.0) < 1e-8
    rows = ternwb.energy_levels(5, "paper_nh")
    assert rows[0]["n"] == 1
    assert abs(rows[4]["E_n"] / (5 * rows[0]["E_n"]) - 1.0) < 1e-12


def test_report_json_deterministic():
    a = ternwb.records_json("clifford")
    b = ternwb.records_json("clifford")
    assert a == b
    assert a.startswith("[")
