import pytest

import wfdim


def rat(n, d=1):
    return ["rat", str(n), str(d)]


def test_quintic_power():
    rep = wfdim.dim({"field": {"kind": "rational"}, "roots": [{"root": rat(0), "multiplicity": 5}]})
    assert rep["dim_oracle"] == 2
    assert rep["basis"] == ["x^2", "x^3"]
    assert rep["routes_agree"]


def test_coefficient_input_runs_without_structural_route():
    # x^4 (x - 1)
    coeffs = [rat(0)] * 4 + [rat(-1), rat(1)]
    rep = wfdim.dim({"field": {"kind": "rational"}, "coefficients": coeffs})
    assert rep["dim_oracle"] == 1
    assert rep["dim_structural"] is None
    assert rep["basis"] == ["x^3 - 5/6*x^2"]


def test_degenerate_two_point_problem():
    rep = wfdim.zdim([1, -1], [1, -1], 2)
    assert (rep["rank"], rep["dimension"], rep["degenerate"]) == (1, 2, True)


def test_kernel_basis_square_minus_one_squared():
    # (x^2 - 1)^2 = x^4 - 2x^2 + 1
    assert wfdim.kernel_basis(["1", "0", "-2", "0", "1"]) == ["x^2 - 1"]


def test_table_dims_match_mu():
    rows = wfdim.table()
    assert len(rows) == 13
    assert all(r["dim"] == r["mu"] and r["routes_agree"] for r in rows)


def test_verify_single_suite():
    [res] = wfdim.verify(seed=3, corpus_size=20, suite="zspace")
    assert res["suite"] == "zspace" and res["failed"] == 0


def test_errors_surface_as_python_exceptions():
    with pytest.raises(wfdim.WfdimError, match="ParseError"):
        wfdim.dim("{not json")
    with pytest.raises(wfdim.WfdimError, match="CoincidentPoints"):
        wfdim.zdim([0, 0], [1, 1], 2)
