import pytest

import g5rp


def test_examples_listed():
    assert g5rp.examples() == ["pell", "edwards", "bremner", "flynn"]


def test_run_flynn():
    cert = g5rp.run("flynn", height=50)
    assert cert["format"] == 1
    assert cert["field"] == "Q(sqrt(5))"


def test_run_roundtrip_dict():
    cert = g5rp.run(g5rp.example("pell"), height=30)
    assert cert["field"] == "Q(sqrt(10))"


def test_table_pell():
    assert "[1:3:5:7:9]" in g5rp.table("pell")


def test_arith():
    assert g5rp.squarefree_part("-12/5") == "-15"
    # y^2 = t^4 + 1 has the point t = 0
    assert g5rp.has_qp_point("1", ["1", "0", "0", "0", "1"], 3)


def test_errors():
    with pytest.raises(ValueError):
        g5rp.example("nosuch")
    with pytest.raises(ValueError):
        g5rp.run("pell", height=0)
    with pytest.raises(ValueError):
        g5rp.sa("1")
