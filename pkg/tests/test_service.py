import math

import pytest
from fastapi.testclient import TestClient

from circpst.schemas import GraphSpec
from circpst.service import app

client = TestClient(app)


def test_graph_spec_validation():
    GraphSpec(n=4, divisor_weights={"1": 1})
    GraphSpec(n=6, row=[0, 4, 0, 1, 0, 4])
    with pytest.raises(ValueError):
        GraphSpec(n=4)
    with pytest.raises(ValueError):
        GraphSpec(n=4, divisor_weights={"1": 1}, row=[0, 1, 0, 1])
    with pytest.raises(ValueError):
        GraphSpec(n=4, divisor_weights={"1": 1}, mode="digraph")


def test_graph_spec_row_weight_equivalence():
    a = GraphSpec(n=6, row=[0, 4, 0, 1, 0, 4]).to_weights()
    b = GraphSpec(n=6, divisor_weights={"1": 4, "3": 1}).to_weights()
    assert a == b


def test_spectrum_endpoint_exact():
    resp = client.post(
        "/spectrum",
        json={"graph": {"n": 4, "divisor_weights": {"1": 1}}, "check": True},
    )
    assert resp.status_code == 200
    out = resp.json()
    assert out["kind"] == "exact"
    assert out["exact"] == [2, 0, -2, 0]
    assert out["check_passed"] is True


def test_spectrum_endpoint_numeric_digraph():
    resp = client.post(
        "/spectrum",
        json={"graph": {"n": 3, "row": [0, 1, 2], "mode": "digraph"}},
    )
    out = resp.json()
    assert out["kind"] == "numeric"
    assert not out["all_real"]
    assert abs(out["numeric"][1][1]) == pytest.approx(math.sqrt(3) / 2, abs=1e-9)


def test_spectrum_rejects_asymmetric_graph_row():
    resp = client.post("/spectrum", json={"graph": {"n": 4, "row": [0, 1, 2, 3]}})
    assert resp.status_code == 400
    # symmetric row with distinct class values is fine
    resp = client.post("/spectrum", json={"graph": {"n": 4, "row": [0, 1, 2, 1]}})
    assert resp.status_code == 200


def test_pst_endpoint_certificate():
    resp = client.post("/pst", json={"graph": {"n": 4, "divisor_weights": {"1": 1}}})
    out = resp.json()
    assert out["exists"] and out["reason"] == "Ok"
    cert = out["certificate"]
    assert cert["m"] == 1
    assert cert["time"] == pytest.approx(math.pi / 2)
    assert cert["time_over_2pi"] == "1/4"
    assert (cert["source"], cert["target"]) == (0, 2)
    assert cert["fidelity"] >= 1 - 1e-9


def test_pst_endpoint_reason_codes():
    for graph, reason in [
        ({"n": 9, "divisor_weights": {"1": 1}}, "OddOrder"),
        ({"n": 12, "divisor_weights": {"1": 1, "6": 1}}, "EqualAdjacentEigenvalues"),
        ({"n": 6, "divisor_weights": {"2": 1}}, "Disconnected"),
    ]:
        out = client.post("/pst", json={"graph": graph}).json()
        assert not out["exists"]
        assert out["reason"] == reason
        assert out["certificate"] is None


def test_pst_rejects_digraph_and_nonintegral():
    resp = client.post(
        "/pst", json={"graph": {"n": 3, "row": [0, 1, 2], "mode": "digraph"}}
    )
    assert resp.status_code == 400
    resp = client.post("/pst", json={"graph": {"n": 5, "row": [0, 5, 7, 7, 5]}})
    assert resp.status_code == 400


def test_pst_trace():
    out = client.post(
        "/pst",
        json={
            "graph": {"n": 2, "divisor_weights": {"1": 1}},
            "trace": {"t_max": math.pi, "steps": 3},
        },
    ).json()
    assert out["trace"]["values"][1] == pytest.approx(1.0, abs=1e-12)


def test_fidelity_endpoint():
    out = client.post(
        "/fidelity",
        json={
            "graph": {"n": 4, "divisor_weights": {"1": 1}},
            "a": 1, "b": 0, "time": math.pi / 2,
        },
    ).json()
    assert out["fidelity"] == pytest.approx(0.0, abs=1e-9)
    resp = client.post(
        "/fidelity",
        json={"graph": {"n": 4, "divisor_weights": {"1": 1}}, "a": 1, "b": 0},
    )
    assert resp.status_code == 422  # neither time nor trace


def test_census_endpoint():
    out = client.post("/census", json={"n": 8}).json()
    assert out["weightable_count"] == 6 == out["predicted_weightable"]
    assert [1, 4] in out["predicate_hits"]
    assert out["predicate_hits"] == out["spectral_hits"]
    assert out["consistent"]


def test_construct_endpoint_and_round_trip():
    out = client.post("/construct", json={"n": 6, "a": 1, "filler": 4}).json()
    assert out["graph"]["divisor_weights"] == {"1": 4, "2": 4, "3": 1}
    assert out["verdict"]["exists"]
    # constructed graph spec feeds straight back into /pst
    again = client.post("/pst", json={"graph": out["graph"]}).json()
    assert again == out["verdict"]


def test_construct_parity_errors():
    assert client.post("/construct", json={"n": 6, "a": 2}).status_code == 400
    assert client.post("/construct", json={"n": 5, "a": 1}).status_code == 400
