from fastapi.testclient import TestClient

from ucycle.api import app

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_generate_golden():
    resp = client.post("/generate", json={"n": 3, "k": 4, "wmin": 9})
    assert resp.status_code == 200
    body = resp.json()
    assert body == {"sequence": "14423424324433343444", "length": 20, "truncated": False}


def test_generate_down_and_limit():
    resp = client.post("/generate", json={"n": 3, "k": 3, "wmax": 5})
    assert resp.json()["sequence"] == "3112212111"
    resp = client.post("/generate", json={"n": 4, "k": 2, "limit": 5})
    body = resp.json()
    assert body["sequence"] == "11112"
    assert body["length"] == 16
    assert body["truncated"] is True


def test_rank_and_unrank():
    resp = client.post("/rank", json={"n": 4, "k": 2, "string": "2112"})
    assert resp.status_code == 200
    assert resp.json() == {"rank": 5, "length": 16}
    resp = client.post("/unrank", json={"n": 3, "k": 4, "wmin": 9, "rank": 3})
    assert resp.json() == {"string": "423"}
    resp = client.post("/rank", json={"n": 3, "k": 3, "wmax": 5, "string": "311"})
    assert resp.json()["rank"] == 1


def test_necklaces_endpoint():
    resp = client.get("/necklaces", params={"n": 4, "k": 2, "wmin": 6})
    assert resp.status_code == 200
    assert resp.json() == {"necklaces": ["1122", "1212", "1222", "2222"], "count": 4}


def test_subset_endpoints():
    resp = client.post("/subset/rank", json={"n": 5, "t": 3, "elements": [3, 4, 5]})
    assert resp.json() == {"rank": 1, "count": 10}
    resp = client.post("/subset/unrank", json={"n": 5, "t": 3, "rank": 4})
    assert resp.json() == {"elements": [2, 4, 5], "diff": "221"}
    resp = client.post("/subset/encode", json={"n": 5, "t": 3, "elements": [1, 4, 5]})
    assert resp.json() == {"diff": "131"}
    resp = client.post("/subset/decode", json={"n": 5, "t": 3, "diff": "131"})
    assert resp.json() == {"elements": [1, 4, 5]}


def test_multiset_endpoints():
    resp = client.post("/multiset/rank", json={"n": 3, "t": 3, "elements": [2, 2, 2]})
    assert resp.json() == {"rank": 1, "count": 10}
    resp = client.post("/multiset/unrank", json={"n": 3, "t": 3, "rank": 5})
    assert resp.json() == {"elements": [1, 1, 2], "diff": "212"}
    resp = client.post("/multiset/encode", json={"n": 3, "t": 3, "elements": [0, 2, 2]})
    assert resp.json() == {"diff": "131"}
    resp = client.post("/multiset/decode", json={"n": 3, "t": 3, "diff": "131"})
    assert resp.json() == {"elements": [0, 2, 2]}


def test_constraint_violations_are_422():
    resp = client.post("/rank", json={"n": 3, "k": 4, "wmin": 9, "string": "111"})
    assert resp.status_code == 422
    assert "weight" in resp.json()["detail"]
    resp = client.post("/unrank", json={"n": 3, "k": 4, "wmin": 9, "rank": 21})
    assert resp.status_code == 422
    resp = client.post("/generate", json={"n": 3, "k": 2, "wmin": 7})
    assert resp.status_code == 422
    resp = client.post("/subset/rank", json={"n": 5, "t": 3, "elements": [1, 1, 2]})
    assert resp.status_code == 422


def test_both_bounds_rejected():
    resp = client.post("/rank", json={"n": 4, "k": 2, "wmin": 5, "wmax": 7,
                                      "string": "2112"})
    assert resp.status_code == 422


def test_generate_refuses_unbounded_huge_cycle():
    resp = client.post("/generate", json={"n": 12, "k": 4})
    assert resp.status_code == 422
    assert "limit" in resp.json()["detail"]
