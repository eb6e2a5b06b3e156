import pytest
from fastapi.testclient import TestClient

from endomaps.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestAnalyzeEndpoint:
    def test_full_report(self, client):
        response = client.post("/analyze", json={"endofunction": "4: 2 3 1 1"})
        assert response.status_code == 200
        data = response.json()
        assert data["classification"] == "non-injective"
        assert data["sign"] == 0
        assert data["height"] == 1
        assert data["core"] == [1, 2, 3]
        assert data["quotient"] == {"class_count": 2, "class_sizes": [3, 1]}
        assert data["preorder_kind"] == "neither"

    def test_both_grammars_agree(self, client):
        table = client.post("/analyze", json={"endofunction": "4: 2 3 1 1"}).json()
        cycles = client.post("/analyze", json={"endofunction": "(1 2 3)(4->1)"}).json()
        assert table == cycles

    def test_parse_error_maps_to_422(self, client):
        response = client.post("/analyze", json={"endofunction": "3: 2 3 4"})
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail["kind"] == "parse-error"
        assert detail["line"] == 1
        assert detail["column"] == 8

    def test_request_validation_still_422(self, client):
        response = client.post("/analyze", json={})
        assert response.status_code == 422


class TestDotEndpoint:
    def test_directed(self, client):
        response = client.post(
            "/dot", json={"endofunction": "2: 2 2", "flavor": "directed"}
        )
        assert response.status_code == 200
        assert response.json()["dot"] == "digraph {\n  1;\n  2;\n  1 -> 2;\n  2 -> 2;\n}\n"

    def test_quotient(self, client):
        response = client.post(
            "/dot", json={"endofunction": "(1 2 3)(4->1)", "flavor": "quotient"}
        )
        assert "2 -> 1;" in response.json()["dot"]

    def test_bad_flavor_rejected_by_schema(self, client):
        response = client.post(
            "/dot", json={"endofunction": "2: 2 2", "flavor": "rainbow"}
        )
        assert response.status_code == 422


class TestFactorEndpoint:
    def test_components_mode(self, client):
        response = client.post(
            "/factor", json={"endofunction": "4: 2 1 3 3", "mode": "components"}
        )
        assert response.json()["factors"] == [[2, 1, 3, 4], [1, 2, 3, 3]]

    def test_word_mode(self, client):
        response = client.post(
            "/factor", json={"endofunction": "3: 1 1 2", "mode": "word"}
        )
        word = response.json()["word"]
        assert word["core_size"] == 1
        assert word["factors"] == [
            {"kind": "move", "source": 3, "target": 2},
            {"kind": "move", "source": 2, "target": 1},
        ]


class TestHomEndpoint:
    def test_swap_endomorphisms(self, client):
        response = client.post("/hom", json={"dom": "2: 2 1", "cod": "2: 2 1"})
        assert response.json() == {"count": 2, "morphisms": [[1, 2], [2, 1]]}

    def test_empty_hom_set(self, client):
        response = client.post("/hom", json={"dom": "1: 1", "cod": "(1 2 3)"})
        assert response.json() == {"count": 0, "morphisms": []}

    def test_bound_maps_to_400(self, client):
        response = client.post(
            "/hom", json={"dom": "4: 1 2 3 4", "cod": "4: 1 2 3 4", "max_tables": 5}
        )
        assert response.status_code == 400
        assert response.json()["detail"]["kind"] == "bound-exceeded"


class TestVerifyEndpoint:
    def test_small_suite_passes(self, client):
        response = client.post("/verify", json={"bound": 2, "suite": "monoid"})
        assert response.status_code == 200
        data = response.json()
        assert data["passed"] is True
        assert data["suite"] == "monoid"
        assert all(r["passed"] for r in data["results"])
        assert all("elapsed_seconds" in r for r in data["results"])

    def test_bound_exceeded(self, client):
        response = client.post("/verify", json={"bound": 7, "suite": "monoid"})
        assert response.status_code == 400
        assert response.json()["detail"]["kind"] == "bound-exceeded"

    def test_unknown_suite_rejected_by_schema(self, client):
        response = client.post("/verify", json={"bound": 2, "suite": "sideways"})
        assert response.status_code == 422
