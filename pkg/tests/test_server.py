import pytest
from fastapi.testclient import TestClient

from finitary.server import create_app


@pytest.fixture()
def client():
    return TestClient(create_app(static_dir=None))


def new_game(client, sentence, bound):
    response = client.post("/api/game", json={"sentence": sentence, "bound": bound})
    assert response.status_code == 200, response.text
    return response.json()


def test_create_and_win_by_witness(client):
    view = new_game(client, "exists x. x + x = SS0", 2)
    assert view["outcome"] == "open"
    assert view["board"] == ["(exists x.((x+x)=SS0))"]
    assert view["degrees"] == ["1"]
    assert {"type": "witness", "index": 0, "value": 1} in view["legal_moves"]

    response = client.post(f"/api/game/{view['game_id']}/move",
                           json={"move": {"type": "witness", "index": 0, "value": 1}})
    assert response.status_code == 200
    after = response.json()
    assert after["outcome"] == "won"
    assert "(S0+S0)=SS0" in after["board"][1]


def test_witness_above_bound_conflicts(client):
    view = new_game(client, "exists x. x + x = SS0", 2)
    response = client.post(f"/api/game/{view['game_id']}/move",
                           json={"move": {"type": "witness", "index": 0, "value": 5}})
    assert response.status_code == 409
    assert "bound" in response.json()["detail"]


def test_point_at_and_gets_engine_answer(client):
    view = new_game(client, "(0 = 0) & (0 = S0)", 1)
    response = client.post(f"/api/game/{view['game_id']}/move",
                           json={"move": {"type": "point", "index": 0}})
    assert response.status_code == 200
    after = response.json()
    # the engine removed the pointed sentence and answered with the false part
    assert after["board"] == ["(0=S0)"]
    assert after["turn"] == "proponent"
    assert [h["player"] for h in after["history"]] == ["proponent", "adversary"]


def test_unknown_game_is_404(client):
    assert client.get("/api/game/nope").status_code == 404
    response = client.post("/api/game/nope/move",
                           json={"move": {"type": "point", "index": 0}})
    assert response.status_code == 404


def test_malformed_sentence_rejected(client):
    response = client.post("/api/game", json={"sentence": "forall x.", "bound": 1})
    assert response.status_code == 422


def test_open_sentence_rejected(client):
    response = client.post("/api/game", json={"sentence": "x = 0", "bound": 1})
    assert response.status_code == 422


def test_hint_claims_win(client):
    view = new_game(client, "S0 = S0", 1)
    response = client.get(f"/api/game/{view['game_id']}/hint")
    assert response.status_code == 200
    hint = response.json()
    assert hint["kind"] == "win" and hint["index"] == 0
    assert hint["message"] == "claim win at index 0"


def test_hint_recommends_move(client):
    view = new_game(client, "exists x. x + x = SS0", 2)
    hint = client.get(f"/api/game/{view['game_id']}/hint").json()
    assert hint["kind"] == "move"
    assert hint["move"] == {"type": "witness", "index": 0, "value": 1}


def test_hint_reports_no_reduction(client):
    view = new_game(client, "0 = S0", 1)
    hint = client.get(f"/api/game/{view['game_id']}/hint").json()
    assert hint["kind"] == "none"


def test_answer_moves_rejected_from_client(client):
    view = new_game(client, "forall x. x = x", 1)
    response = client.post(f"/api/game/{view['game_id']}/move",
                           json={"move": {"type": "answer", "component": 0}})
    assert response.status_code == 409


def test_legal_moves_match_engine(client):
    from finitary import game as engine
    from finitary.formulas import nnf, parse_formula

    view = new_game(client, "forall x. (x = 0 | x > 0)", 3)
    state = engine.initial_state([nnf(parse_formula("forall x. (x = 0 | x > 0)"))], 3)
    expected = [engine.move_to_payload(m) for m in engine.legal_moves(state)]
    assert view["legal_moves"] == expected
