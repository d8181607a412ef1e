#!/usr/bin/env python3
"""Scripted game against the HTTP engine, driven through the JSON API.

Uses the in-process test client, so no server or network is needed.  The
'human' here deliberately plays the first legal square each turn and loses;
the engine converts its winning position and makes the last move.
"""

from fastapi.testclient import TestClient

from maxwelter.service import create_app


def main():
    client = TestClient(create_app())

    created = client.post("/api/games", json={"squares": [2, 5, 6, 8, 10]}).json()
    game, state = created["id"], created["state"]
    print(f"new game {game}: coins on {state['squares']}")

    analysis = client.get("/api/analyze", params={"squares": "2,5,6,8,10"}).json()
    print(f"engine's view: value={analysis['grundy']} outcome={analysis['outcome']}"
          f" winning_targets={analysis['winning_targets']}")

    ply = 0
    while not state["terminal"]:
        ply += 1
        if state["to_move"] == "human":
            target = state["legal_targets"][0]
            print(f"{ply:2}. human moves the biggest coin to {target}")
            state = client.post(f"/api/games/{game}/moves", json={"target": target}).json()["state"]
        else:
            reply = client.post(f"/api/games/{game}/engine-move?annotate=true").json()
            move, note = reply["move"], reply.get("annotation", {})
            print(f"{ply:2}. engine plays {move['from']} -> {move['to']}"
                  f"   (position was value {note.get('grundy')}, {note.get('outcome')})")
            state = reply["state"]
        print(f"    board: {state['squares']}")

    print(f"\nterminal after {ply} plies; winner: {state['winner']}")


if __name__ == "__main__":
    main()
