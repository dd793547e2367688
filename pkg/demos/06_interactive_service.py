"""Drive a live session over the service's wire protocol, in process.

The same endpoints serve the browser viewer; here an in-process test client
plays the role of the viewer: create a session, stream key presses, decode
binary frames.
"""

import json
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from avatar_engine.assets import make_assets_tree
from avatar_engine.service import create_app, decode_frame

out = Path(__file__).parent / "_out"
out.mkdir(exist_ok=True)

assets_dir = out / "service_assets"
if not (assets_dir / "config.json").exists():
    make_assets_tree(assets_dir, basis_frames=18)
    print(f"built service assets in {assets_dir}")

app = create_app(assets_dir)
with TestClient(app) as client:
    print("avatars:", [a["id"] for a in client.get("/avatars").json()])

    session = client.post("/sessions", json={"avatar_id": "biped"}).json()
    sid = session["id"]
    print(f"session {sid[:8]}... created at round {session['round']}")

    with client.websocket_connect(f"/sessions/{sid}/stream") as ws:
        held = ["W"] * 20 + ["A"] * 12 + ["0"] * 3
        for key in held:
            ws.send_text(json.dumps({"a": key}))
            frame = decode_frame(ws.receive_bytes())
        print(f"streamed {len(held)} key presses; now at round {frame.round}")
        print(f"last action echo: {frame.action_echo.char}, "
              f"world root {np.round(frame.world_root, 3)}")
        points = np.frombuffer(frame.point_payload, dtype="<f4").reshape(-1, 3)
        print(f"frame payload: {len(points)} world-space points")

    info = client.get(f"/sessions/{sid}").json()
    print(f"session info: round {info['round']}, steps {info['steps']}, "
          f"drops {info['drops']}")
    client.delete(f"/sessions/{sid}")
    print("session closed")

print("\nfor the real browser viewer:  engine serve --assets", assets_dir)
