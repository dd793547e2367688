"""Progressive 4D inference: drive the avatar through the long action script
and analyze the trajectory.

Each round predicts one normalized frame, accumulates its raw per-pixel
increment into world coordinates, and re-centers the window, so the avatar
roams an unbounded world while the network-facing maps stay inside [0, 1].
"""

from pathlib import Path

import numpy as np

from avatar_engine.ingest import ActionLabel, compute_global_scale
from avatar_engine.metrics import stability_report, turning_frames
from avatar_engine.predictor import KinematicParams, KinematicPredictor
from avatar_engine.rollout import init_session, run_script, write_trajectory
from avatar_engine.synthetic import build_biped

A = ActionLabel
out = Path(__file__).parent / "_out"
out.mkdir(exist_ok=True)

rig = build_biped()
scale = compute_global_scale(rig.reference)
pred = KinematicPredictor(KinematicParams(rig=rig), scale=scale)
state = init_session(pred.standing_atlas(), np.zeros(3), scale, pred.rasterizer.waist_pixels)

script = [(A.FORWARD, 60), (A.BACKWARD, 60), (A.LEFT, 60), (A.IDLE, 20)] * 10
state, records = run_script(state, script, pred)
print(f"rolled out {len(records)} frames; final root {np.round(state.world_root, 3)}")

write_trajectory(records, out / "trajectory.jsonl")
print(f"wrote {out / 'trajectory.jsonl'}")

roots = np.array([r["world_root"] for r in records])
turns = turning_frames(roots)
print(f"turning events: {len(turns.events)}")
print(f"mean 180-degree turn: {turns.mean_180:.2f} frames (configured 12)")
print(f"mean  90-degree turn: {turns.mean_90:.2f} frames (configured 9)")

report = stability_report(records, window=200, stride=10)
for name, stat in report["stats"].items():
    print(
        f"{name:>22}: mean {stat['mean']:.4g}, "
        f"slope {stat['slope_per_1k_frames']:+.2e} per 1k frames"
    )

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    ax.plot(roots[:, 0], roots[:, 1], lw=0.8)
    ax.scatter([0], [0], marker="x", color="k")
    ax.set_aspect("equal")
    ax.set_xlabel("x (m)")
    ax.set_ylabel("y (m)")
    ax.set_title("world-root breadcrumb, 2000 frames")
    fig.savefig(out / "breadcrumb.png", dpi=110, bbox_inches="tight")
    print(f"wrote {out / 'breadcrumb.png'}")
except ImportError:
    print("matplotlib not installed; skipping the breadcrumb plot")
