"""Compose Gaussian splats for a rolled-out frame and export a viewer-ready
PLY.

The upscaled position map supplies the means; the base attribute map supplies
color/scale/rotation/opacity with the standing/posed height correction; zero
refinement offsets keep the seam an identity; Procrustes re-aligns the
normalized splats onto the frame's accumulated world geometry.
"""

from pathlib import Path

import numpy as np

from avatar_engine.assets import make_avatar_assets
from avatar_engine.ingest import ActionLabel
from avatar_engine.predictor import KinematicParams, KinematicPredictor
from avatar_engine.rollout import init_session, step
from avatar_engine.splat import compose_world_splats, export_splats

A = ActionLabel
out = Path(__file__).parent / "_out"
out.mkdir(exist_ok=True)

assets = make_avatar_assets(out / "avatar", upscale_factor=4, with_basis=False)
pred = KinematicPredictor(
    KinematicParams(rig=assets.rig), scale=assets.scale, resolution=assets.resolution
)
state = init_session(assets.standing_atlas, np.zeros(3), assets.scale, assets.waist_pixels)

for action in [A.FORWARD] * 25 + [A.LEFT] * 10:
    state, result = step(state, action, pred)

splats = compose_world_splats(
    result.local_atlas,
    result.world_positions,
    assets.base,
    assets.scale,
    upscale_factor=assets.upscale_factor,
)
print(f"composed {len(splats)} splats "
      f"(x{assets.upscale_factor} upscale of {result.fg_count} low-res points)")
print(f"world centroid {np.round(splats.means.mean(axis=0), 3)}, "
      f"root {np.round(result.world_root, 3)}")

path = out / "frame_0035.ply"
export_splats(splats, path)
print(f"wrote {path} ({path.stat().st_size / 1e6:.1f} MB); "
      "open it in any 3DGS-style splat or point viewer")
