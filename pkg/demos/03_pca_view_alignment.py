"""Fit a PCA basis on gait atlases and use it to repair a corrupted view.

The basis spans only six-view-consistent geometry, so projecting a map whose
views disagree and reconstructing discards exactly the inconsistent part.
Also writes the reconstruction-error-vs-components curve.
"""

from pathlib import Path

import numpy as np

from avatar_engine import pca
from avatar_engine.ingest import ActionLabel, build_frame_groups, compute_global_scale
from avatar_engine.posmap import PositionMapAtlas, render_group
from avatar_engine.synthetic import build_biped, make_motion_sequence

out = Path(__file__).parent / "_out"
out.mkdir(exist_ok=True)

rig = build_biped()
scale = compute_global_scale(rig.reference)
seq = make_motion_sequence(
    rig, [(ActionLabel.FORWARD, 20), (ActionLabel.LEFT, 17), (ActionLabel.BACKWARD, 16)]
)
samples = [
    render_group(seq.frames[g.start : g.start + 4], rig.reference, scale, 128).atlases[3]
    for g in build_frame_groups(seq)
]
print(f"{len(samples)} training samples, 3N = {3 * samples[0].foreground_count}")

basis = pca.fit(samples, M=len(samples) - 1)
print(f"fit basis with M = {basis.M} components")

# Corrupt one view tile of a held-out-ish sample: shift its +x view by a few
# pixels worth of coordinate, the classic cross-view misalignment artifact.
target = samples[-1]
vals = target.values.copy()
tile = target.layout.tiles[0]
region = (slice(tile.y0, tile.y0 + tile.h), slice(tile.x0, tile.x0 + tile.w))
m = target.mask[region]
vals[region][m] = np.clip(vals[region][m] + np.array([0.03, -0.02, 0.01]), 0, 1)
corrupted = PositionMapAtlas(values=vals, mask=target.mask.copy(), layout=target.layout)

before = np.linalg.norm(pca.flatten_atlas(corrupted, basis) - pca.flatten_atlas(target, basis))
aligned = pca.align(basis, corrupted)
after = np.linalg.norm(pca.flatten_atlas(aligned, basis) - pca.flatten_atlas(target, basis))
print(f"distance to clean map: {before:.4f} before alignment, {after:.4f} after")

rows = ["M,error"]
for m_count in range(1, basis.M + 1):
    err = pca.reconstruction_error(basis.truncated(m_count), corrupted)
    rows.append(f"{m_count},{err:.8e}")
curve = out / "pca_error_curve.csv"
curve.write_text("\n".join(rows) + "\n")
print(f"wrote {curve} (error is non-increasing in M)")

pca.save_basis(basis, out / "gait_basis.pmpc")
print(f"wrote {out / 'gait_basis.pmpc'}")
