"""Render a four-frame group into six-view position-map atlases.

Every foreground pixel of an atlas stores a normalized 3D surface coordinate;
the group normalization centers frame t's root at 0.5 so the same pixel grid
covers all four frames.  Saves the atlases and, when matplotlib is present, a
PNG where color literally is coordinate.
"""

from pathlib import Path

from avatar_engine.ingest import ActionLabel, build_frame_groups, compute_global_scale
from avatar_engine.posmap import (
    atlas_to_points,
    extract_root,
    get_rasterizer,
    render_group,
    save_atlas,
    upscale_atlas,
)
from avatar_engine.synthetic import build_biped, make_motion_sequence

out = Path(__file__).parent / "_out"
out.mkdir(exist_ok=True)

rig = build_biped()
scale = compute_global_scale(rig.reference)
seq = make_motion_sequence(rig, [(ActionLabel.FORWARD, 10)])
group_idx = build_frame_groups(seq)[4]
frames = seq.frames[group_idx.start : group_idx.start + 4]

group = render_group(frames, rig.reference, scale, resolution=128)
print(f"group action: {group.action.char}")
print(f"atlas: {group.atlases[0].width}x{group.atlases[0].height}, "
      f"{group.atlases[0].foreground_count} foreground pixels")

raster = get_rasterizer(rig.reference, 128)
root = extract_root(group.atlases[2], raster.waist_pixels)
print(f"frame-t root pixel mean: {root}  (0.5 = centered)")

for i, atlas in enumerate(group.atlases):
    save_atlas(atlas, out / f"group_f{i}.pmat")
print(f"wrote 4 atlases to {out}")

points, pixels = atlas_to_points(group.atlases[3])
print(f"frame t+1 decodes to {len(points)} points; "
      f"bbox {points.min(0).round(3)} .. {points.max(0).round(3)}")

up = upscale_atlas(group.atlases[3], 8)
print(f"foreground-aware upscale x8: {up.foreground_count} points "
      f"({up.width}x{up.height})")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 4, figsize=(16, 4))
    for ax, atlas, title in zip(axes, group.atlases, ["t-2", "t-1", "t", "t+1"]):
        ax.imshow(atlas.values)
        ax.set_title(f"frame {title}")
        ax.axis("off")
    fig.savefig(out / "group_atlases.png", dpi=110, bbox_inches="tight")
    print(f"wrote {out / 'group_atlases.png'}")
except ImportError:
    print("matplotlib not installed; skipping the PNG")
