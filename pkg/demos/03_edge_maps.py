"""Structural guidance: the four geometric edge types, rendered with
hidden-line removal.

Interpenetrating cubes show all types at once: outlines (silhouette),
fixed 90-degree dihedrals (crease), and the seam where the two objects
pass through each other (intersection).
"""

from pathlib import Path

import numpy as np

from geoguide.edges import EdgeConfig, classify_edges, render_edges
from geoguide.pngio import write_png8
from geoguide.raster import rasterize
from geoguide.scene import build_topology
from geoguide.synthetic import interpenetrating_cubes, look_at_pose

out = Path(__file__).parent / "output" / "03"
out.mkdir(parents=True, exist_ok=True)

mesh = interpenetrating_cubes()
topo = build_topology(mesh)
pose = look_at_pose(eye=(2.6, 1.8, -2.6), target=(0.25, 0.25, 0.25),
                    fx=420, fy=420, width=360, height=280)

segs = classify_edges(mesh, topo, pose)
for name, arr in segs.by_type().items():
    print(f"{name:13s}: {len(arr):3d} 3-D segments")

gbuf = rasterize(mesh, pose)
emap = render_edges(segs, gbuf, pose, EdgeConfig(crease_angle_deg=40))
write_png8(out / "combined.png", emap.combined)
for name, plane in emap.per_type.items():
    write_png8(out / f"{name}.png",
               np.where(plane, 255, 0).astype(np.uint8))
    print(f"{name:13s}: {int(plane.sum()):5d} px drawn")
print(f"wrote combined + per-type maps to {out}")
