"""Rasterize a mesh into a G-buffer and inspect what downstream stages see.

Every other capability builds on this: per-pixel depth, face ids and
barycentrics for one camera pose, computed deterministically.
"""

from pathlib import Path

import numpy as np

from geoguide.pngio import write_float_png, write_mask_png
from geoguide.raster import project, rasterize, unproject
from geoguide.scene import build_topology
from geoguide.synthetic import cube_mesh, look_at_pose

out = Path(__file__).parent / "output" / "01"
out.mkdir(parents=True, exist_ok=True)

mesh = cube_mesh()
topo = build_topology(mesh)
print(f"cube: {mesh.n_vertices} vertices, {mesh.n_triangles} triangles, "
      f"{topo.n_edges} edges")

pose = look_at_pose(eye=(2.2, 1.5, -2.5), target=(0, 0, 0),
                    fx=400, fy=400, width=320, height=240)
gbuf = rasterize(mesh, pose)
covered = gbuf.coverage.astype(bool)
print(f"coverage: {covered.mean():.1%} of {gbuf.shape[1]}x{gbuf.shape[0]} px, "
      f"depth range [{gbuf.depth[covered].min():.3f}, {gbuf.depth[covered].max():.3f}]")

# lift one pixel back to 3D and reproject: lands on the pixel center
iy, ix = np.argwhere(covered)[len(np.argwhere(covered)) // 2]
point = unproject(gbuf, mesh, (ix, iy))
p = project(point, pose)
print(f"pixel ({ix},{iy}) -> world {np.round(point, 4)} -> "
      f"reprojects to ({p.u:.2f}, {p.v:.2f})")

depth_vis = np.where(covered, gbuf.depth, np.nan)
norm = (depth_vis - np.nanmin(depth_vis)) / np.ptp(depth_vis[covered])
write_float_png(out / "depth.png", np.nan_to_num(1.0 - norm * 0.8))
write_mask_png(out / "coverage.png", covered)
print(f"wrote {out}/depth.png and coverage.png")
