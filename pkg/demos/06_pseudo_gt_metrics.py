"""Evaluation without ground truth: composite a pseudo-reference from the
two anchor views and score only where it is known.

The depth metric first rank-equalizes both maps, so any monotone
re-scaling of the estimated depth scores identically.
"""

from pathlib import Path

import numpy as np

from geoguide.flow import compute_flow
from geoguide.metrics import (composite_pseudo_gt, masked_psnr, masked_ssim,
                              psnr_d)
from geoguide.pngio import write_float_png, write_mask_png
from geoguide.raster import rasterize, unproject_all
from geoguide.synthetic import cube_mesh, orbit_trajectory

out = Path(__file__).parent / "output" / "06"
out.mkdir(parents=True, exist_ok=True)

mesh = cube_mesh()
traj = orbit_trajectory(n_poses=9, radius=3.0, width=256, height=192,
                        fx=230, fy=230, sweep_deg=50.0)  # anchor arc
gbufs = [rasterize(mesh, p) for p in traj.poses]


def render(k):
    """World-anchored shading standing in for generated frames."""
    pts, mask = unproject_all(gbufs[k], mesh)
    img = np.zeros((*mask.shape, 3))
    img[mask] = 0.5 + 0.5 * np.sin(3.0 * pts[mask] + np.array([0.0, 2.0, 4.0]))
    return img


i = 4  # middle frame; anchors are 0 and 8
f_to_0, m_to_0 = compute_flow(mesh, traj, i, 0, gbufs[i], gbufs[0])
f_to_n, m_to_n = compute_flow(mesh, traj, i, 8, gbufs[i], gbufs[8])
pseudo = composite_pseudo_gt(render(0), render(8), f_to_0, f_to_n, m_to_0, m_to_n)
print(f"pseudo-GT for frame {i}: known {pseudo.known.mean():.1%}, "
      f"from_v0 {np.mean(pseudo.provenance == 0):.1%}, "
      f"from_vN {np.mean(pseudo.provenance == 1):.1%}")

frame = render(i)
print(f"PSNR  (known region): {masked_psnr(frame, pseudo.frame, pseudo.known):.2f} dB")
print(f"SSIM  (known region): {masked_ssim(frame, pseudo.frame, pseudo.known):.4f}")

gt_depth = gbufs[i].depth
valid = gbufs[i].coverage.astype(bool)
print(f"PSNR-D gt vs gt:        {psnr_d(gt_depth, gt_depth, valid):.2f} dB")
# note: the transform must stay strictly increasing in the stored floats;
# power-of-two scaling is exact, while e.g. 3*d+5 can merge ULP-adjacent
# depths and perturb ranks
print(f"PSNR-D gt vs 2*gt:      {psnr_d(gt_depth, 2 * gt_depth, valid):.2f} dB"
      " (monotone-invariant)")
noisy = gt_depth + np.random.default_rng(0).normal(0, 0.05, gt_depth.shape)
print(f"PSNR-D gt vs noisy gt:  {psnr_d(gt_depth, noisy, valid):.2f} dB")

write_float_png(out / "pseudo_gt.png", np.clip(pseudo.frame, 0, 1))
write_float_png(out / "frame.png", np.clip(frame, 0, 1))
write_mask_png(out / "known.png", pseudo.known)
print(f"wrote previews to {out}")
