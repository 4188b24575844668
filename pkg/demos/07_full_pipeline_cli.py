"""The whole pipeline through its external surface: CLI subcommands on a
generated fixture, then the adapter's independent validation.

Everything the downstream diffusion runner needs ends up in one
directory: edge PNGs, flow/depth containers, the warped-noise volume,
and the stacked conditioning tensors with their layout descriptor.
"""

import json
import subprocess
import sys
from pathlib import Path

from geoguide.scene import save_trajectory
from geoguide.synthetic import cube_obj_text, orbit_trajectory

base = Path(__file__).parent / "output" / "07"
base.mkdir(parents=True, exist_ok=True)

(base / "cube.obj").write_text(cube_obj_text())
save_trajectory(orbit_trajectory(n_poses=10, radius=3.0, width=256, height=192,
                                 fx=230, fy=230), base / "orbit.json")
(base / "manifest.json").write_text(json.dumps({
    "mesh_path": "cube.obj",
    "trajectory_path": "orbit.json",
    "output_dir": "export",
    "seed": 42,
    "noise_config": {"channels": 8},
}, indent=1))


def run(*args):
    cmd = [sys.executable, "-m", *args]
    print("$", " ".join(str(a) for a in cmd[2:]))
    proc = subprocess.run([str(a) for a in cmd], capture_output=True, text=True)
    print(proc.stdout.strip())
    if proc.returncode != 0:
        print(proc.stderr, file=sys.stderr)
        sys.exit(proc.returncode)


manifest = base / "manifest.json"
run("geoguide.cli", "preprocess", manifest)
run("geoguide.cli", "warp-noise", manifest)
run("geoguide.cli", "assemble", manifest)
run("geoguide.cli", "sag-demo", manifest)
run("geoguide.cli", "inspect", base / "export" / "noise_latent.ggt")
run("geoguide_adapter.cli", "validate", base / "export")

layout = json.loads((base / "export" / "assemble" / "layout.json").read_text())
print(f"\nlayout: {layout['frames']} frames -> {layout['latent_frames']} latent "
      f"frames at {layout['latent_width']}x{layout['latent_height']}, "
      f"{layout['channels']} channels per block")
