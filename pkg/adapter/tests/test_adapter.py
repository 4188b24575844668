"""Adapter acceptance: bit-exact loading and tamper detection.

Fixture directories are produced by invoking the geoguide CLI as a
subprocess, i.e. strictly through the external interface the adapter is
meant to validate.
"""

import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from geoguide_adapter import ContainerError, load_container, validate_run


@pytest.fixture(scope="module")
def export_dir(tmp_path_factory) -> Path:
    base = tmp_path_factory.mktemp("export")
    (base / "cube.obj").write_text(_cube_obj())
    (base / "orbit.json").write_text(_orbit_json(6, 128, 96, 110.0))
    (base / "manifest.json").write_text(json.dumps({
        "mesh_path": "cube.obj", "trajectory_path": "orbit.json",
        "output_dir": "out", "seed": 11, "noise_config": {"channels": 4},
    }))
    for cmd in ("preprocess", "warp-noise", "assemble"):
        proc = subprocess.run(
            [sys.executable, "-m", "geoguide.cli", cmd, str(base / "manifest.json")],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
    return base / "out"


def _cube_obj() -> str:
    h = 0.5
    verts = [(-h, -h, -h), (h, -h, -h), (h, h, -h), (-h, h, -h),
             (-h, -h, h), (h, -h, h), (h, h, h), (-h, h, h)]
    faces = [(1, 4, 3), (1, 3, 2), (5, 6, 7), (5, 7, 8), (1, 5, 8), (1, 8, 4),
             (2, 3, 7), (2, 7, 6), (1, 2, 6), (1, 6, 5), (4, 8, 7), (4, 7, 3)]
    lines = [f"v {x} {y} {z}" for x, y, z in verts]
    lines += ["f %d %d %d" % f for f in faces]
    return "\n".join(lines) + "\n"


def _orbit_json(n: int, width: int, height: int, f: float) -> str:
    poses = []
    for k in range(n):
        theta = 2.0 * np.pi * k / n
        eye = np.array([3.0 * np.cos(theta), 0.8, 3.0 * np.sin(theta)])
        fwd = -eye / np.linalg.norm(eye)
        right = np.cross(fwd, np.array([0.0, 1.0, 0.0]))
        right /= np.linalg.norm(right)
        down = np.cross(fwd, right)
        r = np.stack([right, down, fwd])
        w2c = np.eye(4)
        w2c[:3, :3] = r
        w2c[:3, 3] = -r @ eye
        poses.append({"w2c": [float(x) for x in w2c.reshape(-1)],
                      "fx": f, "fy": f, "cx": width / 2.0, "cy": height / 2.0,
                      "width": width, "height": height})
    return json.dumps(poses)


def test_load_container_matches_producer(export_dir):
    # bit-exact equality with the producing library's reader
    from geoguide.container import read_container
    for rel in ("noise_latent.ggt", "depth_00000.ggt", "flow_00000_00001.ggt",
                "assemble/stacked.ggt"):
        ours, header = load_container(export_dir / rel)
        theirs, their_header = read_container(export_dir / rel)
        assert np.array_equal(ours, theirs), rel
        assert header["layout"] == their_header["layout"]


def test_load_container_hash_matches_run_json(export_dir):
    run = json.loads((export_dir / "run.json").read_text())
    import hashlib
    for rel, meta in run["artifacts"].items():
        if rel.endswith(".ggt"):
            digest = hashlib.sha256((export_dir / rel).read_bytes()).hexdigest()
            assert digest == meta["sha256"], rel


def test_load_container_truncated(tmp_path, export_dir):
    src = (export_dir / "noise_latent.ggt").read_bytes()
    bad = tmp_path / "trunc.ggt"
    bad.write_bytes(src[:-10])
    with pytest.raises(ContainerError, match="payload"):
        load_container(bad)


def test_load_container_axis_permutation(export_dir):
    fhwc, h1 = load_container(export_dir / "noise_latent.ggt")
    fchw, h2 = load_container(export_dir / "noise_latent.ggt", layout="FCHW")
    assert h2["layout"] == "FCHW"
    assert fchw.shape == (fhwc.shape[0], fhwc.shape[3], fhwc.shape[1],
                          fhwc.shape[2])
    # permutation oracle: same multiset of values, exact positional map
    assert np.array_equal(np.sort(fchw.ravel()), np.sort(fhwc.ravel()))
    assert np.array_equal(fchw, np.transpose(fhwc, (0, 3, 1, 2)))
    with pytest.raises(ContainerError, match="permutation"):
        load_container(export_dir / "noise_latent.ggt", layout="FXWC")


def test_validate_fresh_export_passes(export_dir):
    report = validate_run(export_dir)
    failing = [e.to_dict() for e in report.entries if not e.ok]
    assert report.passed, failing
    names = {e.name for e in report.entries}
    assert "assemble/stacked.ggt" in names
    assert "assemble/zt.ggt == noise_latent.ggt" in names


def test_validate_detects_missing_artifact(export_dir, tmp_path):
    import shutil
    broken = tmp_path / "broken"
    shutil.copytree(export_dir, broken)
    (broken / "assemble" / "structure.ggt").unlink()
    report = validate_run(broken)
    assert not report.passed
    bad = [e.name for e in report.entries if not e.ok]
    assert any("structure" in n for n in bad)


def test_validate_detects_tampered_payload(export_dir, tmp_path):
    import shutil
    broken = tmp_path / "tampered"
    shutil.copytree(export_dir, broken)
    target = broken / "noise_latent.ggt"
    raw = bytearray(target.read_bytes())
    raw[-1] ^= 0xFF
    target.write_bytes(bytes(raw))
    report = validate_run(broken)
    assert not report.passed
    entry = next(e for e in report.entries if e.name == "noise_latent.ggt")
    assert entry.checks.get("sha256") is False


def test_validate_detects_edited_header(export_dir, tmp_path):
    import shutil
    broken = tmp_path / "header"
    shutil.copytree(export_dir, broken)
    target = broken / "assemble" / "zt.ggt"
    raw = target.read_bytes()
    nl = raw.find(b"\n", 5)
    header = json.loads(raw[5:nl])
    header["shape"][0] += 1
    new_header = json.dumps(header, separators=(", ", ": ")).encode() + b"\n"
    target.write_bytes(raw[:5] + new_header + raw[nl + 1:])
    report = validate_run(broken)
    assert not report.passed
    bad = [e.name for e in report.entries if not e.ok]
    assert any("zt" in n for n in bad)


def test_validate_every_tampered_artifact_flips(export_dir, tmp_path):
    # the secondary acceptance criterion: corrupting ANY indexed artifact fails
    import shutil
    run = json.loads((export_dir / "run.json").read_text())
    sample = sorted(run["artifacts"])[::5]  # spot-check a spread of artifacts
    for rel in sample:
        broken = tmp_path / ("flip_" + rel.replace("/", "_"))
        shutil.copytree(export_dir, broken)
        target = broken / rel
        raw = bytearray(target.read_bytes())
        raw[len(raw) // 2] ^= 0x01
        target.write_bytes(bytes(raw))
        assert not validate_run(broken).passed, rel


def test_cli_exit_codes(export_dir, tmp_path):
    proc = subprocess.run([sys.executable, "-m", "geoguide_adapter.cli",
                           "validate", str(export_dir)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["passed"] is True
    import shutil
    broken = tmp_path / "cli_broken"
    shutil.copytree(export_dir, broken)
    (broken / "noise_latent.ggt").unlink()
    proc = subprocess.run([sys.executable, "-m", "geoguide_adapter.cli",
                           "validate", str(broken), "--report",
                           str(tmp_path / "r.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads((tmp_path / "r.json").read_text())["passed"] is False
