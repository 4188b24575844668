"""Export-directory validation: hashes, shapes, and channel-block slicing.

A run directory passes when every artifact indexed in run.json is
present with a matching content hash, and the assembled stack splits
back into the noise / condition / structure blocks bit-exactly with the
shapes declared in layout.json.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .container import ContainerError, load_container


@dataclass
class ArtifactStatus:
    name: str
    ok: bool
    checks: dict = field(default_factory=dict)
    error: str | None = None

    def to_dict(self) -> dict:
        d = {"artifact": self.name, "ok": self.ok, "checks": self.checks}
        if self.error:
            d["error"] = self.error
        return d


@dataclass
class AdapterReport:
    entries: list[ArtifactStatus]
    passed: bool

    def to_dict(self) -> dict:
        return {"passed": self.passed,
                "entries": [e.to_dict() for e in self.entries]}


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _fail(entries, name, message) -> None:
    entries.append(ArtifactStatus(name, False, error=message))


def validate_run(output_dir: str | Path) -> AdapterReport:
    """Check a geoguide export directory; failures become report entries."""
    out = Path(output_dir)
    entries: list[ArtifactStatus] = []

    run_path = out / "run.json"
    if not run_path.is_file():
        _fail(entries, "run.json", "missing")
        return AdapterReport(entries, False)
    try:
        run = json.loads(run_path.read_text())
    except json.JSONDecodeError as e:
        _fail(entries, "run.json", f"invalid JSON: {e}")
        return AdapterReport(entries, False)
    entries.append(ArtifactStatus("run.json", True, {"stages": sorted(run.get("stages", {}))}))

    for rel, meta in sorted(run.get("artifacts", {}).items()):
        p = out / rel
        if not p.is_file():
            _fail(entries, rel, "missing")
            continue
        checks = {}
        ok = True
        size = p.stat().st_size
        checks["bytes"] = size == meta.get("bytes")
        digest = _sha256(p)
        checks["sha256"] = digest == meta.get("sha256")
        ok = all(checks.values())
        if p.suffix == ".ggt":
            try:
                arr, header = load_container(p)
                checks["dtype"] = header["dtype"] == "f32"
                checks["layout"] = isinstance(header["layout"], str) \
                    and len(header["layout"]) == arr.ndim
                checks["finite"] = bool(np.isfinite(arr).all())
                ok = ok and all(checks.values())
            except ContainerError as e:
                entries.append(ArtifactStatus(rel, False, checks, str(e)))
                continue
        entries.append(ArtifactStatus(rel, ok, checks))

    entries += _validate_assembly(out)
    passed = all(e.ok for e in entries)
    return AdapterReport(entries, passed)


def _validate_assembly(out: Path) -> list[ArtifactStatus]:
    """Shape and slicing checks for the stacked model input."""
    entries: list[ArtifactStatus] = []
    asm = out / "assemble"
    layout_path = asm / "layout.json"
    if not layout_path.is_file():
        _fail(entries, "assemble/layout.json", "missing")
        return entries
    layout = json.loads(layout_path.read_text())
    fp = int(layout["latent_frames"])
    h = int(layout["latent_height"])
    w = int(layout["latent_width"])
    c = int(layout["channels"])
    blocks = {}
    names = {"noise": "zt", "condition": "condition", "structure": "structure"}
    for block, stem in names.items():
        rel = f"assemble/{stem}.ggt"
        p = asm / f"{stem}.ggt"
        try:
            arr, header = load_container(p)
        except ContainerError as e:
            _fail(entries, rel, str(e))
            continue
        ok = arr.shape == (fp, h, w, c)
        entries.append(ArtifactStatus(rel, ok, {"shape": ok}))
        blocks[block] = arr
    rel = "assemble/stacked.ggt"
    try:
        stacked, _ = load_container(asm / "stacked.ggt")
    except ContainerError as e:
        _fail(entries, rel, str(e))
        return entries
    checks = {"shape": stacked.shape == (fp, h, w, 3 * c)}
    order = layout.get("channel_blocks", ["noise", "condition", "structure"])
    if checks["shape"] and len(blocks) == 3:
        for k, block in enumerate(order):
            sl = stacked[..., k * c:(k + 1) * c]
            checks[f"slice_{block}"] = bool(np.array_equal(sl, blocks[block]))
    entries.append(ArtifactStatus(rel, all(checks.values()), checks))

    # Z_T must be the latent warped noise itself
    noise_path = out / "noise_latent.ggt"
    if noise_path.is_file() and "noise" in blocks:
        try:
            eps, _ = load_container(noise_path)
            same = bool(np.array_equal(eps, blocks["noise"]))
            entries.append(ArtifactStatus("assemble/zt.ggt == noise_latent.ggt",
                                          same, {"bit_equal": same}))
        except ContainerError as e:
            _fail(entries, "noise_latent.ggt", str(e))
    return entries
