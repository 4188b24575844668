"""Validation and re-layout of geoguide export directories.

Consumes only the documented on-disk formats (GGT1 containers, run.json,
layout.json); performs no inference.
"""

__version__ = "0.1.0"

from .container import ContainerError, load_container
from .validate import AdapterReport, ArtifactStatus, validate_run
