"""geoguide-adapter: validate a geoguide export directory.

Usage: geoguide-adapter validate <dir> [--report out.json]
Exit code 0 when every check passes, 1 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .validate import validate_run


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="geoguide-adapter")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("validate", help="check an export directory")
    p.add_argument("directory")
    p.add_argument("--report", default=None, help="also write the report JSON here")
    args = ap.parse_args(argv)

    report = validate_run(args.directory)
    text = json.dumps(report.to_dict(), indent=1, sort_keys=True)
    print(text)
    if args.report:
        Path(args.report).write_text(text + "\n")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
