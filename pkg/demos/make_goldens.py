"""Regenerate the committed golden JSON reports under tests/goldens/.

Run from the repository root:  python demos/make_goldens.py
Every file is produced through the ordinary CLI path, so the goldens stay
byte-identical with what `crownorbits classify --format json` emits.
"""

from __future__ import annotations

import pathlib
import sys

from crownorbits.cli import main

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent.parent / "tests" / "goldens"

CLASSIFY = [
    "sp(2,R)", "sp(3,R)", "sp(2,C)", "sp(2,2)", "su(2,2)", "su(3,3)", "so*(8)",
    "sl(3,R)", "sl(4,R)", "sl(5,R)", "sl(3,C)", "sl(3,H)",
    "so(3,3)", "so(4,4)", "so(6,C)", "so(3,5)", "so(3,7)", "so(7,C)", "so(5,C)",
    "so(1,3)", "so(1,4)", "so(2,3)", "so(2,4)", "so(2,5)",
    "e6(6)", "e7(7)", "e6C", "e7C",
]
XI0 = ["so(3,3)", "so(4,4)", "so(3,5)", "so(6,C)", "so(7,C)"]
JORDAN = [("symm", 2), ("symm", 3), ("symm", 4), ("symm", 5),
          ("herm", 2), ("herm", 3), ("herm", 4)]


def slug(name: str) -> str:
    return (
        name.replace("(", "_")
        .replace(")", "")
        .replace(",", "_")
        .replace("*", "star")
        .replace("-", "m")
    )


def golden_jobs():
    """(filename, argv) pairs for every golden report."""
    jobs = []
    for name in CLASSIFY:
        jobs.append((f"classify-{slug(name)}.json",
                     ["classify", name, "--format", "json"]))
    for name in XI0:
        jobs.append((f"xi0-{slug(name)}.json",
                     ["classify", name, "--xi0", "--format", "json"]))
    for kind, n in JORDAN:
        jobs.append((f"jordan-{kind}_{n}.json",
                     ["jordan", kind, str(n), "--format", "json"]))
    return jobs


def regenerate() -> int:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for fname, argv in golden_jobs():
        path = GOLDEN_DIR / fname
        rc = main(argv + ["--out", str(path)])
        marker = "" if rc == 0 else f"  (exit {rc}: has unidentified components)"
        print(f"wrote {path.name}{marker}")
    return 0


if __name__ == "__main__":
    sys.exit(regenerate())
