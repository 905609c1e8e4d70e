#!/usr/bin/env python3
"""Regenerate the committed golden trace from a canonical run.

Usage:
    build/tools/slosh-clf simulate configs/canonical.cfg --out out/canonical
    python3 tools/make_golden_trace.py out/canonical/trace.csv \
        tests/golden/canonical_trace.csv

Keeps every 16th sample (plus the header) so the fixture stays small while
still pinning the whole trajectory.
"""

import sys


def main() -> int:
    if len(sys.argv) != 3:
        print(__doc__)
        return 2
    src, dst = sys.argv[1], sys.argv[2]
    with open(src) as f:
        lines = f.read().splitlines()
    header, rows = lines[0], lines[1:]
    kept = rows[::16]
    with open(dst, "w") as f:
        f.write(header + "\n")
        f.write("\n".join(kept) + "\n")
    print(f"kept {len(kept)} of {len(rows)} samples -> {dst}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
