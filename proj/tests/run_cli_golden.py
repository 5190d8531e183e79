#!/usr/bin/env python3
"""Golden-file checks for the command line tool.

Usage: run_cli_golden.py /path/to/sleib [--regen]

Each case runs the binary with fixed arguments and compares stdout (byte for
byte) and the exit code against tests/golden/<name>.txt.  --regen rewrites the
golden files from the current behavior.
"""

import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).resolve().parent / "golden"
POINT_FILE = str(GOLDEN / "point_dim5.json")

CASES = [
    ("verify_dim5", 0, ["verify", "L(1,0,3)"]),
    ("verify_json", 0, ["--json", "verify", "L(1,0,3)"]),
    ("table_dim6", 0, ["table", "L(1,2,0,3)"]),
    ("transform_both", 0, ["transform", "L(1,0,3)", "--triple", "1,0,2"]),
    ("transform_closed_json", 0,
     ["--json", "transform", "L(1,2,3,4,5)", "--triple", "2,1,3", "--mode", "closed"]),
    ("transform_printed_rho", 2,
     ["transform", "L(1,2,3,4,5)", "--triple", "2,1,3", "--variant", "printed-rho"]),
    ("classify_dim5", 0, ["classify", "L(2,0,12)"]),
    ("classify_json", 0, ["--json", "classify", "L(1,0,3)"]),
    ("classify_file_input", 0, ["classify", POINT_FILE]),
    ("classify_uncovered", 2, ["classify", "L(1,0,2)"]),
    ("classify_dim8_no_invariant", 2, ["classify", "L(0,0,0,1,0,1)"]),
    ("iso_witness", 0, ["iso", "L(1,0,3)", "L(2,0,12)", "--witness"]),
    ("iso_repeated_classes", 0, ["iso", "L(0,0,1,0,1)", "L(0,0,1,1,1)", "--witness"]),
    ("enumerate_dim7", 0, ["enumerate", "--dim", "7"]),
    ("count_dim12", 0, ["count", "--dim", "12"]),
    ("random_dim6", 0, ["random", "--dim", "6", "--count", "3", "--seed", "11"]),
    ("audit_dim5", 2,
     ["audit", "--dim", "5", "--samples", "6", "--triples", "4", "--seed", "3"]),
    ("audit_dim6_json", 0,
     ["--json", "audit", "--dim", "6", "--samples", "5", "--triples", "4", "--seed", "3"]),
]


def main():
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    cli = sys.argv[1]
    regen = "--regen" in sys.argv[2:]

    failures = []
    for name, want_rc, args in CASES:
        proc = subprocess.run([cli] + args, capture_output=True, text=True)
        golden = GOLDEN / f"{name}.txt"
        if regen:
            golden.write_text(proc.stdout)
            print(f"regenerated {golden.name} (exit {proc.returncode})")
            if proc.returncode != want_rc:
                failures.append(f"{name}: exit {proc.returncode}, manifest says {want_rc}")
            continue
        if proc.returncode != want_rc:
            failures.append(f"{name}: exit {proc.returncode}, expected {want_rc}")
        expected = golden.read_text()
        if proc.stdout != expected:
            failures.append(f"{name}: output differs from {golden.name}")
            for i, (a, b) in enumerate(zip(expected.splitlines(), proc.stdout.splitlines())):
                if a != b:
                    failures.append(f"  line {i + 1}: golden {a!r} vs got {b!r}")
                    break
    if failures:
        print("\n".join(failures))
        sys.exit(1)
    if not regen:
        print(f"{len(CASES)} golden cases ok")


if __name__ == "__main__":
    main()
