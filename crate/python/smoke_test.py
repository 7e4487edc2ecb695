#!/usr/bin/env python3
"""Smoke test for the schroder_lab_py extension module.

Build the module first:

    cargo build -p schroder-lab-py            # or --release

then run this script; it locates the cdylib under target/, loads it, and
checks a handful of known values.
"""

import importlib.util
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libschroder_lab_py.so", "schroder_lab_py.dll", "libschroder_lab_py.dylib")
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("extension not built; run: cargo build -p schroder-lab-py")
    # Python import needs the module name as the file stem.
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="schroder_lab_py_"))
    target = tmp / "schroder_lab_py.so"
    shutil.copy2(built, target)
    spec = importlib.util.spec_from_file_location("schroder_lab_py", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    lab = load_module()

    # Counting anchors.
    assert lab.count_schroder(2, 1, 2) == 4
    assert lab.count_schroder(5, 3, 2) == 660
    assert lab.count_fuss_catalan(3, 2) == 12
    assert lab.count_parking_closed(2, 1, 2) == 8
    assert lab.count_parking_closed(3, 3, 1) == 16
    assert lab.brute_count_parking("integer-slope", 2, 1, 2) == 8

    # Enumeration and the unit-fraction correspondence.
    ps = lab.paths("integer-slope", 2, 1, 2)
    assert len(ps) == 4 and ps[0][0] == "DRRG"
    assert len(lab.paths("unit-fraction", 2, 2, 2)) == 4
    assert lab.paths("unit-fraction", 2, 3, 2) == []  # r does not divide d

    # Statistics: Sch_{2,1}^1 under the line-area reading.
    recs = lab.path_stats(2, 1, 1, "schroder-r1")
    assert sorted((a, dv) for (_, a, dv) in recs) == [(0, 0), (0, 1), (1, 0)]

    # Parking factorization of the worked example.
    seq = [(0, True), (4, False), (0, False), (4, False), (2, True)]
    word, sigma = lab.factor_parking(seq, "integer-slope", 5, 3, 2)
    assert sigma == [3, 1, 5, 2, 4]
    assert word == "DGGDDRRRRRR"
    assert lab.factor_parking([(1, False), (1, False), (2, False)], "integer-slope", 3, 3, 1) is None

    # Recursive formulas.
    assert lab.formula_g(3, 2, 1, 1, 2, 1) == 20
    assert lab.formula_psch(2, 2, 2) == 30
    assert lab.formula_psch(2, 2, 2, split="literal") == 6  # recorded defect
    assert lab.formula_chsch(2, 0, 2, 4) == 6

    # Verifier: nothing proved may fail.
    counts, sound = lab.verify_all(max_n=2, max_r=2)
    assert sound, counts
    assert counts.get("FAIL", 0) == 0 and counts.get("SKIPPED", 0) == 0

    print("smoke test: PASS")


if __name__ == "__main__":
    main()
