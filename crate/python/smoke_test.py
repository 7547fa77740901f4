#!/usr/bin/env python3
"""Smoke test for the charfact_py extension module.

Builds nothing itself: expects `cargo build -p charfact-py` (or --release)
to have produced the cdylib, which is copied next to a temp dir under the
importable module name.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[1]


def locate_library() -> pathlib.Path:
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libcharfact_py.so", "libcharfact_py.dylib", "charfact_py.dll")
    ]
    for c in candidates:
        if c.exists():
            return c
    sys.exit("build the extension first: cargo build -p charfact-py")


def main() -> None:
    lib = locate_library()
    staging = pathlib.Path(tempfile.mkdtemp(prefix="charfact_py_"))
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, staging / f"charfact_py{suffix}")
    sys.path.insert(0, str(staging))

    import charfact_py as cf

    # partition combinatorics
    lam = cf.Partition("5,2,2,1,1")
    assert str(lam.conjugate()) == "5,3,1,1,1"
    assert lam.beta_set(6) == [10, 6, 5, 3, 2, 0]
    assert lam.residue_counts(6, 3) == [3, 1, 2]
    assert lam.sigma_sign(6, 3) == 1
    assert cf.Partition("4,2,2,1,1").conjugate() == cf.Partition("5,3,1,1")

    core = lam.t_core(3)
    quo = lam.t_quotient(3)
    assert lam.size() == core.size() + 3 * sum(q.size() for q in quo)
    assert cf.littlewood_inverse(core, quo, 3) == lam

    assert cf.Partition("9,8,6,5,4,4,3,2,2,1").is_symplectic_core(5)
    composite = cf.concat_neg(cf.Partition("4,1"), cf.Partition("2,1,1"), 7)
    assert composite == cf.Partition("6,3,2,2,1,1,0")  # canonical form drops the 0
    assert str(cf.staircase(3)) == "3,2,1"
    assert cf.Partition([3, 2, 1]).is_self_conjugate()

    # characters
    assert cf.character("schur", "2", "X(1) twist(2)") == "x1^2"
    assert cf.character("sp", "", "X(2)") == "1"
    assert cf.character("so-odd", "1", "X(1)") == "x1 + 1 + x1^-1"

    # verification
    report = cf.verify("SCHUR_FAC", **{"lambda": "2"}, t=2, n=1)
    assert report["verdict"] == "Match" and report["lhs"] == "x1^2"
    report = cf.verify("SCHUR_FAC", **{"lambda": "1"}, t=2, n=1)
    assert report["verdict"] == "NotApplicableLhsZero"

    summary = cf.sweep("UNIV_ROOTS_SP", "size<=6;t=2,3")
    assert summary["mismatches"] == 0 and summary["matches"] > 0

    assert "ROOTS_OF_UNITY" in cf.theorems()
    print("charfact_py smoke test: ok")


if __name__ == "__main__":
    main()
