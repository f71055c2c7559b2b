import os
from pathlib import Path

import pytest

import sl3qt

ROOT = Path(os.environ.get("SL3QT_ROOT", Path(__file__).resolve().parents[2]))
DATA = ROOT / "data"
GOLDEN = ROOT / "tests" / "golden"


def read(name):
    return (DATA / name).read_text()


def test_single_triangle_value():
    quad = read("quadrilateral.tri")
    assert sl3qt.trace(quad, read("case1.web")) == ["+w^{0} X1^{1/3} X2^{2/3} X5^{2/3} X6^{1/3} X7^{2/3}"]
    assert sl3qt.trace(quad, read("case1.web"), 2, 1) == ["0"]


def test_mutation_twice_is_identity():
    seed = read("seed_cycle3.seed")
    assert sl3qt.mutate(seed, ["2", "2"]) == sl3qt.mutate(seed, [])
    with pytest.raises(ValueError):
        sl3qt.mutate(read("seed_four.seed"), ["5"])


def test_pentagon_relation():
    assert sl3qt.consistency(read("seed_a2.seed"), "pentagon:v,w")


def test_flip_check_crossing_web():
    ok, report = sl3qt.flip_check(read("quadrilateral.tri"), "e", read("case3.web"), 1, 2)
    assert ok
    assert "classical, before flip" in report


def test_table_matches_golden():
    assert sl3qt.step1_table(str(DATA), 3) == (GOLDEN / "table_case3.txt").read_text()


def test_verify_all_passes():
    results = sl3qt.verify_all(str(DATA), str(GOLDEN), 20)
    assert results and all(r["passed"] for r in results)


def test_bad_input_raises():
    with pytest.raises(sl3qt.InputError):
        sl3qt.trace(read("bad_valence2.tri"), read("case1.web"))
