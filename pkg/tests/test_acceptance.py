"""The eleven acceptance criteria, one test each.

Every test records a PASS/FAIL line that pytest prints in a closing
"acceptance criteria" section.  Run this file directly to get just those lines:

    python3 tests/test_acceptance.py
"""
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from acceptance_log import record  # noqa: E402

from skewspecht.characters import GradedCharacter, bar_involution  # noqa: E402
from skewspecht.cuspidal import cuspidal_shape  # noqa: E402
from skewspecht.diagrams import Node, SkewShape  # noqa: E402
from skewspecht.garnir import check_garnir_degree_lemma, garnir_belt, garnir_set, garnir_tableau  # noqa: E402
from skewspecht.preorders import PreorderSpec, check_balanced, check_convexity  # noqa: E402
from skewspecht.root_system import parse_root  # noqa: E402
from skewspecht.sweeps import (SweepConfig, catalogue_suite, cuspidality_suite, filtration_suite,  # noqa: E402
                               garnir_suite, join_suite, minuscule_suite, pairs_suite, wiring_suite)


def _sweep(number, title, result):
    record(number, title, result.passed, f"{result.summary()}, {result.seconds:.1f}s")
    assert result.passed, result.summary()


def test_criterion_01_garnir_running_example():
    s = SkewShape.level1((11, 10, 7, 2, 2), (7, 4, 3, 1), 1, 2)
    a = Node(2, 6, 1)
    g = garnir_belt(s, a)
    got = (len(g.belt), g.k, g.f, len(garnir_set(s, a)), garnir_tableau(s, a)[a], check_garnir_degree_lemma(s, a))
    want = (8, 3, 2, 3, 9, True)
    record(1, "Garnir running example", got == want, f"belt, k, f, |Gar|, g(A), lemma = {got}")
    assert got == want


def test_criterion_02_garnir_sweep():
    _sweep(2, "Garnir degree lemma and set equality, <= 8 nodes, e in {2,3}",
           garnir_suite(SweepConfig.from_env(max_size=8, es=(2, 3))))


def test_criterion_03_restriction_filtration():
    _sweep(3, "restriction filtration, <= 6 nodes, e in {2,3}, charge 0 and 1",
           filtration_suite(SweepConfig.from_env(max_size=6, es=(2, 3)), charges=(0, 1)))


def test_criterion_04_join_identity():
    _sweep(4, "join identity and degree bijection, <= 8 nodes, e in {2,3}",
           join_suite(SweepConfig.from_env(max_size=8, es=(2, 3))))


def test_criterion_05_degree_wiring():
    _sweep(5, "degree-wiring consistency, <= 8 nodes, e in {2,3}",
           wiring_suite(SweepConfig.from_env(max_size=8, es=(2, 3))))


def test_criterion_06_minuscule():
    _sweep(6, "minuscule characters, e in {2,3,4,5}", minuscule_suite((2, 3, 4, 5)))


def test_criterion_07_catalogue():
    _sweep(7, "cuspidal catalogue for m*delta +- alpha_i, e in {2,3}, m <= 2", catalogue_suite((2, 3), 2))


def test_criterion_08_cuspidality():
    _sweep(8, "cuspidality and bar invariance, height <= 10, e in {2,3,4}",
           cuspidality_suite(SweepConfig.from_env(max_height=10, es=(2, 3, 4))))


def test_criterion_09_minimal_pairs():
    _sweep(9, "minimal-pair identity, height <= 8, e in {2,3}",
           pairs_suite(SweepConfig.from_env(max_height=8, es=(2, 3))))


def test_criterion_10_preorder_health():
    verdicts = {e: check_convexity(PreorderSpec.erow(e), 12) and check_balanced(PreorderSpec.erow(e), 12)
                for e in (2, 3, 4)}
    ok = all(verdicts.values())
    record(10, "e-row preorder convex and balanced to height 12, e in {2,3,4}", ok, str(verdicts))
    assert ok


def test_criterion_11_worked_case():
    r = cuspidal_shape(parse_root("a1+a2", 3), PreorderSpec.erow(3))
    ch = r.character
    ok = (r.shape == SkewShape.level1((1, 1), (), 2, 3) and r.shift == 0
          and ch == GradedCharacter.word((2, 1), 3) and bar_involution(ch) == ch)
    record(11, "cuspidal shape of a1+a2 at e=3", ok, f"{r.shape}, shift {r.shift}, character {ch}")
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
