"""Exhaustive verification suites shared by the CLI, the test-suite and the scripts.

Each suite builds a deterministic list of picklable cases and a module-level
checker; ``run_suite`` evaluates them (optionally across worker processes) and
keeps the first counterexample.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .characters import (bar_involution, check_join_identity, check_restriction_filtration,
                         extremal_word, specht_character)
from .cuspidal import cuspidal_shape, cuspidal_table, is_cuspidal_character, join_pair, minimal_pair_identity
from .diagrams import (SkewShape, content, hook_eta, is_minimal_skew, is_skew_hook, partitions_of,
                       shape_minus, shape_plus, tight_skew_diagrams)
from .garnir import check_garnir_degree_lemma, check_garnir_set, garnir_nodes
from .laurent import quantum_factorial
from .preorders import PreorderSpec, check_balanced, check_convexity, minimal_pairs
from .root_system import PositiveRoot, RootVector, positive_roots_up_to_height
from .tableaux import check_degree_wiring


@dataclass
class SweepConfig:
    max_size: int = 6
    max_height: int = 8
    es: tuple[int, ...] = (2, 3)
    threads: int = 1

    @classmethod
    def from_env(cls, **kw) -> SweepConfig:
        cfg = cls(**kw)
        raw = os.environ.get("SPECHT_THREADS")
        if raw and raw.isdigit() and int(raw) > 0:
            cfg.threads = int(raw)
        return cfg


@dataclass
class SweepResult:
    suite: str
    cases: int
    failures: int = 0
    first_failure: Optional[str] = None
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def summary(self) -> str:
        if self.passed:
            return f"PASS ({self.cases} cases)"
        if self.cases == 0:
            return "FAIL (no cases)"
        return f"FAIL ({self.failures}/{self.cases} cases; first: {self.first_failure})"

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "failures": self.failures,
                "first_failure": self.first_failure, "passed": self.passed}


def _run(suite: str, cases: list, check: Callable, threads: int = 1) -> SweepResult:
    t0 = time.perf_counter()
    if threads > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            verdicts = list(pool.map(check, cases, chunksize=max(1, len(cases) // (8 * threads))))
    else:
        verdicts = [check(c) for c in cases]
    bad = [c for c, ok in zip(cases, verdicts) if not ok]
    return SweepResult(suite, len(cases), len(bad), _describe(bad[0]) if bad else None,
                       time.perf_counter() - t0)


def _describe(case) -> str:
    return " ".join(str(x) for x in case) if isinstance(case, tuple) else str(case)


# -- shape universes ---------------------------------------------------------

def level1_shapes(max_size: int, e: int, charges=None):
    """Every tight level-1 skew diagram with at most ``max_size`` nodes, at each charge."""
    ks = range(e) if charges is None else charges
    for n in range(1, max_size + 1):
        for lam, mu in tight_skew_diagrams(n):
            for k in ks:
                yield SkewShape.level1(lam, mu, k, e)


def joinable_pairs(max_size: int, e: int):
    """Joinable two-component shapes built from tight components, over every charge of the second."""
    tight = {n: list(tight_skew_diagrams(n)) for n in range(1, max_size)}
    for n1 in range(1, max_size):
        for n2 in range(1, max_size + 1 - n1):
            for l1, m1 in tight[n1]:
                for l2, m2 in tight[n2]:
                    for k2 in range(e):
                        k1 = (k2 + len(l1) + l2[0] - 1) % e
                        yield SkewShape((l1, l2), (m1, m2), (k1, k2), e)


# -- checkers (module level so worker processes can import them) --------------

def _garnir_case(case) -> bool:
    shape, node = case
    return check_garnir_degree_lemma(shape, node) and check_garnir_set(shape, node)


def _filtration_case(case) -> bool:
    lam, charge, e, alpha, beta = case
    return check_restriction_filtration(lam, charge, e, RootVector(alpha), RootVector(beta))


def _join_case(shape) -> bool:
    return check_join_identity(shape)


def _wiring_case(shape) -> bool:
    return check_degree_wiring(shape)


def _cuspidal_case(case) -> bool:
    e, root = case
    p = PreorderSpec.erow(e)
    r = cuspidal_shape(root, p)
    ch = r.character
    if content(r.shape) != root.vector(e) or not (is_skew_hook(r.shape) and is_minimal_skew(r.shape)):
        return False
    x = extremal_word(ch)
    factorials = quantum_factorial(0)
    for _, n in x.runs:
        factorials = factorials * quantum_factorial(n)
    return is_cuspidal_character(ch, root, p) and bar_involution(ch) == ch and x.dim == factorials


def _pair_case(case) -> bool:
    e, rho, beta, gamma = case
    return minimal_pair_identity(rho, beta, gamma, PreorderSpec.erow(e)).ok


def _pair_choice_case(case) -> bool:
    e, rho = case
    p = PreorderSpec.erow(e)
    chosen = cuspidal_shape(rho, p)
    for mp in minimal_pairs(p, rho):
        if mp.real:
            alt = join_pair(rho, p, mp)
            if alt is not None and (alt.shape, alt.shift) != (chosen.shape, chosen.shift):
                return False
    return True


# -- suites -------------------------------------------------------------------

def garnir_suite(cfg: SweepConfig) -> SweepResult:
    cases = [(s, a) for e in cfg.es for s in level1_shapes(cfg.max_size, e) for a in garnir_nodes(s)]
    return _run("garnir", cases, _garnir_case, cfg.threads)


def filtration_suite(cfg: SweepConfig, charges=(0, 1)) -> SweepResult:
    cases = []
    for e in cfg.es:
        for n in range(1, cfg.max_size + 1):
            for lam in partitions_of(n):
                for k in charges:
                    total = content(SkewShape.level1(lam, (), k, e)).coeffs
                    for alpha in itertools.product(*(range(c + 1) for c in total)):
                        beta = tuple(t - a for t, a in zip(total, alpha))
                        cases.append(((lam,), (k,), e, alpha, beta))
    return _run("filtration", cases, _filtration_case, cfg.threads)


def join_suite(cfg: SweepConfig) -> SweepResult:
    cases = [s for e in cfg.es for s in joinable_pairs(cfg.max_size, e)]
    return _run("join", cases, _join_case, cfg.threads)


def wiring_suite(cfg: SweepConfig) -> SweepResult:
    cases = [s for e in cfg.es for s in level1_shapes(cfg.max_size, e)]
    return _run("wiring", cases, _wiring_case, cfg.threads)


def convexity_suite(cfg: SweepConfig) -> SweepResult:
    cases = [PreorderSpec.erow(e) for e in cfg.es]
    return _run("convexity", cases,
                lambda p: check_convexity(p, cfg.max_height) and check_balanced(p, cfg.max_height))


def cuspidality_suite(cfg: SweepConfig) -> SweepResult:
    cases = [(e, r.root) for e in cfg.es for r in cuspidal_table(PreorderSpec.erow(e), cfg.max_height)]
    return _run("cuspidality", cases, _cuspidal_case, cfg.threads)


def pairs_suite(cfg: SweepConfig) -> SweepResult:
    cases = []
    for e in cfg.es:
        p = PreorderSpec.erow(e)
        for rho in positive_roots_up_to_height(cfg.max_height, e):
            if rho.is_real and rho.height(e) > 1:
                cases += [(e, rho, mp.beta, mp.gamma) for mp in minimal_pairs(p, rho) if mp.real]
    return _run("pairs", cases, _pair_case, cfg.threads)


def pair_choice_suite(cfg: SweepConfig) -> SweepResult:
    cases = [(e, r) for e in cfg.es for r in positive_roots_up_to_height(cfg.max_height, e) if r.is_real]
    return _run("pair-choice", cases, _pair_choice_case, cfg.threads)


def minuscule_ok(e: int, i: int) -> bool:
    """Word structure of the character of ``eta_i``."""
    from math import comb
    ch = specht_character(hook_eta(e, i))
    count = 0
    for w, poly in ch.items():
        exps = dict(poly.items())
        if w[0] != 0 or any(c != 1 for c in exps.values()) or len(exps) != 1:
            return False
        (deg,) = exps
        if deg not in (0, 1):
            return False
        if i > 1 and (deg == 1) != (w[-1] == i - 1):
            return False
        count += 1
    return count == comb(e - 1, i - 1)


def minuscule_suite(es=(2, 3, 4, 5)) -> SweepResult:
    cases = [(e, i) for e in es for i in range(1, e)]
    return _run("minuscule", cases, lambda c: minuscule_ok(*c))


def catalogue_ok(e: int, m: int, i: int) -> bool:
    """Shapes, shifts and the extremal word of ``m*delta ± alpha_i``."""
    p = PreorderSpec.erow(e)
    plus = cuspidal_shape(PositiveRoot.plus(m, i), p)
    if (plus.shape, plus.shift) != (shape_plus(m, i, e), 0):
        return False
    if m >= 1:
        minus = cuspidal_shape(PositiveRoot.minus(m, i), p)
        if (minus.shape, minus.shift) != (shape_minus(m, i, e), 1 - m):
            return False
    order = list(range(i)) + list(range(e - 1, i, -1)) + [i]
    x = extremal_word(plus.character, order)
    runs = [(0, m)] + [(j, m) for j in range(1, i)] + [(j, m) for j in range(e - 1, i, -1)] + [(i, m + 1)]
    runs = tuple((a, n) for a, n in runs if n)
    want_dim = quantum_factorial(m) ** (e - 1) * quantum_factorial(m + 1)
    top = (e - 1) * (m - 1) * m // 2 + m * (m + 1) // 2
    return x.runs == runs and x.dim == want_dim and x.dim.max_degree() == top


def catalogue_suite(es=(2, 3), max_m: int = 2) -> SweepResult:
    cases = [(e, m, i) for e in es for m in range(max_m + 1) for i in range(1, e)]
    return _run("catalogue", cases, lambda c: catalogue_ok(*c))


SUITES = {
    "garnir": garnir_suite,
    "filtration": filtration_suite,
    "join": join_suite,
    "wiring": wiring_suite,
    "convexity": convexity_suite,
    "cuspidality": cuspidality_suite,
    "pairs": pairs_suite,
    "pair-choice": pair_choice_suite,
    "minuscule": lambda cfg: minuscule_suite(),
    "catalogue": lambda cfg: catalogue_suite(cfg.es),
}
