"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <n> <name>: PASS|FAIL`` line; run with
``pytest tests/test_acceptance.py -s`` to see them.
"""

import json
import subprocess
import sys
import time
from pathlib import Path

from urelset import naturals
from urelset.checker import UniverseSpec, enumerate_objects, run_suite
from urelset.dsl import ParseError, parse_source
from urelset.dsl.repl import transcript
from urelset.naturals import Ordering, compare, from_int, to_int
from urelset.objects import (
    Individual,
    Set,
    is_transitive,
    member,
    regularity_witness,
)
from urelset.ordinals import SymOrd, add_nat_ord, add_ord_nat, is_ordinal_first_omega, omega

from .test_checker import BrokenInjectivity, NoEmptyGuard, NoEmptyGuardSpecification

GOLDEN = Path(__file__).parent / "golden"


def verdict(n, name, ok, detail=""):
    line = f"ACCEPTANCE {n} {name}: {'PASS' if ok else 'FAIL'}"
    print(line + (f" ({detail})" if detail else ""), flush=True)
    assert ok, detail


def test_1_peano_suite():
    t0 = time.perf_counter()
    res = subprocess.run(
        [sys.executable, "-m", "urelset", "check", "--suite", "peano", "--max-n", "10", "--json"],
        capture_output=True, text=True,
    )
    dt = time.perf_counter() - t0
    data = json.loads(res.stdout)
    counts = [o["instances"] for o in data["obligations"]]
    passed = all(o["status"] == "pass" for o in data["obligations"])
    ok = res.returncode == 0 and passed and len(counts) == 5 and min(counts) >= 10 and dt < 5.0
    verdict(1, "peano suite", ok, f"{len(counts)} obligations, min instances {min(counts)}, {dt:.2f}s")


def _plain(x):
    if isinstance(x, Individual):
        return x.name
    return frozenset(_plain(m) for m in x.members)


def test_2_recognizer_equivalence(alpha):
    universe = enumerate_objects(UniverseSpec())
    plain = {_plain(x): x for x in universe}
    # oracle: S -> S | {S} on bare frozensets, starting from {p, q}
    oracle, s = [], frozenset({"p", "q"})
    while s in plain:
        oracle.append(s)
        s = s | {s}
    oracle_set = set(oracle)
    mismatches = [x for x in universe if naturals.is_number(x, alpha) != (_plain(x) in oracle_set)]
    agree = all(from_int(k, alpha).value is plain[o] for k, o in enumerate(oracle))
    ok = not mismatches and agree and len(oracle) >= 2
    verdict(2, "recognizer equivalence", ok,
            f"{len(universe)} objects, numbers 0..{len(oracle) - 1}, {len(mismatches)} mismatches")


def test_3_arithmetic_homomorphism(alpha):
    t0 = time.perf_counter()
    nums = [from_int(k, alpha) for k in range(9)]
    bad = []
    for a in nums:
        for b in nums:
            i, j = to_int(a), to_int(b)
            if to_int(naturals.add(a, b)) != i + j or to_int(naturals.mul(a, b)) != i * j:
                bad.append((i, j))
    zero, one = nums[0], nums[1]
    identities = naturals.add(zero, one) == one and all(
        naturals.add(a, zero) == a and naturals.mul(a, one) == naturals.add(zero, a) for a in nums
    )
    dt = time.perf_counter() - t0
    ok = not bad and identities and dt < 10.0
    verdict(3, "arithmetic homomorphism", ok, f"81 pairs, {len(bad)} bad, identities {identities}, {dt:.2f}s")


def test_4_trichotomy(alpha):
    nums = [from_int(k, alpha) for k in range(13)]
    expected = {-1: Ordering.LESS, 0: Ordering.EQUAL, 1: Ordering.GREATER}
    bad = []
    for a in nums:
        for b in nums:
            i, j = to_int(a), to_int(b)
            holds = [naturals.lt(a, b), a == b, naturals.lt(b, a)]
            if sum(holds) != 1 or compare(a, b) is not expected[(i > j) - (i < j)]:
                bad.append((i, j))
    verdict(4, "trichotomy", not bad, f"169 pairs, {len(bad)} bad")


def test_5_structure(alpha):
    nums = [from_int(k, alpha) for k in range(13)]
    counts = all(len(n.value.members) == k + 2 for k, n in enumerate(nums))
    transitive = all(
        is_transitive(n.value) and all(is_transitive(m) for m in n.value.members) for n in nums
    )
    verdict(5, "structural facts", counts and transitive, f"counts {counts}, transitive {transitive}")


def test_6_regularity():
    universe = enumerate_objects(UniverseSpec())
    sets = [x for x in universe if isinstance(x, Set)]
    thm_bad = [
        s for s in sets
        if is_transitive(s) and any(isinstance(m, Set) for m in s.members)
        and not any(
            isinstance(v, Set) and all(isinstance(u, Individual) for u in v.members)
            for v in s.members
        )
    ]
    checked, reg_bad = 0, []
    for s in sets:
        if not any(isinstance(m, Set) for m in s.members):
            continue
        checked += 1
        v = regularity_witness(s)
        if not (member(v, s) and isinstance(v, Set)) or any(
            isinstance(u, Set) and member(u, v) for u in s.members
        ):
            reg_bad.append(s)
    ok = not thm_bad and not reg_bad and checked > 0
    verdict(6, "regularity", ok, f"{checked} witnesses, {len(thm_bad) + len(reg_bad)} failures")


def test_7_ordinals():
    w = omega()
    absorb = all(add_nat_ord(k, w) == w for k in range(1, 11))
    shift = all(add_ord_nat(w, k) == SymOrd(1, k) != w for k in range(1, 11))
    grid = [SymOrd(m, n) for m in range(4) for n in range(11)]
    first = {b for b in grid if is_ordinal_first_omega(b)}
    exact = first == {SymOrd(1, n) for n in range(11)}
    ok = absorb and shift and exact
    verdict(7, "ordinal layer", ok, f"absorb {absorb}, shift {shift}, first-omega exact {exact}")


def test_8_dsl():
    lines = (GOLDEN / "session.in").read_text(encoding="utf-8").splitlines()
    golden = (GOLDEN / "session.out").read_bytes()
    same = transcript(lines).encode("utf-8") == golden
    res = subprocess.run([sys.executable, "-m", "urelset", "eval", "-e", "0 + 1"],
                         capture_output=True, text=True)
    eval_ok = res.returncode == 0 and res.stdout == "1\n"
    try:
        parse_source("{}")
        empty_rejected = False
    except ParseError:
        empty_rejected = True
    ok = len(lines) >= 20 and same and eval_ok and empty_rejected
    verdict(8, "dsl", ok, f"{len(lines)} golden lines identical {same}, eval {eval_ok}, "
                          f"empty literal rejected {empty_rejected}")


def test_9_mutations():
    inj = {o.id: o for o in run_suite("peano", max_n=10, kernel=BrokenInjectivity()).obligations}
    inj_ok = (not inj["peano.successor-injective"].passed
              and bool(inj["peano.successor-injective"].counterexample))
    empty_ok = True
    for kernel in (NoEmptyGuard(), NoEmptyGuardSpecification()):
        obs = {o.id: o for o in run_suite("theorems", max_n=4, kernel=kernel).obligations}
        o = obs["axiom.no-empty-set"]
        empty_ok &= (not o.passed) and bool(o.counterexample)
    verdict(9, "checker integrity", inj_ok and empty_ok,
            f"injectivity caught {inj_ok}, empty-set guard caught {empty_ok}")
