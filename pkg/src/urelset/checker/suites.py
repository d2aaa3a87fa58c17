"""Obligation suites: every axiom, listed property, theorem and arithmetic law,
instantiated exhaustively over a bounded universe or an initial run of numbers.

Each obligation is a function ``ctx -> instances`` that raises
:class:`Counterexample` on the first violation.  Obligations evaluate the
statements through the kernel predicates of ``ctx.k``; the integer and
iterated-successor oracles only appear in obligations of their own.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from ..errors import BudgetExceeded, EmptySet, NoSetMember, NotASet, NoWitness, PreconditionFailed
from ..naturals import Alpha, Nat, Ordering
from ..objects import Obj
from ..ordinals import SymOrd
from .kernel import DEFAULT_KERNEL, Kernel
from .report import Obligation, Report
from .universe import DEFAULT_CAP, UniverseSpec, enumerate_objects

SUITES = ("peano", "theorems", "arith", "ordinal")
MAX_N_LIMIT = 14
# subsets of S are enumerated for S up to this number
SUBSET_LIMIT = 10
EXTREMAL_LIMIT = 8
TRIPLE_LIMIT = 6
ORD_COEFF_LIMIT = 3


class Counterexample(Exception):
    pass


def _fail(*parts) -> None:
    raise Counterexample(", ".join(str(p) for p in parts))


@dataclass
class Context:
    k: Kernel
    spec: UniverseSpec
    max_n: int
    seed: int
    cap: int = DEFAULT_CAP

    @cached_property
    def universe(self) -> list[Obj]:
        return enumerate_objects(self.spec, self.cap, self.k)

    @cached_property
    def sets(self) -> list[Obj]:
        return [s for s in self.universe if not self.k.member(s, s)]

    @cached_property
    def atoms(self) -> list[Obj]:
        return [self.k.mk_individual(a) for a in self.spec.atoms]

    @cached_property
    def alpha(self) -> Alpha:
        p, q = self.atoms[:2]
        return self.k.first_number(p, q)

    @cached_property
    def nats(self) -> list[Nat]:
        return [self.k.from_int(i, self.alpha) for i in range(self.max_n + 1)]

    def bounds(self, domain: str) -> str:
        if domain == "universe":
            return f"U = {len(self.universe)} objects ({self.spec.describe()})"
        if domain == "numbers":
            return f"numbers 0..{self.max_n}"
        if domain == "subsets":
            return f"nonempty subsets V of numbers S <= {min(self.max_n, SUBSET_LIMIT)}"
        if domain == "extremal":
            return f"nonempty subsets V of numbers S <= {min(self.max_n, EXTREMAL_LIMIT)}"
        if domain == "triples":
            return f"numbers 0..{min(self.max_n, TRIPLE_LIMIT)}"
        if domain == "ordinals":
            return f"ω·m+n with m <= {ORD_COEFF_LIMIT}, n <= {self.max_n}"
        return domain


@dataclass(frozen=True)
class _Entry:
    id: str
    anchor: str
    description: str
    domain: str
    fn: Callable[[Context], int]


_REGISTRY: dict[str, list[_Entry]] = {name: [] for name in SUITES}


def obligation(suite: str, id: str, anchor: str, description: str, domain: str):
    def register(fn):
        _REGISTRY[suite].append(_Entry(id, anchor, description, domain, fn))
        return fn

    return register


def obligations_of(suite: str) -> list[_Entry]:
    if suite == "all":
        return [e for name in SUITES for e in _REGISTRY[name]]
    if suite not in _REGISTRY:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    return list(_REGISTRY[suite])


def run_suite(
    name: str,
    spec: UniverseSpec | None = None,
    max_n: int = 10,
    *,
    kernel: Kernel = DEFAULT_KERNEL,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
) -> Report:
    """Run one suite (or ``"all"``) and collect a :class:`Report`."""
    spec = spec or UniverseSpec()
    if not 1 <= max_n <= MAX_N_LIMIT:
        raise ValueError(f"max_n must lie in 1..{MAX_N_LIMIT}, got {max_n}")
    entries = obligations_of(name)
    ctx = Context(kernel, spec, max_n, seed, cap)
    report = Report(
        suite=name,
        bounds={
            "atoms": list(spec.atoms),
            "max_rank": spec.max_rank,
            "max_width": spec.max_width,
            "max_n": max_n,
        },
    )
    start = time.perf_counter()
    for e in entries:
        report.obligations.append(_run_entry(e, ctx))
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def _run_entry(e: _Entry, ctx: Context) -> Obligation:
    description = f"{e.description} [bounds: {ctx.bounds(e.domain)}]"
    try:
        n = e.fn(ctx)
    except Counterexample as exc:
        return Obligation(e.id, description, e.anchor, 0, "fail", str(exc))
    except BudgetExceeded:
        raise
    except Exception as exc:  # a crashing kernel is a failed obligation
        return Obligation(
            e.id, description, e.anchor, 0, "fail", f"{type(exc).__name__}: {exc}"
        )
    if n <= 0:
        return Obligation(e.id, description, e.anchor, 0, "fail", "no instances checked")
    return Obligation(e.id, description, e.anchor, n, "pass", None)


# ---------------------------------------------------------------------------
# shared helpers


def _successor_obj(k: Kernel, x: Obj) -> Obj:
    return k.cup(x, k.pair(x, x))


def _oracle_numbers(ctx: Context, limit: int) -> list[Obj]:
    """Numbers 0..limit by direct member listing: n+1 = members(n) plus n."""
    out = [ctx.alpha.obj]
    while len(out) <= limit:
        prev = out[-1]
        out.append(ctx.k.mk_set(list(prev.members) + [prev]))
    return out


def _induction_battery(ctx: Context, s: Nat) -> list[tuple[str, Callable[[Obj], bool]]]:
    k, alpha = ctx.k, ctx.alpha
    a = alpha.obj
    base = [
        ("is a number", lambda x: k.is_number(x, alpha)),
        ("S <= X", lambda x: k.is_number(x, alpha) and not k.member(x, s.value)),
        ("alpha in X u {X}", lambda x: k.member(a, _successor_obj(k, x))),
        ("X transitive", lambda x: k.is_transitive(x)),
        ("|X| >= |S|", lambda x: len(x.members) >= len(s.value.members)),
    ]
    rng = random.Random(ctx.seed * 1009 + len(s.value.members))
    for _ in range(3):
        c = rng.randint(0, ctx.max_n)
        base.append((f"|X| - 2 >= {c}", lambda x, c=c: len(x.members) - 2 >= c))
    m = rng.randint(2, 4)
    base.append((f"(|X| - 2) mod {m} == 0", lambda x, m=m: (len(x.members) - 2) % m == 0))
    return base


def _spec_battery(ctx: Context) -> list[tuple[str, Callable[[Obj], bool]]]:
    k = ctx.k
    a = ctx.alpha.obj
    rng = random.Random(ctx.seed)
    battery = [
        ("always", lambda u: True),
        ("never", lambda u: False),
        ("is a set", lambda u: not k.member(u, u)),
        ("is an individual", lambda u: k.member(u, u)),
        ("is transitive", lambda u: k.is_transitive(u)),
        ("belongs to alpha", lambda u: k.member(u, a)),
        ("contains alpha", lambda u: k.member(a, u)),
    ]
    for i in range(3):
        chosen = frozenset(o for o in ctx.universe if rng.random() < 0.5)
        battery.append((f"random subset #{i}", lambda u, c=chosen: u in c))
    return battery


def _nonempty_subsets(members) -> list[tuple]:
    out = []
    for r in range(1, len(members) + 1):
        out.extend(itertools.combinations(members, r))
    return out


# ---------------------------------------------------------------------------
# peano


@obligation("peano", "peano.first-number", "there is a first natural number",
            "alpha is a number and alpha <= n for every number n", "numbers")
def _peano_first(ctx: Context) -> int:
    k, alpha = ctx.k, ctx.alpha
    if not k.is_number(alpha.obj, alpha):
        _fail("alpha is not a number", alpha.obj)
    z = k.from_int(0, alpha)
    for n in ctx.nats:
        if not k.leq(z, n):
            _fail(f"0 <= {n!r} fails")
    return 1 + len(ctx.nats)


@obligation("peano", "peano.successor-closure", "every natural number has a successor",
            "succ(n) is a number for every number n", "numbers")
def _peano_closure(ctx: Context) -> int:
    k = ctx.k
    for n in ctx.nats:
        t = k.succ(n)
        if not k.is_number(t.value, ctx.alpha):
            _fail(f"succ({n!r}) = {t.value!r} is not a number")
    return len(ctx.nats)


@obligation("peano", "peano.first-not-successor",
            "the first number is not the successor of a number",
            "succ(Z) != alpha for every number Z; alpha not in alpha", "numbers")
def _peano_no_pred(ctx: Context) -> int:
    k, a = ctx.k, ctx.alpha.obj
    if k.member(a, a):
        _fail("alpha in alpha")
    for z in ctx.nats:
        if k.equal(k.succ(z).value, a):
            _fail(f"succ({z!r}) = alpha")
    return 1 + len(ctx.nats)


@obligation("peano", "peano.successor-injective",
            "equal successors imply equal numbers",
            "succ(S) = succ(U) -> S = U for all numbers S, U", "numbers")
def _peano_injective(ctx: Context) -> int:
    k = ctx.k
    succs = [k.succ(n).value for n in ctx.nats]
    for (s, ss), (u, su) in itertools.product(zip(ctx.nats, succs), repeat=2):
        if k.equal(ss, su) and not k.equal(s.value, u.value):
            _fail(f"succ({s!r}) = succ({u!r}) = {ss!r} but {s!r} != {u!r}")
    return len(ctx.nats) ** 2


def _induction_obligation(ctx: Context) -> int:
    k = ctx.k
    n = 0
    for s, t in itertools.combinations(ctx.nats, 2):
        for label, phi in _induction_battery(ctx, s):
            try:
                rep = k.induction_check(s, t, phi)
            except PreconditionFailed as exc:
                # the reported premise failure must be genuine
                x = exc.witness
                genuine = (not phi(x)) if exc.clause == "a" else (
                    phi(x) and not phi(_successor_obj(k, x)))
                if not genuine:
                    _fail(f"spurious premise failure ({exc.clause}) for {label!r}, "
                          f"S={s!r}, T={t!r}, X={x!r}")
                n += 1
                continue
            if not rep.holds or not phi(t.value):
                _fail(f"induction violated for {label!r}, S={s!r}, T={t!r}")
            n += 1
    return n


obligation("peano", "peano.induction", "principle of mathematical induction",
           "phi(S) and the step inside T imply phi(T), over a predicate battery "
           "and all S < T", "numbers")(_induction_obligation)


# ---------------------------------------------------------------------------
# theorems: equality and axioms


@obligation("theorems", "eq.reflexive", "equality is reflexive", "s = s", "universe")
def _eq_refl(ctx: Context) -> int:
    for s in ctx.universe:
        if not ctx.k.equal(s, s):
            _fail(f"s={s!r}")
    return len(ctx.universe)


@obligation("theorems", "eq.symmetric", "equality is symmetric",
            "s = t -> t = s", "universe")
def _eq_sym(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, t in itertools.product(U, repeat=2):
        if k.equal(s, t) and not k.equal(t, s):
            _fail(f"s={s!r}", f"t={t!r}")
    return len(U) ** 2


@obligation("theorems", "eq.transitive", "equality is transitive",
            "s = t and t = v -> s = v", "universe")
def _eq_trans(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, t in itertools.product(U, repeat=2):
        if not k.equal(s, t):
            continue  # every v is vacuous
        for v in U:
            if k.equal(t, v) and not k.equal(s, v):
                _fail(f"s={s!r}", f"t={t!r}", f"v={v!r}")
    return len(U) ** 3


@obligation("theorems", "eq.extensional", "definition of equality by members",
            "equal(s,t) agrees with the member-by-member comparison", "universe")
def _eq_ext(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, t in itertools.product(U, repeat=2):
        if k.equal(s, t) != k.extensionally_equal(s, t):
            _fail(f"s={s!r}", f"t={t!r}")
    return len(U) ** 2


@obligation("theorems", "eq.subset-antisymmetric", "equality and inclusion",
            "s = t <-> s subset t and t subset s", "universe")
def _eq_subset(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, t in itertools.product(U, repeat=2):
        if k.equal(s, t) != (k.subset(s, t) and k.subset(t, s)):
            _fail(f"s={s!r}", f"t={t!r}")
    return len(U) ** 2


@obligation("theorems", "axiom.substitution", "axiom: no logical equality",
            "s = t and t in v -> s in v", "universe")
def _ax_subst(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, t in itertools.product(U, repeat=2):
        if not k.equal(s, t):
            continue  # every v is vacuous
        for v in U:
            if k.member(t, v) and not k.member(s, v):
                _fail(f"s={s!r}", f"t={t!r}", f"v={v!r}")
    return len(U) ** 3


@obligation("theorems", "axiom.individuals", "axiom for individuals",
            "s in p and p in p -> s = p", "universe")
def _ax_ind(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for p, s in itertools.product(U, repeat=2):
        if k.member(s, p) and k.member(p, p) and not k.equal(s, p):
            _fail(f"p={p!r}", f"s={s!r}")
    return len(U) ** 2


@obligation("theorems", "axiom.pairs", "axiom of pairs",
            "v = pair(s,t) holds s and t, and every u in v is s or t", "universe")
def _ax_pairs(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, t in itertools.product(U, repeat=2):
        v = k.pair(s, t)
        if not (k.member(s, v) and k.member(t, v)):
            _fail(f"s={s!r}", f"t={t!r}", f"pair={v!r}")
        for u in v.members:
            if not (k.equal(u, s) or k.equal(u, t)):
                _fail(f"s={s!r}", f"t={t!r}", f"stray member {u!r}")
    return len(U) ** 2


@obligation("theorems", "axiom.union", "union of an object",
            "u in union(s) <-> exists z (z in s and u in z)", "universe")
def _ax_union(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s in U:
        v = k.union(s)
        for u in v.members:
            if not any(k.member(u, z) for z in s.members):
                _fail(f"s={s!r}", f"spurious {u!r} in union")
        for z in s.members:
            for u in z.members:
                if not k.member(u, v):
                    _fail(f"s={s!r}", f"{u!r} missing from union")
    return len(U)


@obligation("theorems", "axiom.regularity", "axiom of regularity",
            "a set member v of s with no set member of s in v exists when s has "
            "a set member; otherwise the witness is refused", "universe")
def _ax_reg(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s in U:
        has_set = any(not k.member(v, v) for v in s.members)
        try:
            w = k.regularity_witness(s)
        except (NoSetMember, NotASet):
            if has_set and not k.member(s, s):
                _fail(f"s={s!r}", "witness refused although a set member exists")
            continue
        if not has_set:
            _fail(f"s={s!r}", f"witness {w!r} from a set without set members")
        if not (k.member(w, s) and not k.member(w, w)):
            _fail(f"s={s!r}", f"witness {w!r} is not a set member")
        for u in s.members:
            if not k.member(u, u) and k.member(u, w):
                _fail(f"s={s!r}", f"witness {w!r} contains {u!r}")
    return len(U)


@obligation("theorems", "axiom.regularity-note", "regularity: equivalent minimality clause",
            "forall u (u in s, u set -> u not in v) <-> forall u (u in v, u set -> u not in s)",
            "universe")
def _ax_reg_note(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, v in itertools.product(U, repeat=2):
        # u outside both s and v satisfies both sides vacuously
        left = all(k.member(u, u) or not k.member(u, v) for u in s.members)
        right = all(k.member(u, u) or not k.member(u, s) for u in v.members)
        if left != right:
            _fail(f"s={s!r}", f"v={v!r}")
    return len(U) ** 2


@obligation("theorems", "axiom.specification", "axiom of specification",
            "with a witness, u in spec(s,phi) <-> u in s and phi(u); without one "
            "no set is formed", "universe")
def _ax_spec(ctx: Context) -> int:
    k = ctx.k
    battery = _spec_battery(ctx)
    for s in ctx.sets:
        for label, phi in battery:
            witnessed = any(phi(u) for u in s.members)
            try:
                v = k.specification(s, phi)
            except NoWitness:
                if witnessed:
                    _fail(f"s={s!r}", f"phi={label}", "NoWitness despite a witness")
                continue
            if not witnessed:
                _fail(f"s={s!r}", f"phi={label}", f"formed {v!r} without a witness")
            for u in set(ctx.universe) | set(v.members):
                if k.member(u, v) != (k.member(u, s) and phi(u)):
                    _fail(f"s={s!r}", f"phi={label}", f"u={u!r}")
    return len(ctx.sets) * len(battery)


@obligation("theorems", "axiom.no-empty-set", "there is no empty set",
            "every object has a member; the empty construction and witness-free "
            "specification are refused", "universe")
def _ax_nonempty(ctx: Context) -> int:
    k = ctx.k
    try:
        e = k.mk_set([])
    except EmptySet:
        pass
    else:
        _fail(f"empty construction produced {e!r}")
    for t in ctx.universe:
        if not t.members:
            _fail(f"{t!r} has no member")
    for s in ctx.sets:
        try:
            v = k.specification(s, lambda u: False)
        except NoWitness:
            continue
        _fail(f"spec({s!r}, false) produced {v!r}")
    return 1 + len(ctx.universe) + len(ctx.sets)


@obligation("theorems", "def.cup", "union of two objects",
            "s u t = union({s,t}) and has exactly the members of s and of t", "universe")
def _def_cup(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, t in itertools.product(U, repeat=2):
        c = k.cup(s, t)
        if not k.equal(c, k.union(k.pair(s, t))):
            _fail(f"s={s!r}", f"t={t!r}")
        expected = set(s.members) | set(t.members)
        if set(c.members) != expected:
            _fail(f"s={s!r}", f"t={t!r}", f"cup={c!r}")
    return len(U) ** 2


@obligation("theorems", "def.transitive-examples", "transitivity of pairs and singletons",
            "{p,q} of individuals is transitive; {v} of a set v is not", "universe")
def _def_trans(ctx: Context) -> int:
    k = ctx.k
    n = 0
    for p, q in itertools.combinations(ctx.atoms, 2):
        n += 1
        if not k.is_transitive(k.pair(p, q)):
            _fail(f"{{{p!r},{q!r}}} not transitive")
    for v in ctx.sets:
        n += 1
        if k.is_transitive(k.pair(v, v)):
            _fail(f"{{{v!r}}} is transitive")
    return n


@obligation("theorems", "prop.individual-vs-set", "property: individuals differ from sets",
            "p in p and s not in s -> p != s and s not in p", "universe")
def _prop_1(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for p, s in itertools.product(U, repeat=2):
        if k.member(p, p) and not k.member(s, s):
            if k.equal(p, s) or k.member(s, p):
                _fail(f"p={p!r}", f"s={s!r}")
    return len(U) ** 2


@obligation("theorems", "prop.sole-member", "property: an object whose only member is p",
            "p in p and forall u (u in v -> u = p) -> v = p", "universe")
def _prop_2(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for p, v in itertools.product(U, repeat=2):
        if k.member(p, p) and all(k.equal(u, p) for u in v.members):
            if not k.equal(v, p):
                _fail(f"p={p!r}", f"v={v!r}")
    return len(U) ** 2


@obligation("theorems", "prop.pair-is-set", "property: a pair of distinct objects is a set",
            "u = {s,t} and s != t -> u not in u", "universe")
def _prop_3(ctx: Context) -> int:
    k, U = ctx.k, ctx.universe
    for s, t in itertools.product(U, repeat=2):
        u = k.pair(s, t)
        if not k.equal(s, t) and k.member(u, u):
            _fail(f"s={s!r}", f"t={t!r}")
    return len(U) ** 2


@obligation("theorems", "prop.individual-closure", "property: individuals are fixed points",
            "p in p -> p subset p and union(p) = p and {p} = p", "universe")
def _prop_4(ctx: Context) -> int:
    k = ctx.k
    for p in ctx.universe:
        if k.member(p, p):
            if not (k.subset(p, p) and k.equal(k.union(p), p) and k.equal(k.pair(p, p), p)):
                _fail(f"p={p!r}")
    return len(ctx.universe)


@obligation("theorems", "prop.set-closure", "property: sets stay sets",
            "s not in s -> s subset s and union(s) not in union(s) and {s} not in {s}",
            "universe")
def _prop_5(ctx: Context) -> int:
    k = ctx.k
    for s in ctx.universe:
        if not k.member(s, s):
            us, ss = k.union(s), k.pair(s, s)
            if not k.subset(s, s) or k.member(us, us) or k.member(ss, ss):
                _fail(f"s={s!r}")
    return len(ctx.universe)


@obligation("theorems", "thm.set-of-individuals", "transitive set holds a set of individuals",
            "s transitive with a set member -> some set member of s has only "
            "individuals as members", "universe")
def _set_of_individuals(ctx: Context) -> int:
    k = ctx.k
    for s in ctx.universe:
        if any(not k.member(v, v) for v in s.members) and k.is_transitive(s):
            if not any(
                not k.member(w, w) and all(k.member(z, z) for z in w.members)
                for w in s.members
            ):
                _fail(f"s={s!r}")
    return len(ctx.universe)


@obligation("theorems", "thm.first-number-present",
            "a transitive set over p, q contains the first number",
            "s a transitive set whose individuals lie in {p,q} -> {p,q} in s u {s}",
            "universe")
def _first_number_present(ctx: Context) -> int:
    k, a = ctx.k, ctx.alpha.obj
    for s in ctx.universe:
        if k.member(s, s) or not k.is_transitive(s):
            continue
        if all(k.member(z, a) for z in s.members if k.member(z, z)):
            if not k.member(a, _successor_obj(k, s)):
                _fail(f"s={s!r}")
    return len(ctx.universe)


# ---------------------------------------------------------------------------
# theorems: natural numbers


@obligation("theorems", "num.recognizer", "recognizer of numbers",
            "is_number(x) exactly for the numbers reachable by successor "
            "inside the bounds", "universe")
def _num_recog(ctx: Context) -> int:
    k = ctx.k
    oracle = set()
    for i, x in enumerate(_oracle_numbers(ctx, ctx.spec.max_rank)):
        # the number i has rank i+1 and width i+2
        if i + 1 <= ctx.spec.max_rank and i + 2 <= ctx.spec.max_width:
            oracle.add(x)
    for x in ctx.universe:
        if k.is_number(x, ctx.alpha) != (x in oracle):
            _fail(f"x={x!r}", f"is_number={k.is_number(x, ctx.alpha)}")
    return len(ctx.universe)


@obligation("theorems", "num.member-count", "successor adds one member",
            "from_int(n) has n+2 members and agrees with direct member listing",
            "numbers")
def _num_count(ctx: Context) -> int:
    oracle = _oracle_numbers(ctx, ctx.max_n)
    for i, n in enumerate(ctx.nats):
        if len(n.value.members) != i + 2 or not ctx.k.equal(n.value, oracle[i]):
            _fail(f"n={i}", f"{n.value!r}")
    return len(ctx.nats)


@obligation("theorems", "num.transitive", "a number is a transitive set of transitive objects",
            "every number and each of its members is transitive", "numbers")
def _num_trans(ctx: Context) -> int:
    k = ctx.k
    count = 0
    for n in ctx.nats:
        for x in (n.value,) + n.value.members:
            count += 1
            if not k.is_transitive(x):
                _fail(f"{x!r} in {n!r} is not transitive")
    return count


@obligation("theorems", "thm.successor-is-number", "successor of a number is a number",
            "S number -> S u {S} number", "numbers")
def _successor_is_number(ctx: Context) -> int:
    k = ctx.k
    for n in ctx.nats:
        t = _successor_obj(k, n.value)
        if not k.is_number(t, ctx.alpha):
            _fail(f"S={n!r}")
    return len(ctx.nats)


@obligation("theorems", "thm.members-are-numbers", "members of numbers are numbers",
            "X in S and X not in alpha -> X is a number", "numbers")
def _members_are_numbers(ctx: Context) -> int:
    k, a = ctx.k, ctx.alpha.obj
    count = 0
    for n in ctx.nats:
        for x in n.value.members:
            count += 1
            if not k.member(x, a) and not k.is_number(x, ctx.alpha):
                _fail(f"X={x!r} in S={n!r}")
    return count


@obligation("theorems", "thm.subset-dichotomy", "inclusion between numbers",
            "S subset T -> S in T or S = T", "numbers")
def _subset_dichotomy(ctx: Context) -> int:
    k = ctx.k
    for s, t in itertools.product(ctx.nats, repeat=2):
        if k.subset(s.value, t.value):
            if not (k.member(s.value, t.value) or k.equal(s.value, t.value)):
                _fail(f"S={s!r}", f"T={t!r}")
    return len(ctx.nats) ** 2


@obligation("theorems", "thm.trichotomy", "trichotomy of numbers",
            "exactly one of S in T, S = T, T in S", "numbers")
def _trichotomy(ctx: Context) -> int:
    k = ctx.k
    for s, t in itertools.product(ctx.nats, repeat=2):
        hits = [k.member(s.value, t.value), k.equal(s.value, t.value),
                k.member(t.value, s.value)]
        if sum(hits) != 1:
            _fail(f"S={s!r}", f"T={t!r}", f"{hits}")
    return len(ctx.nats) ** 2


@obligation("theorems", "num.compare-oracle", "trichotomy agrees with integers",
            "compare(S,T) matches integer comparison of member counts", "numbers")
def _num_cmp(ctx: Context) -> int:
    k = ctx.k
    expected = {-1: Ordering.LESS, 0: Ordering.EQUAL, 1: Ordering.GREATER}
    for i, s in enumerate(ctx.nats):
        for j, t in enumerate(ctx.nats):
            got = k.compare(s, t)
            if got is not expected[(i > j) - (i < j)]:
                _fail(f"compare({i},{j}) = {got.value}")
            if k.lt(s, t) != (i < j) or k.leq(s, t) != (i <= j):
                _fail(f"lt/leq({i},{j})")
    return len(ctx.nats) ** 2


@obligation("theorems", "num.monotone-successor", "successor preserves membership",
            "X in S -> X u {X} in S u {S} for numbers X, S", "numbers")
def _num_mono(ctx: Context) -> int:
    k = ctx.k
    count = 0
    for s in ctx.nats:
        ss = _successor_obj(k, s.value)
        for x in s.value.members:
            if k.member(x, x):
                continue
            count += 1
            if not k.member(_successor_obj(k, x), ss):
                _fail(f"X={x!r}", f"S={s!r}")
    return count


@obligation("theorems", "num.greatest-member", "union of a number is its greatest member",
            "for S != alpha: union(S) in S and greatest_number(S) = pred(S) = union(S)",
            "numbers")
def _num_greatest(ctx: Context) -> int:
    k = ctx.k
    for s in ctx.nats[1:]:
        u = k.union(s.value)
        if not k.member(u, s.value):
            _fail(f"S={s!r}")
        g = k.greatest_number(s.value, ctx.alpha)
        if not (k.equal(g.value, u) and k.equal(k.pred(s).value, u)):
            _fail(f"S={s!r}", f"greatest={g!r}")
    return len(ctx.nats) - 1


@obligation("theorems", "thm.greatest-is-union", "greatest number of a bounded set",
            "V subset S holding a number -> union(V) is the greatest number of V",
            "subsets")
def _greatest_is_union(ctx: Context) -> int:
    k, alpha = ctx.k, ctx.alpha
    count = 0
    for s in ctx.nats[: SUBSET_LIMIT + 1]:
        for combo in _nonempty_subsets(s.value.members):
            if all(k.member(x, x) for x in combo):
                continue
            count += 1
            v = k.mk_set(combo)
            uv = k.union(v)
            if not (k.member(uv, v) and k.is_number(uv, alpha)):
                _fail(f"V={v!r}", f"union={uv!r}")
            if any(k.member(uv, u) for u in v.members):
                _fail(f"V={v!r}", f"union {uv!r} is not greatest")
            if not k.equal(k.greatest_number(v, alpha).value, uv):
                _fail(f"V={v!r}", "greatest_number disagrees")
    return count


@obligation("theorems", "def.smallest-number", "smallest and greatest numbers of a set",
            "smallest w: no set of V in w; greatest z: z in no member of V", "extremal")
def _def_6(ctx: Context) -> int:
    k, alpha = ctx.k, ctx.alpha
    count = 0
    for s in ctx.nats[: EXTREMAL_LIMIT + 1]:
        for combo in _nonempty_subsets(s.value.members):
            if all(k.member(x, x) for x in combo):
                continue
            count += 1
            v = k.mk_set(combo)
            w = k.smallest_number(v, alpha).value
            z = k.greatest_number(v, alpha).value
            if not (k.member(w, v) and k.member(z, v)):
                _fail(f"V={v!r}")
            if any(not k.member(u, u) and k.member(u, w) for u in v.members):
                _fail(f"V={v!r}", f"smallest={w!r}")
            if any(k.member(z, u) for u in v.members):
                _fail(f"V={v!r}", f"greatest={z!r}")
    return count


obligation("theorems", "thm.induction", "principle of mathematical induction",
           "phi(S) and the step inside T imply phi(T), over a predicate battery "
           "and all S < T", "numbers")(_induction_obligation)


# ---------------------------------------------------------------------------
# arith


def _pairs(ctx: Context):
    return itertools.product(enumerate(ctx.nats), repeat=2)


@obligation("arith", "thm.sum-is-number", "sum of numbers is a number",
            "a + b is a number", "numbers")
def _sum_is_number(ctx: Context) -> int:
    k = ctx.k
    for (i, a), (j, b) in _pairs(ctx):
        if not k.is_number(k.add(a, b).value, ctx.alpha):
            _fail(f"a={i}", f"b={j}")
    return len(ctx.nats) ** 2


@obligation("arith", "arith.product-is-number", "product of numbers is a number",
            "a * b is a number", "numbers")
def _prod_num(ctx: Context) -> int:
    k = ctx.k
    for (i, a), (j, b) in _pairs(ctx):
        if not k.is_number(k.mul(a, b).value, ctx.alpha):
            _fail(f"a={i}", f"b={j}")
    return len(ctx.nats) ** 2


@obligation("arith", "arith.add-homomorphism", "integer oracle for addition",
            "to_int(a + b) = to_int(a) + to_int(b)", "numbers")
def _add_hom(ctx: Context) -> int:
    k = ctx.k
    for (i, a), (j, b) in _pairs(ctx):
        got = k.to_int(k.add(a, b))
        if got != i + j:
            _fail(f"{i} + {j} gave {got}")
    return len(ctx.nats) ** 2


@obligation("arith", "arith.mul-homomorphism", "integer oracle for multiplication",
            "to_int(a * b) = to_int(a) * to_int(b)", "numbers")
def _mul_hom(ctx: Context) -> int:
    k = ctx.k
    for (i, a), (j, b) in _pairs(ctx):
        got = k.to_int(k.mul(a, b))
        if got != i * j:
            _fail(f"{i} * {j} gave {got}")
    return len(ctx.nats) ** 2


@obligation("arith", "arith.identities", "stated arithmetic identities",
            "0+1 = 1; a+0 = a; a+1 = succ(a); a*0 = 0; a*1 = 0+a", "numbers")
def _identities(ctx: Context) -> int:
    k = ctx.k
    z, one = ctx.nats[0], ctx.nats[1]
    if not k.equal(k.add(z, one).value, one.value):
        _fail("0 + 1 != 1")
    for i, a in enumerate(ctx.nats):
        checks = {
            "a+0=a": k.equal(k.add(a, z).value, a.value),
            "a+1=succ(a)": k.equal(k.add(a, one).value, k.succ(a).value),
            "a*0=0": k.equal(k.mul(a, z).value, z.value),
            "a*1=0+a": k.equal(k.mul(a, one).value, k.add(z, a).value),
        }
        for name, ok in checks.items():
            if not ok:
                _fail(f"{name} fails for a={i}")
    return 1 + 4 * len(ctx.nats)


@obligation("arith", "arith.zero-commutes", "zero commutes in addition",
            "0 + b = b + 0", "numbers")
def _zero_comm(ctx: Context) -> int:
    k = ctx.k
    z = ctx.nats[0]
    for j, b in enumerate(ctx.nats):
        if not k.equal(k.add(z, b).value, k.add(b, z).value):
            _fail(f"b={j}")
    return len(ctx.nats)


@obligation("arith", "arith.add-commutative", "interpretation: basic arithmetic law",
            "a + b = b + a", "numbers")
def _add_comm(ctx: Context) -> int:
    k = ctx.k
    for (i, a), (j, b) in _pairs(ctx):
        if not k.equal(k.add(a, b).value, k.add(b, a).value):
            _fail(f"a={i}", f"b={j}")
    return len(ctx.nats) ** 2


@obligation("arith", "arith.mul-commutative", "interpretation: basic arithmetic law",
            "a * b = b * a", "numbers")
def _mul_comm(ctx: Context) -> int:
    k = ctx.k
    for (i, a), (j, b) in _pairs(ctx):
        if not k.equal(k.mul(a, b).value, k.mul(b, a).value):
            _fail(f"a={i}", f"b={j}")
    return len(ctx.nats) ** 2


def _triples(ctx: Context):
    return itertools.product(enumerate(ctx.nats[: TRIPLE_LIMIT + 1]), repeat=3)


@obligation("arith", "arith.add-associative", "interpretation: basic arithmetic law",
            "(a + b) + c = a + (b + c)", "triples")
def _add_assoc(ctx: Context) -> int:
    k = ctx.k
    n = 0
    for (i, a), (j, b), (l, c) in _triples(ctx):
        n += 1
        if not k.equal(k.add(k.add(a, b), c).value, k.add(a, k.add(b, c)).value):
            _fail(f"a={i}", f"b={j}", f"c={l}")
    return n


@obligation("arith", "arith.mul-associative", "interpretation: basic arithmetic law",
            "(a * b) * c = a * (b * c)", "triples")
def _mul_assoc(ctx: Context) -> int:
    k = ctx.k
    n = 0
    for (i, a), (j, b), (l, c) in _triples(ctx):
        n += 1
        if not k.equal(k.mul(k.mul(a, b), c).value, k.mul(a, k.mul(b, c)).value):
            _fail(f"a={i}", f"b={j}", f"c={l}")
    return n


@obligation("arith", "arith.distributive", "interpretation: basic arithmetic law",
            "a * (b + c) = a * b + a * c", "triples")
def _distrib(ctx: Context) -> int:
    k = ctx.k
    n = 0
    for (i, a), (j, b), (l, c) in _triples(ctx):
        n += 1
        lhs = k.mul(a, k.add(b, c))
        rhs = k.add(k.mul(a, b), k.mul(a, c))
        if not k.equal(lhs.value, rhs.value):
            _fail(f"a={i}", f"b={j}", f"c={l}")
    return n


# ---------------------------------------------------------------------------
# ordinal


def _ordinal_window(ctx: Context) -> list[SymOrd]:
    return [SymOrd(m, n) for m in range(ORD_COEFF_LIMIT + 1) for n in range(ctx.max_n + 1)]


@obligation("ordinal", "ord.omega-first", "omega is a first number",
            "omega is an ordinal with first number omega; omega = first number "
            "level 1; level 0 is the finite first number", "ordinals")
def _ord_omega(ctx: Context) -> int:
    k = ctx.k
    w = k.omega()
    if not k.is_ordinal_first_omega(w):
        _fail("omega rejected")
    if k.first_number_level(1) != w:
        _fail("level 1 != omega")
    if k.first_number_level(0) != SymOrd(0, 0):
        _fail("level 0 != 0")
    return 3


@obligation("ordinal", "thm.omega-plus-n", "omega + n is an ordinal with first number omega",
            "omega + 0 = omega and omega + (x+1) = (omega + x) + 1 stay ordinals "
            "with first number omega", "ordinals")
def _omega_plus_n(ctx: Context) -> int:
    k = ctx.k
    w = k.omega()
    if k.add_ord_nat(w, 0) != w:
        _fail("omega + 0 != omega")
    prev = w
    for x in range(ctx.max_n + 1):
        b = k.add_ord_nat(w, x)
        if not k.is_ordinal_first_omega(b):
            _fail(f"omega + {x} rejected")
        if x and b != k.succ_ord(prev):
            _fail(f"omega + {x} != (omega + {x - 1}) + 1")
        prev = b
    return ctx.max_n + 2


@obligation("ordinal", "thm.omega-characterization",
            "ordinals with first number omega are exactly omega + n",
            "is_ordinal_first_omega(b) <-> b = omega + n for some n", "ordinals")
def _omega_characterization(ctx: Context) -> int:
    k = ctx.k
    w = k.omega()
    reachable = {k.add_ord_nat(w, n) for n in range(ctx.max_n + 1)}
    window = _ordinal_window(ctx)
    for b in window:
        if k.is_ordinal_first_omega(b) != (b in reachable):
            _fail(f"b={b}")
    return len(window)


@obligation("ordinal", "ord.absorption", "finite plus infinite is absorbed",
            "n + b = b for every infinite b", "ordinals")
def _ord_absorb(ctx: Context) -> int:
    k = ctx.k
    count = 0
    for b in _ordinal_window(ctx):
        if b.omega_coeff == 0:
            continue
        for n in range(ctx.max_n + 1):
            count += 1
            if k.add_nat_ord(n, b) != b:
                _fail(f"{n} + {b} = {k.add_nat_ord(n, b)}")
    return count


@obligation("ordinal", "ord.non-commutative", "mixed addition does not commute",
            "n + omega != omega + n for n != 0, and equal for n = 0", "ordinals")
def _ord_noncomm(ctx: Context) -> int:
    k = ctx.k
    w = k.omega()
    if k.add_nat_ord(0, w) != k.add_ord_nat(w, 0):
        _fail("0 + omega != omega + 0")
    for n in range(1, ctx.max_n + 1):
        if k.add_nat_ord(n, w) == k.add_ord_nat(w, n):
            _fail(f"n={n}")
    return ctx.max_n + 1


@obligation("ordinal", "ord.right-zero", "adding zero on the right",
            "b + 0 = b", "ordinals")
def _ord_rzero(ctx: Context) -> int:
    window = _ordinal_window(ctx)
    for b in window:
        if ctx.k.add_ord_nat(b, 0) != b:
            _fail(f"b={b}")
    return len(window)


@obligation("ordinal", "ord.embedding", "finite ordinals agree with the natural numbers",
            "for m = 0 successor and addition match the set-built numbers", "numbers")
def _ord_embed(ctx: Context) -> int:
    k = ctx.k
    count = 0
    for i, n in enumerate(ctx.nats):
        count += 1
        if k.succ_ord(SymOrd(0, i)).offset != k.to_int(k.succ(n)):
            _fail(f"succ of {i}")
        for j, m in enumerate(ctx.nats):
            count += 1
            if k.add_nat_ord(i, SymOrd(0, j)).offset != k.to_int(k.add(n, m)):
                _fail(f"{i} + {j}")
    return count


@obligation("ordinal", "ord.peano-transfer", "Peano properties above omega",
            "on omega + n: successor injective, omega no successor, bounded "
            "induction from omega", "ordinals")
def _ord_peano(ctx: Context) -> int:
    k = ctx.k
    w = k.omega()
    level = [k.add_ord_nat(w, n) for n in range(ctx.max_n + 1)]
    count = 0
    for a, b in itertools.product(level, repeat=2):
        count += 1
        if k.succ_ord(a) == k.succ_ord(b) and a != b:
            _fail(f"succ({a}) = succ({b})")
    for b in level:
        count += 1
        if k.succ_ord(b) == w:
            _fail(f"omega = succ({b})")
    # induction over offsets for "first number omega"
    phi = k.is_ordinal_first_omega
    if not phi(w):
        _fail("phi(omega)")
    for b in level[:-1]:
        count += 1
        if phi(b) and not phi(k.succ_ord(b)):
            _fail(f"step at {b}")
    if not phi(level[-1]):
        _fail(f"conclusion at {level[-1]}")
    return count


@obligation("ordinal", "ord.add-injective", "adding naturals on the right is injective",
            "b + j = b + l -> j = l", "ordinals")
def _ord_inj(ctx: Context) -> int:
    k = ctx.k
    count = 0
    for b in _ordinal_window(ctx):
        if b.offset:
            continue
        for j, l in itertools.product(range(ctx.max_n + 1), repeat=2):
            count += 1
            if k.add_ord_nat(b, j) == k.add_ord_nat(b, l) and j != l:
                _fail(f"b={b}", f"{j} vs {l}")
    return count


@obligation("ordinal", "ord.levels", "first numbers omega·n",
            "omega·(n+1) exceeds every omega·n + k", "ordinals")
def _ord_levels(ctx: Context) -> int:
    k = ctx.k
    count = 0
    for m in range(ORD_COEFF_LIMIT):
        lo, hi = k.first_number_level(m), k.first_number_level(m + 1)
        for n in range(ctx.max_n + 1):
            count += 1
            if not k.add_ord_nat(lo, n) < hi:
                _fail(f"omega·{m} + {n} >= omega·{m + 1}")
    return count
