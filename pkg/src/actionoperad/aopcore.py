"""The action-operad interface, derived composition and verification suites.

An action operad is described here through its characterising data: groups
``Λ(n)``, homomorphisms ``pi`` to the symmetric groups, block sums ``beta``
and duplications ``delta``.  Operadic composition is derived as

    mu(g; f_1, ..., f_n) = delta_{n; k_1..k_n}(g) * beta(f_1, ..., f_n)

The suites in this module check the nine characterising axioms, the single
twisted-homomorphism axiom, a handful of derived laws, the face and
degeneracy maps of the associated crossed simplicial group and the
element-level pseudo-commutativity axioms.

Sampling
--------
Every suite first walks an *exhaustive* domain and then draws seeded random
cases.  The exhaustive domain at level ``N`` contains every case whose total
arity is at most ``N``.  The total arity of a case is the sum of the weights
of all group elements occurring in it plus the sum of all block sizes that
are not already fixed by those elements, where an element of ``Λ(k)`` weighs
``max(k, 1)`` (so that lists of arity-zero elements stay finite).  The single
axiom counts the pair ``g, g'`` and each pair ``f_i, f'_i`` once.  For instances with infinite
groups the exhaustive pass ranges over ``sample_elements`` (identity,
generators and their inverses) instead of whole groups.
"""

from __future__ import annotations

import enum
import itertools
import json
import random
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any

from . import perm as P
from .errors import ArityError, BudgetError, InvariantError
from .perm import Perm

__all__ = [
    "Equality",
    "Status",
    "AxiomReport",
    "SampleBudget",
    "ActionOperad",
    "mu",
    "check_single_axiom",
    "check_nine_axioms",
    "check_derived_laws",
    "check_surjective_or_zero",
    "face_map",
    "degeneracy_map",
    "check_simplicial_identities",
    "check_pscomm_elements",
    "kernel_and_image",
    "SubActionOperad",
    "overall_status",
]


class Equality(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNKNOWN = "Unknown"

    @classmethod
    def of(cls, flag: bool) -> "Equality":
        return cls.EQUAL if flag else cls.NOT_EQUAL


class Status(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class AxiomReport:
    """Outcome of one law checked over many cases.

    A ``Fail`` always carries a witness: the inputs of the first failing case
    and both sides of the equation, rendered in the instance's text format.
    """

    axiom_id: str
    status: Status
    cases_checked: int
    seed: int | None = None
    witness: dict | None = None
    instance: str | None = None
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d: dict[str, Any] = {"axiom_id": self.axiom_id, "status": self.status.value}
        if self.instance is not None:
            d["instance"] = self.instance
        if self.witness is not None:
            d["witness"] = self.witness
        d["cases_checked"] = self.cases_checked
        d["seed"] = self.seed
        d.update(self.extra)
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), ensure_ascii=False)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS


def overall_status(reports: Iterable[AxiomReport]) -> Status:
    statuses = {r.status for r in reports}
    if Status.FAIL in statuses:
        return Status.FAIL
    if Status.INCONCLUSIVE in statuses:
        return Status.INCONCLUSIVE
    return Status.PASS


@dataclass(frozen=True)
class SampleBudget:
    """How many cases a suite examines.

    ``exhaustive_up_to`` bounds the total arity of the exhaustive pass (see the
    module docstring), ``max_total_arity`` bounds the output arity of random
    cases, ``max_word_length`` bounds random words for infinite instances.
    """

    max_total_arity: int = 6
    exhaustive_up_to: int = 6
    random_cases: int = 0
    seed: int = 0
    max_word_length: int = 8

    def __post_init__(self):
        if self.exhaustive_up_to > self.max_total_arity:
            raise InvariantError("exhaustive_up_to must not exceed max_total_arity")


class ActionOperad(ABC):
    """Capabilities every action-operad instance provides.

    Subclasses implement the group structure of each ``Λ(n)``, the map
    ``pi`` to permutations, ``block_sum`` and ``duplication``.  ``equal``
    answers with an :class:`Equality`; only instances with
    ``semi_decidable = True`` may answer ``UNKNOWN``.
    """

    name: str = "?"
    finite: bool = True
    semi_decidable: bool = False

    @abstractmethod
    def arity(self, g) -> int: ...

    @abstractmethod
    def identity(self, n: int): ...

    @abstractmethod
    def multiply(self, g, h): ...

    @abstractmethod
    def inverse(self, g): ...

    @abstractmethod
    def pi(self, g) -> Perm: ...

    @abstractmethod
    def block_sum(self, parts: Sequence): ...

    @abstractmethod
    def duplication(self, g, ks: Sequence[int]): ...

    def equal(self, g, h) -> Equality:
        return Equality.of(g == h)

    def format(self, g) -> str:
        return str(g)

    def parse(self, text: str):
        raise NotImplementedError(f"{self.name} has no text parser")

    def elements(self, n: int) -> Iterator:
        raise BudgetError(f"{self.name}({n}) cannot be enumerated")

    def order(self, n: int) -> int | None:
        return None

    def generators(self, n: int) -> list:
        """A generating set of ``Λ(n)`` (possibly empty for trivial groups)."""
        return []

    def random_element(self, n: int, rng: random.Random, max_length: int = 8):
        elems = self._element_cache(n)
        return elems[rng.randrange(len(elems))]

    def sample_elements(self, n: int) -> list:
        """Elements used by exhaustive passes: the whole group when finite."""
        if self.finite:
            return self._element_cache(n)
        out = [self.identity(n)]
        for s in self.generators(n):
            out.append(s)
            si = self.inverse(s)
            if self.equal(si, s) is not Equality.EQUAL:
                out.append(si)
        return out

    def _element_cache(self, n: int) -> list:
        cache = self.__dict__.setdefault("_elements_by_arity", {})
        if n not in cache:
            cache[n] = list(self.elements(n))
        return cache[n]

    def to_json(self, g) -> Any:
        return self.format(g)

    def power(self, g, k: int):
        base = g if k >= 0 else self.inverse(g)
        out = self.identity(self.arity(g))
        for _ in range(abs(k)):
            out = self.multiply(out, base)
        return out

    def __repr__(self) -> str:
        return f"<action operad {self.name}>"


def mu(op: ActionOperad, g, fs: Sequence):
    """Operadic composition ``delta(g) * beta(fs)``."""
    n = op.arity(g)
    if len(fs) != n:
        raise ArityError(f"composition at arity {n} needs {n} inputs, got {len(fs)}")
    ks = [op.arity(f) for f in fs]
    return op.multiply(op.duplication(g, ks), op.block_sum(fs))


# ---------------------------------------------------------------------------
# case enumeration helpers

def _vectors(length: int, max_sum: int) -> Iterator[tuple[int, ...]]:
    """All tuples of naturals of the given length with sum at most ``max_sum``."""
    if length == 0:
        yield ()
        return
    for first in range(max_sum + 1):
        for rest in _vectors(length - 1, max_sum - first):
            yield (first,) + rest


def _wvectors(length: int, max_weight: int) -> Iterator[tuple[int, ...]]:
    """Tuples of naturals with ``sum(max(k, 1))`` at most ``max_weight``."""
    if length == 0:
        yield ()
        return
    for first in range(max_weight + 1):
        w = max(first, 1)
        if w > max_weight:
            break
        for rest in _wvectors(length - 1, max_weight - w):
            yield (first,) + rest


def _w(k: int) -> int:
    return max(k, 1)


def _element_lists(op: ActionOperad, max_weight: int, max_len: int) -> Iterator[tuple]:
    for n in range(min(max_len, max_weight) + 1):
        for ks in _wvectors(n, max_weight):
            yield from itertools.product(*(op.sample_elements(k) for k in ks))


def _splits(seq: tuple) -> Iterator[list[tuple]]:
    """Every way to cut ``seq`` into consecutive non-empty pieces."""
    n = len(seq)
    if n == 0:
        yield []
        return
    for mask in range(1 << (n - 1)):
        pieces, start = [], 0
        for i in range(1, n):
            if mask >> (i - 1) & 1:
                pieces.append(seq[start:i])
                start = i
        pieces.append(seq[start:])
        yield pieces


def _rand_vector(rng: random.Random, length: int, max_sum: int, allow_zero: bool = True) -> tuple[int, ...]:
    lo = 0 if allow_zero else 1
    out = []
    remaining = max_sum
    for i in range(length):
        left = length - i - 1
        hi = max(lo, remaining - lo * left)
        v = rng.randint(lo, max(lo, min(hi, remaining)))
        out.append(v)
        remaining -= v
    rng.shuffle(out)
    return tuple(out)


class _Runner:
    """Accumulates the outcome of many equality checks into one report."""

    def __init__(self, op: ActionOperad, axiom_id: str, seed: int | None):
        self.op = op
        self.axiom_id = axiom_id
        self.seed = seed
        self.cases = 0
        self.unknown = 0
        self.witness: dict | None = None
        self.unknown_witness: dict | None = None

    def record(self, outcome: Equality, describe: Callable[[], dict]) -> None:
        self.cases += 1
        if outcome is Equality.NOT_EQUAL and self.witness is None:
            self.witness = describe()
        elif outcome is Equality.UNKNOWN:
            self.unknown += 1
            if self.unknown_witness is None:
                self.unknown_witness = describe()

    def check(self, lhs, rhs, describe: Callable[[], dict]) -> None:
        self.record(self.op.equal(lhs, rhs), lambda: {**describe(), "lhs": self.op.format(lhs), "rhs": self.op.format(rhs)})

    def check_perm(self, lhs: Perm, rhs: Perm, describe: Callable[[], dict]) -> None:
        self.record(Equality.of(lhs == rhs), lambda: {**describe(), "lhs": P.format_perm(lhs), "rhs": P.format_perm(rhs)})

    @property
    def failed(self) -> bool:
        return self.witness is not None

    def report(self) -> AxiomReport:
        if self.witness is not None:
            status, witness = Status.FAIL, self.witness
        elif self.unknown:
            status, witness = Status.INCONCLUSIVE, None
        else:
            status, witness = Status.PASS, None
        extra = {"unknown_cases": self.unknown} if self.unknown else {}
        if self.unknown and self.unknown_witness is not None and status is Status.INCONCLUSIVE:
            extra["first_unknown"] = self.unknown_witness
        return AxiomReport(self.axiom_id, status, self.cases, self.seed, witness, self.op.name, extra)


def _fmt(op: ActionOperad, xs) -> list[str]:
    return [op.format(x) for x in xs]


def _ks(op: ActionOperad, xs) -> list[int]:
    return [op.arity(x) for x in xs]


def _apply_perm_to_sizes(p: Perm, sizes: Sequence[int]) -> tuple[int, ...]:
    # new[i] = sizes[p^-1(i)]: the sizes seen on the output side of p
    return P.act_on_tuple(p, tuple(sizes))


# ---------------------------------------------------------------------------
# individual laws; each takes a runner and one case

def _law_single(r: _Runner, g2, f2s, g, fs):
    op = r.op
    lhs = op.multiply(mu(op, g2, f2s), mu(op, g, fs))
    pg = op.pi(g)
    mixed = [op.multiply(f2s[pg(i + 1) - 1], f) for i, f in enumerate(fs)]
    rhs = mu(op, op.multiply(g2, g), mixed)
    r.check(lhs, rhs, lambda: {"g_prime": op.format(g2), "f_prime": _fmt(op, f2s), "g": op.format(g), "f": _fmt(op, fs)})


def _law1(r: _Runner, gs):
    op = r.op
    r.check_perm(op.pi(op.block_sum(gs)), P.block_sum([op.pi(g) for g in gs]), lambda: {"g": _fmt(op, gs)})


def _law2(r: _Runner, g):
    op = r.op
    r.check(op.block_sum([g]), g, lambda: {"g": op.format(g)})


def _law3(r: _Runner, pieces):
    op = r.op
    flat = [x for piece in pieces for x in piece]
    lhs = op.block_sum(flat)
    rhs = op.block_sum([op.block_sum(piece) for piece in pieces])
    r.check(lhs, rhs, lambda: {"h": [_fmt(op, piece) for piece in pieces]})


def _law4(r: _Runner, g, ks):
    op = r.op
    r.check_perm(op.pi(op.duplication(g, ks)), P.duplication(op.pi(g), ks), lambda: {"g": op.format(g), "k": list(ks)})


def _law5(r: _Runner, g, ks):
    op = r.op
    n = op.arity(g)
    r.check(op.duplication(g, (1,) * n), g, lambda: {"g": op.format(g), "k": [1] * n})
    e = op.identity(n)
    r.check(op.duplication(e, ks), op.identity(sum(ks)), lambda: {"g": op.format(e), "k": list(ks)})


def _law6(r: _Runner, g, h, js):
    op = r.op
    ks = _apply_perm_to_sizes(op.pi(h), js)
    lhs = op.multiply(op.duplication(g, ks), op.duplication(h, js))
    rhs = op.duplication(op.multiply(g, h), js)
    r.check(lhs, rhs, lambda: {"g": op.format(g), "h": op.format(h), "k": list(ks), "j": list(js)})


def _law7(r: _Runner, g, ms, ps):
    op = r.op
    flat = [p for block in ps for p in block]
    lhs = op.duplication(op.duplication(g, ms), flat)
    rhs = op.duplication(g, [sum(block) for block in ps])
    r.check(lhs, rhs, lambda: {"g": op.format(g), "m": list(ms), "p": [list(b) for b in ps]})


def _law8(r: _Runner, g, hs):
    op = r.op
    ks = _ks(op, hs)
    d = op.duplication(g, ks)
    lhs = op.multiply(d, op.block_sum(hs))
    moved = P.act_on_tuple(op.pi(g), tuple(hs))
    rhs = op.multiply(op.block_sum(moved), d)
    r.check(lhs, rhs, lambda: {"g": op.format(g), "h": _fmt(op, hs)})


def _law9(r: _Runner, gs, ms):
    op = r.op
    lhs = op.block_sum([op.duplication(g, m) for g, m in zip(gs, ms)])
    rhs = op.duplication(op.block_sum(gs), [x for m in ms for x in m])
    r.check(lhs, rhs, lambda: {"g": _fmt(op, gs), "m": [list(m) for m in ms]})


# ---------------------------------------------------------------------------
# exhaustive case generators (weight bounded by N)

def _ex_single(op, N):
    for n in range(N):
        els = op.sample_elements(n)
        for g in els:
            pinv = op.pi(g).inverse()
            for ks in _wvectors(n, N - _w(n)):
                ks2 = [ks[pinv(i + 1) - 1] for i in range(n)]  # arity of f'_i is k_{g^-1(i)}
                for g2 in els:
                    for fs in itertools.product(*(op.sample_elements(k) for k in ks)):
                        for f2s in itertools.product(*(op.sample_elements(k) for k in ks2)):
                            yield (g2, f2s, g, fs)


def _ex1(op, N):
    for gs in _element_lists(op, N, N):
        yield (gs,)


def _ex2(op, N):
    for n in range(N + 1):
        for g in op.sample_elements(n):
            yield (g,)


def _ex3(op, N):
    for gs in _element_lists(op, N, N):
        for pieces in _splits(tuple(gs)):
            yield (pieces,)


def _ex4(op, N):
    for n in range(N + 1):
        for g in op.sample_elements(n):
            for ks in _vectors(n, N - _w(n)):
                yield (g, ks)


_ex5 = _ex4


def _ex6(op, N):
    for n in range(N // 2 + 1):
        els = op.sample_elements(n)
        for g in els:
            for h in els:
                for js in _vectors(n, N - 2 * _w(n)):
                    yield (g, h, js)


def _ex7(op, N):
    for n in range(N + 1):
        for g in op.sample_elements(n):
            for ms in _vectors(n, N - _w(n)):
                M = sum(ms)
                for flat in _vectors(M, N - _w(n) - M):
                    ps, pos = [], 0
                    for m in ms:
                        ps.append(flat[pos:pos + m])
                        pos += m
                    yield (g, ms, ps)


def _ex8(op, N):
    for n in range(N + 1):
        for g in op.sample_elements(n):
            for ks in _wvectors(n, N - _w(n)):
                for hs in itertools.product(*(op.sample_elements(k) for k in ks)):
                    yield (g, hs)


def _ex9(op, N):
    for gs in _element_lists(op, N, N):
        K = sum(op.arity(g) for g in gs)
        for flat in _vectors(K, N - sum(_w(op.arity(g)) for g in gs)):
            ms, pos = [], 0
            for g in gs:
                a = op.arity(g)
                ms.append(flat[pos:pos + a])
                pos += a
            yield (gs, ms)


# ---------------------------------------------------------------------------
# random case generators (output arity bounded by R)

def _rand_elements(op, rng, ks, L):
    return tuple(op.random_element(k, rng, L) for k in ks)


def _rand_single(op, rng, R, L):
    n = rng.randint(0, min(R, 5))
    ks = _rand_vector(rng, n, rng.randint(0, R))
    g = op.random_element(n, rng, L)
    g2 = op.random_element(n, rng, L)
    pinv = op.pi(g).inverse()
    ks2 = [ks[pinv(i + 1) - 1] for i in range(n)]
    return (g2, _rand_elements(op, rng, ks2, L), g, _rand_elements(op, rng, ks, L))


def _rand1(op, rng, R, L):
    n = rng.randint(0, min(R, 5))
    return (_rand_elements(op, rng, _rand_vector(rng, n, rng.randint(0, R)), L),)


def _rand2(op, rng, R, L):
    return (op.random_element(rng.randint(0, R), rng, L),)


def _rand3(op, rng, R, L):
    (gs,) = _rand1(op, rng, R, L)
    cuts = sorted(rng.sample(range(1, len(gs)), rng.randint(0, max(0, len(gs) - 1)))) if len(gs) > 1 else []
    pieces, start = [], 0
    for c in cuts + [len(gs)]:
        pieces.append(tuple(gs[start:c]))
        start = c
    if not gs:
        pieces = []
    return (pieces,)


def _rand4(op, rng, R, L):
    n = rng.randint(0, min(R, 5))
    return (op.random_element(n, rng, L), _rand_vector(rng, n, rng.randint(0, R)))


_rand5 = _rand4


def _rand6(op, rng, R, L):
    n = rng.randint(0, min(R, 5))
    return (op.random_element(n, rng, L), op.random_element(n, rng, L), _rand_vector(rng, n, rng.randint(0, R)))


def _rand7(op, rng, R, L):
    n = rng.randint(0, min(R, 4))
    ms = _rand_vector(rng, n, rng.randint(0, min(R, 5)))
    flat = _rand_vector(rng, sum(ms), rng.randint(0, R))
    ps, pos = [], 0
    for m in ms:
        ps.append(flat[pos:pos + m])
        pos += m
    return (op.random_element(n, rng, L), ms, ps)


def _rand8(op, rng, R, L):
    n = rng.randint(0, min(R, 5))
    ks = _rand_vector(rng, n, rng.randint(0, R))
    return (op.random_element(n, rng, L), _rand_elements(op, rng, ks, L))


def _rand9(op, rng, R, L):
    n = rng.randint(0, min(R, 4))
    ks = _rand_vector(rng, n, rng.randint(0, min(R, 5)))
    gs = _rand_elements(op, rng, ks, L)
    flat = _rand_vector(rng, sum(ks), rng.randint(0, R))
    ms, pos = [], 0
    for k in ks:
        ms.append(flat[pos:pos + k])
        pos += k
    return (gs, ms)


_NINE = {
    "1": (_law1, _ex1, _rand1),
    "2": (_law2, _ex2, _rand2),
    "3": (_law3, _ex3, _rand3),
    "4": (_law4, _ex4, _rand4),
    "5": (_law5, _ex5, _rand5),
    "6": (_law6, _ex6, _rand6),
    "7": (_law7, _ex7, _rand7),
    "8": (_law8, _ex8, _rand8),
    "9": (_law9, _ex9, _rand9),
}


def _run_law(op: ActionOperad, axiom_id: str, law, ex_gen, rand_gen, budget: SampleBudget, salt: int) -> AxiomReport:
    runner = _Runner(op, axiom_id, budget.seed)
    if budget.exhaustive_up_to >= 0:
        for case in ex_gen(op, budget.exhaustive_up_to):
            law(runner, *case)
    rng = random.Random(f"{budget.seed}:{op.name}:{axiom_id}:{salt}")
    for _ in range(budget.random_cases):
        law(runner, *rand_gen(op, rng, budget.max_total_arity, budget.max_word_length))
    return runner.report()


def check_single_axiom(op: ActionOperad, budget: SampleBudget = SampleBudget()) -> AxiomReport:
    """mu(g'; f') * mu(g; f) == mu(g'g; f'_{g(1)} f_1, ..., f'_{g(n)} f_n)."""
    return _run_law(op, "AO", _law_single, _ex_single, _rand_single, budget, 0)


def check_nine_axioms(op: ActionOperad, budget: SampleBudget = SampleBudget(),
                      axioms: Iterable[str] | None = None) -> list[AxiomReport]:
    """One report per characterising axiom, in the order 1..9."""
    chosen = list(axioms) if axioms is not None else list(_NINE)
    return [_run_law(op, a, *_NINE[a], budget, i) for i, a in enumerate(chosen, 1)]


# ---------------------------------------------------------------------------
# derived laws

def check_derived_laws(op: ActionOperad, budget: SampleBudget = SampleBudget()) -> list[AxiomReport]:
    """Unit, identity-composition, commutativity of Λ(0) and Λ(1), e_0-absorption, associativity."""
    N = budget.exhaustive_up_to
    rng = random.Random(f"{budget.seed}:{op.name}:derived")
    L = budget.max_word_length
    reports = []

    r = _Runner(op, "unit", budget.seed)
    e1 = op.identity(1)
    for n in range(N + 1):
        for g in op.sample_elements(n):
            r.check(mu(op, e1, [g]), g, lambda g=g: {"g": op.format(g), "side": "left"})
            r.check(mu(op, g, [e1] * n), g, lambda g=g: {"g": op.format(g), "side": "right"})
    for _ in range(budget.random_cases):
        g = op.random_element(rng.randint(0, budget.max_total_arity), rng, L)
        r.check(mu(op, e1, [g]), g, lambda g=g: {"g": op.format(g), "side": "left"})
    reports.append(r.report())

    r = _Runner(op, "identity-composition", budget.seed)
    for n in range(N + 1):
        for ks in _wvectors(n, N - _w(n)):
            lhs = mu(op, op.identity(n), [op.identity(k) for k in ks])
            r.check(lhs, op.identity(sum(ks)), lambda ks=ks: {"n": len(ks), "k": list(ks)})
    reports.append(r.report())

    for arity in (1, 0):
        r = _Runner(op, f"lambda{arity}-abelian", budget.seed)
        els = op.sample_elements(arity)
        pairs = [(g, h) for g in els for h in els]
        for _ in range(budget.random_cases):
            pairs.append((op.random_element(arity, rng, L), op.random_element(arity, rng, L)))
        for g, h in pairs:
            r.check(op.multiply(g, h), op.multiply(h, g), lambda g=g, h=h: {"g": op.format(g), "h": op.format(h)})
            if arity == 0:
                r.check(op.multiply(g, h), mu(op, op.identity(2), [g, h]),
                        lambda g=g, h=h: {"g": op.format(g), "h": op.format(h), "law": "product is mu(e_2; g, h)"})
        reports.append(r.report())

    r = _Runner(op, "e0-absorption", budget.seed)
    e0 = op.identity(0)
    cases = [gs for gs in _element_lists(op, N, N - 1)]
    for _ in range(budget.random_cases):
        (gs,) = _rand1(op, rng, budget.max_total_arity, L)
        cases.append(gs)
    for gs in cases:
        n = len(gs) + 1
        target = mu(op, op.identity(n - 1), list(gs))
        r.check(mu(op, op.identity(n), [e0, *gs]), target, lambda gs=gs: {"g": _fmt(op, gs), "side": "left"})
        r.check(mu(op, op.identity(n), [*gs, e0]), target, lambda gs=gs: {"g": _fmt(op, gs), "side": "right"})
    reports.append(r.report())

    r = _Runner(op, "mu-associativity", budget.seed)
    assoc_cases = []
    for n in range(N + 1):
        for g in op.sample_elements(n):
            for fs in _element_lists_exact(op, n, N - _w(n)):
                rest = N - _w(n) - sum(_w(op.arity(f)) for f in fs)
                for hs in _element_lists_exact(op, sum(op.arity(f) for f in fs), rest):
                    assoc_cases.append((g, fs, hs))
    for _ in range(budget.random_cases):
        n = rng.randint(0, 3)
        g = op.random_element(n, rng, L)
        fs = _rand_elements(op, rng, _rand_vector(rng, n, rng.randint(0, 4)), L)
        K = sum(op.arity(f) for f in fs)
        hs = _rand_elements(op, rng, _rand_vector(rng, K, rng.randint(0, budget.max_total_arity)), L)
        assoc_cases.append((g, fs, hs))
    for g, fs, hs in assoc_cases:
        lhs = mu(op, mu(op, g, list(fs)), list(hs))
        inner, pos = [], 0
        for f in fs:
            a = op.arity(f)
            inner.append(mu(op, f, list(hs[pos:pos + a])))
            pos += a
        rhs = mu(op, g, inner)
        r.check(lhs, rhs, lambda g=g, fs=fs, hs=hs: {"g": op.format(g), "f": _fmt(op, fs), "h": _fmt(op, hs)})
    reports.append(r.report())
    return reports


def _element_lists_exact(op, length, max_weight):
    for ks in _wvectors(length, max_weight):
        yield from itertools.product(*(op.sample_elements(k) for k in ks))


# ---------------------------------------------------------------------------
# image of pi

def _generated_subgroup_size(gens: list[Perm], n: int) -> int:
    seen = {Perm.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = P.compose(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def check_surjective_or_zero(op: ActionOperad, n_max: int = 5) -> dict:
    """Classify the maps ``pi_n`` for ``n <= n_max``.

    Returns ``{"result": "AllSurjective" | "AllZero" | "Violation", ...}``.
    The image of ``pi_n`` is the subgroup generated by the images of the
    generators, so only generators are needed even for infinite groups.
    """
    import math

    kinds = {}
    for n in range(2, n_max + 1):
        gens = op.generators(n) or (op.sample_elements(n) if op.finite else [])
        images = [op.pi(g) for g in gens]
        size = _generated_subgroup_size(images, n)
        if size == math.factorial(n):
            kinds[n] = "surjective"
        elif size == 1:
            kinds[n] = "zero"
        else:
            kinds[n] = "proper"
    values = set(kinds.values())
    if values == {"surjective"}:
        return {"result": "AllSurjective", "instance": op.name, "n_max": n_max}
    if values == {"zero"}:
        return {"result": "AllZero", "instance": op.name, "n_max": n_max}
    return {"result": "Violation", "instance": op.name, "n_max": n_max, "witness": kinds}


# ---------------------------------------------------------------------------
# crossed simplicial structure (0-indexed points)

def _simplicial_sizes(op: ActionOperad, g, i: int, size: int) -> list[int]:
    m = op.arity(g)
    if not 0 <= i < m:
        raise ArityError(f"index {i} out of range 0..{m - 1}")
    pos = op.pi(g).inverse()(i + 1) - 1
    ks = [1] * m
    ks[pos] = size
    return ks


def face_map(op: ActionOperad, g, i: int):
    """``d_i``: duplicate with a zero block at the position sent to point ``i``."""
    return op.duplication(g, _simplicial_sizes(op, g, i, 0))


def degeneracy_map(op: ActionOperad, g, i: int):
    """``s_i``: duplicate with a block of size two at the position sent to point ``i``."""
    return op.duplication(g, _simplicial_sizes(op, g, i, 2))


def _perm_face(g: Perm, i: int) -> Perm:
    return P.duplication(g, _perm_sizes(g, i, 0))


def _perm_degeneracy(g: Perm, i: int) -> Perm:
    return P.duplication(g, _perm_sizes(g, i, 2))


def _perm_sizes(g: Perm, i: int, size: int) -> list[int]:
    ks = [1] * g.n
    ks[g.inverse()(i + 1) - 1] = size
    return ks


def check_simplicial_identities(op: ActionOperad, n_max: int = 4, budget: SampleBudget = SampleBudget(random_cases=0)) -> list[AxiomReport]:
    """Simplicial identities for faces and degeneracies on ``Λ(m)``, ``m <= n_max + 1``.

    Degree ``n`` is the group ``Λ(n+1)``; faces go to degree ``n-1`` and are
    only composed while the result stays in degree ``>= 0``.
    """
    rng = random.Random(f"{budget.seed}:{op.name}:simplicial")
    samples: dict[int, list] = {}
    for m in range(1, n_max + 2):
        els = list(op.sample_elements(m))
        els += [op.random_element(m, rng, budget.max_word_length) for _ in range(budget.random_cases)]
        samples[m] = els

    names = ["dd", "ss", "ds-below", "ds-identity", "ds-above", "pi-simplicial"]
    runners = {k: _Runner(op, f"simplicial-{k}", budget.seed) for k in names}
    d, s = (lambda g, i: face_map(op, g, i)), (lambda g, i: degeneracy_map(op, g, i))
    for m, els in samples.items():
        n = m - 1  # simplicial degree
        for g in els:
            fmt = op.format(g)
            # d_i d_j = d_{j-1} d_i  for i < j  (needs degree >= 2 so results live in degree >= 0)
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        runners["dd"].check(d(d(g, j), i), d(d(g, i), j - 1), lambda i=i, j=j: {"g": fmt, "i": i, "j": j})
            # s_i s_j = s_{j+1} s_i  for i <= j
            for j in range(n + 1):
                for i in range(j + 1):
                    runners["ss"].check(s(s(g, j), i), s(s(g, i), j + 1), lambda i=i, j=j: {"g": fmt, "i": i, "j": j})
            for j in range(n + 1):
                sg = s(g, j)
                for i in range(n + 2):
                    why = (lambda i=i, j=j: {"g": fmt, "i": i, "j": j})
                    if i < j:
                        runners["ds-below"].check(d(sg, i), s(d(g, i), j - 1), why)
                    elif i in (j, j + 1):
                        runners["ds-identity"].check(d(sg, i), g, why)
                    else:
                        runners["ds-above"].check(d(sg, i), s(d(g, i - 1), j), why)
            p = op.pi(g)
            for i in range(n + 1):
                runners["pi-simplicial"].check_perm(op.pi(s(g, i)), _perm_degeneracy(p, i), lambda i=i: {"g": fmt, "map": f"s_{i}"})
                runners["pi-simplicial"].check_perm(op.pi(d(g, i)), _perm_face(p, i), lambda i=i: {"g": fmt, "map": f"d_{i}"})
    return [runners[k].report() for k in names]


# ---------------------------------------------------------------------------
# pseudo-commutativity

def check_pscomm_elements(op: ActionOperad, t: Callable[[int, int], Any], max_size: int = 6,
                          budget: SampleBudget = SampleBudget(random_cases=0)) -> list[AxiomReport]:
    """Element-level axioms for a choice of ``t(m, n)`` in ``Λ(mn)``.

    The projection check ``pi(t(m, n)) == transposition_perm(m, n)`` runs
    first; the remaining reports are only meaningful when it passes.
    Sizes range over ``1..max_size`` with every arity involved at most
    ``max_size`` (for Axioms 4 and 5 the sums ``M`` and ``N`` too).
    """
    S = max_size
    rng = random.Random(f"{budget.seed}:{op.name}:pscomm")
    reports = []

    r = _Runner(op, "pscomm-pi", budget.seed)
    for m in range(1, S + 1):
        for n in range(1, S + 1):
            r.check_perm(op.pi(t(m, n)), P.transposition_perm(m, n), lambda m=m, n=n: {"m": m, "n": n})
    reports.append(r.report())

    r = _Runner(op, "pscomm-1", budget.seed)
    for n in range(1, S + 1):
        r.check(t(1, n), op.identity(n), lambda n=n: {"m": 1, "n": n})
        r.check(t(n, 1), op.identity(n), lambda n=n: {"m": n, "n": 1})
    reports.append(r.report())

    r = _Runner(op, "pscomm-2", budget.seed)
    for n in range(1, S + 1):
        for m in range(1, S + 1):
            if m * n > S:
                continue
            tm = t(m, n)
            gs = list(op.sample_elements(n)) + [op.random_element(n, rng, budget.max_word_length) for _ in range(budget.random_cases)]
            hs = list(op.sample_elements(m)) + [op.random_element(m, rng, budget.max_word_length) for _ in range(budget.random_cases)]
            for g in gs:
                for h in hs:
                    lhs = op.multiply(mu(op, g, [h] * n), tm)
                    rhs = op.multiply(tm, mu(op, h, [g] * m))
                    r.check(lhs, rhs, lambda g=g, h=h, m=m, n=n: {"g": op.format(g), "h": op.format(h), "m": m, "n": n})
    reports.append(r.report())

    r = _Runner(op, "pscomm-4", budget.seed)
    for n in range(1, S + 1):
        for l in range(1, S + 1):
            for ms in itertools.product(range(1, S + 1), repeat=l):
                M = sum(ms)
                if M > S or n * M > S * S:
                    continue
                lhs = op.multiply(op.block_sum([t(n, mi) for mi in ms]), op.duplication(t(n, l), list(ms) * n))
                r.check(lhs, t(n, M), lambda n=n, ms=ms: {"n": n, "m": list(ms)})
    reports.append(r.report())

    r = _Runner(op, "pscomm-5", budget.seed)
    for l in range(1, S + 1):
        for m in range(1, S + 1):
            for ns in itertools.product(range(1, S + 1), repeat=m):
                N = sum(ns)
                if N > S:
                    continue
                sizes = [ni for ni in ns for _ in range(l)]
                lhs = op.multiply(op.duplication(t(m, l), sizes), op.block_sum([t(ni, l) for ni in ns]))
                r.check(lhs, t(N, l), lambda l=l, ns=ns: {"l": l, "n": list(ns)})
    reports.append(r.report())

    r = _Runner(op, "pscomm-symmetry", budget.seed)
    for m in range(1, S + 1):
        for n in range(1, S + 1):
            r.check(t(m, n), op.inverse(t(n, m)), lambda m=m, n=n: {"m": m, "n": n})
    reports.append(r.report())
    return reports


# ---------------------------------------------------------------------------
# kernels and images of maps of action operads

class SubActionOperad(ActionOperad):
    """A finite sub-family of a finite action operad, closed under the structure."""

    finite = True

    def __init__(self, parent: ActionOperad, members: dict[int, list], name: str):
        self.parent = parent
        self.members = {n: list(v) for n, v in members.items()}
        self.name = name
        self.n_max = max(members, default=-1)

    def arity(self, g):
        return self.parent.arity(g)

    def identity(self, n):
        return self.parent.identity(n)

    def multiply(self, g, h):
        return self.parent.multiply(g, h)

    def inverse(self, g):
        return self.parent.inverse(g)

    def pi(self, g):
        return self.parent.pi(g)

    def block_sum(self, parts):
        return self.parent.block_sum(parts)

    def duplication(self, g, ks):
        return self.parent.duplication(g, ks)

    def equal(self, g, h):
        return self.parent.equal(g, h)

    def format(self, g):
        return self.parent.format(g)

    def elements(self, n):
        if n not in self.members:
            raise BudgetError(f"{self.name} is only known up to arity {self.n_max}")
        return iter(self.members[n])

    def order(self, n):
        return len(self.members[n]) if n in self.members else None

    def contains(self, g) -> bool:
        return any(self.parent.equal(g, x) is Equality.EQUAL for x in self.members.get(self.arity(g), []))


def kernel_and_image(source: ActionOperad, target: ActionOperad, f: Callable | dict, n_max: int) -> tuple[SubActionOperad, SubActionOperad]:
    """Kernel and image of a map of finite action operads, arities ``0..n_max``.

    ``f`` is either a callable on elements or a dict ``{n: {element: image}}``.
    The map is checked to be a homomorphism at each arity, to commute with
    ``pi`` and to preserve composition where everything fits below
    ``n_max``; any violation raises :class:`InvariantError` carrying the
    witness in its message.
    """
    if isinstance(f, dict):
        tables = f

        def fn(g):
            return tables[source.arity(g)][g]
    else:
        fn = f
    kernel: dict[int, list] = {}
    image: dict[int, list] = {}
    for n in range(n_max + 1):
        els = list(source.elements(n))
        imgs = {}
        for g in els:
            x = fn(g)
            imgs[g] = x
            if target.arity(x) != n:
                raise InvariantError(f"f({source.format(g)}) has arity {target.arity(x)}, expected {n}")
            if target.pi(x) != source.pi(g):
                raise InvariantError(f"f does not commute with pi at {source.format(g)}")
        for g in els:
            for h in els:
                if target.equal(imgs[source.multiply(g, h)], target.multiply(imgs[g], imgs[h])) is not Equality.EQUAL:
                    raise InvariantError(
                        f"f is not a homomorphism at arity {n}: g={source.format(g)}, h={source.format(h)}")
        e = target.identity(n)
        kernel[n] = [g for g in els if target.equal(imgs[g], e) is Equality.EQUAL]
        uniq: list = []
        for x in imgs.values():
            if all(target.equal(x, y) is not Equality.EQUAL for y in uniq):
                uniq.append(x)
        image[n] = uniq
    # composition is preserved wherever it is defined in range
    for n in range(n_max + 1):
        for g in source.elements(n):
            for ks in _vectors(n, n_max):
                for fs in itertools.product(*(source.elements(k) for k in ks)):
                    lhs = fn(mu(source, g, list(fs)))
                    rhs = mu(target, fn(g), [fn(x) for x in fs])
                    if target.equal(lhs, rhs) is not Equality.EQUAL:
                        raise InvariantError(
                            f"f does not preserve composition at g={source.format(g)}, f={_fmt(source, fs)}")
    return (SubActionOperad(source, kernel, f"ker({source.name})"),
            SubActionOperad(target, image, f"im({source.name})"))
