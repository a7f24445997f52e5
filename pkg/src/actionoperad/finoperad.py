"""Finite, arity-truncated Λ-operads in sets.

An element of ``P(n)`` is represented as a pair ``(n, label)`` so that the
same label may be reused in different arities (the commutative operad uses
``"*"`` everywhere).  ``Λ(n)`` must be finite for every ``n <= n_max``; the
right action is tabulated on construction and composition is memoised.

Composition ``mu(p; q_1, ..., q_n)`` is defined only when ``n``, every arity
of ``q_i`` and their sum are at most ``n_max``.  All checks in this module
are exhaustive over that range and make no claim beyond it.

Conventions.  With ``g . x`` the permutation action of ``pi(g)`` on tuples
(entry ``i`` moves to position ``pi(g)(i)``), a Λ-operad satisfies

    mu(p g; q_1, ..., q_n) = mu(p; g . (q_1, ..., q_n)) delta_{k}(g)
    mu(p; q_1 g_1, ..., q_n g_n) = mu(p; q_1, ..., q_n) beta(g_1, ..., g_n)

where ``k`` lists the arities of the ``q_i``.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Callable, Hashable, Iterable, Sequence
from typing import Any

from . import perm as P
from .aopcore import ActionOperad, AxiomReport, Status
from .aopcore import mu as aop_mu
from .errors import ArityError, BudgetError, InvariantError
from .perm import Perm

__all__ = [
    "LambdaCollection",
    "TruncatedOperad",
    "FiniteAlgebra",
    "lambda_as_operad",
    "comm_operad",
    "assoc_operad",
    "endomorphism_operad",
    "pullback",
    "check_operad",
    "check_algebra",
    "count_algebras",
    "symmetrize",
    "check_unit_counit",
    "is_cartesian",
    "unit_collection",
    "substitution_product",
    "substitution_classes",
    "check_monoid_is_operad",
]

Op = tuple[int, Hashable]


def _group(lam: ActionOperad, n: int) -> list:
    if not lam.finite:
        raise BudgetError(f"{lam.name}({n}) is infinite; finite operad constructions need finite groups")
    return lam.sample_elements(n)


class LambdaCollection:
    """Sets ``X(0..n_max)`` with right ``Λ(n)``-actions, tabulated."""

    def __init__(self, lam: ActionOperad, n_max: int, sets: dict[int, Sequence[Hashable]],
                 act: Callable[[int, Hashable, Any], Hashable], name: str = "X"):
        self.lam = lam
        self.n_max = n_max
        self.name = name
        self.sets: dict[int, list[Hashable]] = {n: list(sets.get(n, ())) for n in range(n_max + 1)}
        for n, labels in self.sets.items():
            if len(set(labels)) != len(labels):
                raise InvariantError(f"repeated label in {name}({n})")
        self._act: dict[tuple[int, Hashable, Any], Hashable] = {}
        for n in range(n_max + 1):
            members = set(self.sets[n])
            for x in self.sets[n]:
                for g in _group(lam, n):
                    y = act(n, x, g)
                    if y not in members:
                        raise InvariantError(f"{name}({n}): {x!r} acted on by {lam.format(g)} leaves the set")
                    self._act[(n, x, g)] = y

    def elements(self, n: int) -> list[Op]:
        if not 0 <= n <= self.n_max:
            return []
        return [(n, x) for x in self.sets[n]]

    def all_elements(self) -> list[Op]:
        return [p for n in range(self.n_max + 1) for p in self.elements(n)]

    def act(self, p: Op, g) -> Op:
        n, x = p
        if self.lam.arity(g) != n:
            raise ArityError(f"cannot act on an arity-{n} element by an element of arity {self.lam.arity(g)}")
        return (n, self._act[(n, x, g)])

    def size(self, n: int) -> int:
        return len(self.sets.get(n, ()))

    def check_action(self) -> AxiomReport:
        """Identity and compatibility laws of every right action."""
        lam = self.lam
        cases, witness = 0, None
        for n in range(self.n_max + 1):
            G = _group(lam, n)
            e = lam.identity(n)
            for p in self.elements(n):
                cases += 1
                if self.act(p, e) != p and witness is None:
                    witness = {"p": _show(p), "law": "p.e = p"}
                for g in G:
                    pg = self.act(p, g)
                    for h in G:
                        cases += 1
                        if self.act(pg, h) != self.act(p, lam.multiply(g, h)) and witness is None:
                            witness = {"p": _show(p), "g": lam.format(g), "h": lam.format(h), "law": "(p.g).h = p.(gh)"}
        return _report("action", cases, witness, self.name)


class TruncatedOperad(LambdaCollection):
    """A Λ-operad truncated at arity ``n_max``.

    ``mu_fn(p, qs)`` receives and returns ``(arity, label)`` pairs and is only
    called for in-range inputs; results are memoised.
    """

    def __init__(self, lam: ActionOperad, n_max: int, sets: dict[int, Sequence[Hashable]],
                 act: Callable[[int, Hashable, Any], Hashable], unit: Hashable,
                 mu_fn: Callable[[Op, tuple[Op, ...]], Op], name: str = "P"):
        super().__init__(lam, n_max, sets, act, name)
        if n_max < 1 or unit not in self.sets[1]:
            raise InvariantError(f"unit {unit!r} is not an element of {name}(1)")
        self.unit: Op = (1, unit)
        self._mu_fn = mu_fn
        self._mu: dict[tuple[Op, tuple[Op, ...]], Op] = {}

    def in_range(self, p: Op, qs: Sequence[Op]) -> bool:
        return p[0] == len(qs) and p[0] <= self.n_max and sum(q[0] for q in qs) <= self.n_max

    def mu(self, p: Op, qs: Sequence[Op]) -> Op:
        qs = tuple(qs)
        if len(qs) != p[0]:
            raise ArityError(f"composition at arity {p[0]} needs {p[0]} inputs, got {len(qs)}")
        if not self.in_range(p, qs):
            raise ArityError(f"composite arity {sum(q[0] for q in qs)} exceeds the truncation {self.n_max}")
        key = (p, qs)
        if key not in self._mu:
            r = self._mu_fn(p, qs)
            k = sum(q[0] for q in qs)
            if r[0] != k or r[1] not in self.sets[k]:
                raise InvariantError(f"composite {r!r} is not an element of {self.name}({k})")
            self._mu[key] = r
        return self._mu[key]

    def composable(self, p: Op) -> Iterable[tuple[Op, ...]]:
        """All input tuples for ``p`` whose composite stays in range."""
        n = p[0]
        for ks in _size_vectors(n, self.n_max):
            yield from itertools.product(*(self.elements(k) for k in ks))

    # -- serialisation ----------------------------------------------------

    def to_json(self) -> str:
        """Canonical JSON; group elements are referred to by their index in ``Λ(n)``."""
        labels = {n: [str(x) for x in self.sets[n]] for n in range(self.n_max + 1)}
        index = {n: {x: i for i, x in enumerate(self.sets[n])} for n in range(self.n_max + 1)}
        action = []
        for n in range(self.n_max + 1):
            G = _group(self.lam, n)
            action.append([[index[n][self._act[(n, x, g)]] for g in G] for x in self.sets[n]])
        mu = []
        for p in self.all_elements():
            for qs in self.composable(p):
                r = self.mu(p, qs)
                mu.append([p[0], [q[0] for q in qs], [index[p[0]][p[1]]] + [index[q[0]][q[1]] for q in qs],
                           index[r[0]][r[1]]])
        data = {
            "lambda": self.lam.name,
            "name": self.name,
            "n_max": self.n_max,
            "sets": [labels[n] for n in range(self.n_max + 1)],
            "unit": index[1][self.unit[1]],
            "action": action,
            "mu": mu,
        }
        return json.dumps(data, separators=(",", ":"), sort_keys=True)

    @classmethod
    def from_json(cls, text: str, lam: ActionOperad | None = None) -> "TruncatedOperad":
        from .instances import get_instance

        data = json.loads(text)
        lam = lam or get_instance(data["lambda"])
        n_max = data["n_max"]
        sets = {n: list(labels) for n, labels in enumerate(data["sets"])}
        groups = {n: {g: i for i, g in enumerate(_group(lam, n))} for n in range(n_max + 1)}
        action = data["action"]

        def act(n, x, g):
            return sets[n][action[n][sets[n].index(x)][groups[n][g]]]

        table = {}
        for n, ks, idx, out in data["mu"]:
            key = ((n, sets[n][idx[0]]), tuple((k, sets[k][i]) for k, i in zip(ks, idx[1:])))
            table[key] = (sum(ks), sets[sum(ks)][out])

        def mu_fn(p, qs):
            return table[(p, qs)]

        return cls(lam, n_max, sets, act, sets[1][data["unit"]], mu_fn, data.get("name", "P"))


def _size_vectors(n: int, total: int) -> Iterable[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _size_vectors(n - 1, total - first):
            yield (first,) + rest


def _show(p: Op) -> str:
    return f"{p[1]}@{p[0]}"


def _report(axiom_id: str, cases: int, witness: dict | None, instance: str, extra: dict | None = None) -> AxiomReport:
    status = Status.FAIL if witness is not None else Status.PASS
    return AxiomReport(axiom_id, status, cases, None, witness, instance, extra or {})


# ---------------------------------------------------------------------------
# standard operads

def lambda_as_operad(lam: ActionOperad, n_max: int, action: str = "regular") -> TruncatedOperad:
    """``Λ`` itself as a Λ-operad, composition being the operadic composition of ``Λ``.

    ``action="regular"`` uses right multiplication.  ``action="trivial"``
    keeps the same composition but lets ``Λ`` act trivially; this is a
    Λ-operad exactly when ``pi`` is the zero map.
    """
    if action not in ("regular", "trivial"):
        raise ValueError(f"unknown action {action!r}")
    sets = {n: _group(lam, n) for n in range(n_max + 1)}
    if action == "regular":
        def act(n, x, g):
            return lam.multiply(x, g)
    else:
        def act(n, x, g):
            return x

    def mu_fn(p, qs):
        r = aop_mu(lam, p[1], [q[1] for q in qs])
        return (lam.arity(r), r)

    name = f"{lam.name}-as-operad" + ("" if action == "regular" else "-trivial")
    return TruncatedOperad(lam, n_max, sets, act, lam.identity(1), mu_fn, name)


def assoc_operad(lam: ActionOperad, n_max: int) -> TruncatedOperad:
    """The operad whose algebras are monoids: ``Λ`` with its regular action."""
    return lambda_as_operad(lam, n_max, "regular")


def comm_operad(lam: ActionOperad, n_max: int) -> TruncatedOperad:
    """One operation in every arity, acted on trivially."""
    sets = {n: ["*"] for n in range(n_max + 1)}
    return TruncatedOperad(lam, n_max, sets, lambda n, x, g: x, "*",
                           lambda p, qs: (sum(q[0] for q in qs), "*"), "comm")


def endomorphism_operad(X: Sequence[Hashable], lam: ActionOperad, n_max: int) -> TruncatedOperad:
    """All maps ``X^n -> X`` as value tables, acted on through ``pi``.

    A map ``f`` of arity ``n`` is the tuple of its values on ``X^n`` listed
    in lexicographic order of argument indices.  ``(f.g)(xs) = f(g . xs)``.
    """
    X = list(X)
    if len(X) > 3 or n_max > 2:
        raise BudgetError("endomorphism operads are limited to |X| <= 3 and n_max <= 2")
    m = len(X)
    sets = {n: list(itertools.product(range(m), repeat=m ** n)) for n in range(n_max + 1)}
    args = {n: list(itertools.product(range(m), repeat=n)) for n in range(n_max + 1)}

    def act(n, f, g):
        pg = lam.pi(g)
        return tuple(f[_index(P.act_on_tuple(pg, xs), m)] for xs in args[n])

    def mu_fn(p, qs):
        n, f = p
        k = sum(q[0] for q in qs)
        out = []
        for xs in args[k]:
            vals, pos = [], 0
            for a, q in qs:
                vals.append(q[_index(xs[pos:pos + a], m)])
                pos += a
            out.append(f[_index(vals, m)])
        return (k, tuple(out))

    return TruncatedOperad(lam, n_max, sets, act, tuple(range(m)), mu_fn, f"End({m})")


def _index(xs: Sequence[int], m: int) -> int:
    i = 0
    for x in xs:
        i = i * m + x
    return i


def pullback(Q: TruncatedOperad, lam: ActionOperad) -> TruncatedOperad:
    """Restrict a symmetric operad ``Q`` along ``pi``: ``Λ(n)`` acts through ``pi(g)``."""
    def act(n, x, g):
        return Q.act((n, x), lam.pi(g))[1]

    out = TruncatedOperad(lam, Q.n_max, Q.sets, act, Q.unit[1], Q.mu, f"pi*{Q.name}")
    out.perm_action = Q.act
    return out


# ---------------------------------------------------------------------------
# operad laws

def check_operad(Pd: TruncatedOperad) -> list[AxiomReport]:
    """Action laws, unit, associativity and both equivariance laws, in range."""
    lam = Pd.lam
    reports = [Pd.check_action()]
    u = Pd.unit

    cases, witness = 0, None
    for p in Pd.all_elements():
        cases += 2
        if p[0] <= Pd.n_max and Pd.mu(u, (p,)) != p and witness is None:
            witness = {"p": _show(p), "law": "mu(id; p) = p"}
        if Pd.mu(p, (u,) * p[0]) != p and witness is None:
            witness = {"p": _show(p), "law": "mu(p; id, ..., id) = p"}
    reports.append(_report("unit", cases, witness, Pd.name))

    cases, witness = 0, None
    for p in Pd.all_elements():
        for qs in Pd.composable(p):
            k = sum(q[0] for q in qs)
            for ks in _size_vectors(k, Pd.n_max):
                for rs in itertools.product(*(Pd.elements(j) for j in ks)):
                    cases += 1
                    lhs = Pd.mu(Pd.mu(p, qs), rs)
                    inner, pos = [], 0
                    for q in qs:
                        inner.append(Pd.mu(q, rs[pos:pos + q[0]]))
                        pos += q[0]
                    rhs = Pd.mu(p, inner)
                    if lhs != rhs and witness is None:
                        witness = {"p": _show(p), "q": [_show(q) for q in qs], "r": [_show(r) for r in rs],
                                   "lhs": _show(lhs), "rhs": _show(rhs)}
    reports.append(_report("associativity", cases, witness, Pd.name))

    cases, w1, w2, w3 = 0, None, None, None
    for p in Pd.all_elements():
        n = p[0]
        for qs in Pd.composable(p):
            ks = [q[0] for q in qs]
            base = Pd.mu(p, qs)
            for g in _group(lam, n):
                cases += 1
                lhs = Pd.mu(Pd.act(p, g), qs)
                moved = P.act_on_tuple(lam.pi(g), qs)
                rhs = Pd.act(Pd.mu(p, moved), lam.duplication(g, ks))
                if lhs != rhs and w1 is None:
                    w1 = {"p": _show(p), "g": lam.format(g), "q": [_show(q) for q in qs],
                          "lhs": _show(lhs), "rhs": _show(rhs)}
            for gs in itertools.product(*(_group(lam, k) for k in ks)):
                lhs = Pd.mu(p, [Pd.act(q, gi) for q, gi in zip(qs, gs)])
                rhs = Pd.act(base, lam.block_sum(gs))
                if lhs != rhs and w2 is None:
                    w2 = {"p": _show(p), "q": [_show(q) for q in qs], "g": [lam.format(x) for x in gs],
                          "lhs": _show(lhs), "rhs": _show(rhs)}
                for g in _group(lam, n):
                    # combined single equality
                    lhs = Pd.mu(Pd.act(p, g), [Pd.act(q, gi) for q, gi in zip(qs, gs)])
                    moved = P.act_on_tuple(lam.pi(g), qs)
                    rhs = Pd.act(Pd.mu(p, moved), aop_mu(lam, g, list(gs)))
                    if lhs != rhs and w3 is None:
                        w3 = {"p": _show(p), "g": lam.format(g), "q": [_show(q) for q in qs],
                              "g_i": [lam.format(x) for x in gs], "lhs": _show(lhs), "rhs": _show(rhs)}
    reports.append(_report("equivariance-top", cases, w1, Pd.name))
    reports.append(_report("equivariance-inputs", cases, w2, Pd.name))
    reports.append(_report("equivariance-combined", cases, w3, Pd.name))
    return reports


# ---------------------------------------------------------------------------
# algebras

class FiniteAlgebra:
    """An algebra structure on a finite carrier, as value tables.

    ``alpha[p]`` is the tuple of values of the action of ``p`` on ``X^n``,
    indexed like :func:`endomorphism_operad` (carrier indices, lexicographic).
    """

    def __init__(self, carrier: Sequence[Hashable], alpha: dict[Op, tuple[int, ...]]):
        self.carrier = list(carrier)
        self.alpha = dict(alpha)

    @classmethod
    def from_function(cls, Pd: TruncatedOperad, carrier: Sequence[Hashable],
                      fn: Callable[[Op, tuple], Hashable]) -> "FiniteAlgebra":
        """Tabulate ``fn(p, xs)`` (carrier values in, carrier value out)."""
        carrier = list(carrier)
        where = {x: i for i, x in enumerate(carrier)}
        alpha = {}
        for p in Pd.all_elements():
            alpha[p] = tuple(where[fn(p, tuple(carrier[i] for i in idx))]
                             for idx in itertools.product(range(len(carrier)), repeat=p[0]))
        return cls(carrier, alpha)

    def apply(self, p: Op, xs: Sequence[int]) -> int:
        return self.alpha[p][_index(xs, len(self.carrier))]


def check_algebra(Pd: TruncatedOperad, A: FiniteAlgebra) -> list[AxiomReport]:
    """Unit, associativity and equivariance of an algebra, in range."""
    lam = Pd.lam
    m = len(A.carrier)
    reports = []

    witness = None
    for x in range(m):
        if A.apply(Pd.unit, (x,)) != x and witness is None:
            witness = {"x": A.carrier[x], "law": "alpha(id; x) = x"}
    reports.append(_report("algebra-unit", m, witness, Pd.name))

    cases, witness = 0, None
    for p in Pd.all_elements():
        for qs in Pd.composable(p):
            r = Pd.mu(p, qs)
            k = r[0]
            for xs in itertools.product(range(m), repeat=k):
                cases += 1
                vals, pos = [], 0
                for q in qs:
                    vals.append(A.apply(q, xs[pos:pos + q[0]]))
                    pos += q[0]
                if A.apply(r, xs) != A.apply(p, vals) and witness is None:
                    witness = {"p": _show(p), "q": [_show(q) for q in qs], "x": [A.carrier[i] for i in xs]}
    reports.append(_report("algebra-associativity", cases, witness, Pd.name))

    cases, witness = 0, None
    for p in Pd.all_elements():
        for g in _group(lam, p[0]):
            pg = Pd.act(p, g)
            for xs in itertools.product(range(m), repeat=p[0]):
                cases += 1
                if A.apply(pg, xs) != A.apply(p, P.act_on_tuple(lam.pi(g), xs)) and witness is None:
                    witness = {"p": _show(p), "g": lam.format(g), "x": [A.carrier[i] for i in xs]}
    reports.append(_report("algebra-equivariance", cases, witness, Pd.name))
    return reports


def _orbit_data(C: LambdaCollection, n: int):
    """Orbit representatives of ``C(n)``, a transversal and stabilisers."""
    G = _group(C.lam, n)
    rep_of: dict[Op, tuple[Op, Any]] = {}
    reps = []
    stabs = {}
    for p in C.elements(n):
        if p in rep_of:
            continue
        reps.append(p)
        stabs[p] = []
        for g in G:
            q = C.act(p, g)
            if q == p:
                stabs[p].append(g)
            rep_of.setdefault(q, (p, g))
    return reps, rep_of, stabs


def count_algebras(Pd: TruncatedOperad, carrier_size: int, limit: int = 10_000_000) -> int:
    """Count algebra structures on a carrier of the given size by backtracking.

    Unknowns are the values on one representative per orbit; every other
    value follows by equivariance.  Each composition constraint is checked as
    soon as the last representative it mentions has been assigned.
    """
    lam = Pd.lam
    m = carrier_size
    args = {n: list(itertools.product(range(m), repeat=n)) for n in range(Pd.n_max + 1)}
    order: list[Op] = []
    rep_of: dict[Op, tuple[Op, Any]] = {}
    stabs = {}
    for n in range(Pd.n_max + 1):
        reps, ro, st = _orbit_data(Pd, n)
        order.extend(reps)
        rep_of.update(ro)
        stabs.update(st)
    position = {p: i for i, p in enumerate(order)}
    perm_cache = {}

    def moved(f, n, g):
        # (f.g)(xs) = f(pi(g) . xs)
        key = (n, g)
        if key not in perm_cache:
            pg = lam.pi(g)
            perm_cache[key] = [_index(P.act_on_tuple(pg, xs), m) for xs in args[n]]
        return tuple(f[i] for i in perm_cache[key])

    constraints: list[list[tuple[Op, tuple[Op, ...], Op]]] = [[] for _ in order]
    for p in Pd.all_elements():
        for qs in Pd.composable(p):
            r = Pd.mu(p, qs)
            last = max(position[rep_of[x][0]] for x in (p, r, *qs))
            constraints[last].append((p, qs, r))

    values: dict[Op, tuple[int, ...]] = {}

    def value(x: Op):
        rep, g = rep_of[x]
        return moved(values[rep], x[0], g)

    def ok(idx: int) -> bool:
        rep = order[idx]
        f = values[rep]
        n = rep[0]
        for s in stabs[rep]:
            if moved(f, n, s) != f:
                return False
        if rep_of[Pd.unit][0] == rep:
            if value(Pd.unit) != tuple(range(m)):
                return False
        for p, qs, r in constraints[idx]:
            fp = value(p)
            fq = [value(q) for q in qs]
            fr = value(r)
            for j, xs in enumerate(args[r[0]]):
                vals, pos = [], 0
                for q, t in zip(qs, fq):
                    vals.append(t[_index(xs[pos:pos + q[0]], m)])
                    pos += q[0]
                if fr[j] != fp[_index(vals, m)]:
                    return False
        return True

    count = 0
    choices = {n: list(itertools.product(range(m), repeat=m ** n)) for n in range(Pd.n_max + 1)}

    def go(idx: int):
        nonlocal count
        if idx == len(order):
            count += 1
            if count > limit:
                raise BudgetError("too many algebras to count")
            return
        rep = order[idx]
        for f in choices[rep[0]]:
            values[rep] = f
            if ok(idx):
                go(idx + 1)
        del values[rep]

    go(0)
    return count


# ---------------------------------------------------------------------------
# symmetrisation

def _sym_label(p: Op, tau: Perm) -> tuple:
    return (p[1], tau.images)


def symmetrize(Pd: TruncatedOperad) -> TruncatedOperad:
    """The symmetric operad ``pi_!(P)``.

    ``pi_!(P)(n)`` is the set of classes of pairs ``(p, tau)`` with
    ``p`` in ``P(n)`` and ``tau`` in ``Sigma(n)``.  The pairs ``(p g, tau)``
    and ``(p, pi(g) tau)`` are identified.  Each class is labelled by its
    smallest member under a fixed serialisation.
    """
    from .instances.sigma import SymmetricOperad

    lam = Pd.lam
    sigma = SymmetricOperad()
    canon: dict[tuple[Op, Perm], tuple] = {}
    members: dict[int, list[tuple]] = {}
    for n in range(Pd.n_max + 1):
        G = _group(lam, n)
        labels = []
        for p in Pd.elements(n):
            for tau in P.all_perms(n):
                if (p, tau) in canon:
                    continue
                orbit = [(Pd.act(p, g), P.compose(lam.pi(g).inverse(), tau)) for g in G]
                label = min((repr(q[1]), t.images) for q, t in orbit)
                for q, t in orbit:
                    canon[(q, t)] = label
                labels.append(label)
        members[n] = labels
    # a representative pair for every class
    rep: dict[tuple[int, tuple], tuple[Op, Perm]] = {}
    for (q, t), label in canon.items():
        rep.setdefault((q[0], label), (q, t))

    def act(n, label, rho):
        q, t = rep[(n, label)]
        return canon[(q, P.compose(t, rho))]

    def mu_fn(x, ys):
        n = x[0]
        p, tau = rep[x]
        parts = [rep[y] for y in ys]
        tinv = tau.inverse()
        moved = [parts[tinv(i) - 1][0] for i in range(1, n + 1)]
        q = Pd.mu(p, moved)
        t = P.mu_sigma(tau, [pt[1] for pt in parts])
        return (q[0], canon[(q, t)])

    out = TruncatedOperad(sigma, Pd.n_max, members, act, canon[(Pd.unit, Perm.identity(1))], mu_fn,
                          f"sym({Pd.name})")
    out.class_of = lambda p, tau: (p[0], canon[(p, tau)])
    out.representative = lambda x: rep[x]
    return out


def check_unit_counit(Pd: TruncatedOperad, direction: str) -> dict:
    """Bijectivity of the unit ``p -> [p, e]`` or the counit ``[q, tau] -> q tau``.

    For ``direction="unit"``, ``Pd`` is any Λ-operad.  For
    ``direction="counit"``, ``Pd`` must be a pullback ``pi*(Q)`` of a
    symmetric operad (see :func:`pullback`), so ``q tau`` makes sense.
    Returns per-arity flags and, where injectivity fails, two classes with
    the same image.
    """
    if direction not in ("unit", "counit"):
        raise ValueError(f"unknown direction {direction!r}")
    S = symmetrize(Pd)
    lam = Pd.lam
    per_arity = {}
    witness = None
    for n in range(Pd.n_max + 1):
        if direction == "unit":
            images = {}
            for p in Pd.elements(n):
                images.setdefault(S.class_of(p, Perm.identity(n)), []).append(p)
            injective = all(len(v) == 1 for v in images.values())
            surjective = len(images) == S.size(n)
            if not injective and witness is None:
                pair = next(v for v in images.values() if len(v) > 1)[:2]
                witness = {"arity": n, "elements": [_show(x) for x in pair]}
        else:
            images = {}
            for x in S.elements(n):
                q, tau = S.representative(x)
                img = _act_by_perm(Pd, q, tau)
                images.setdefault(img, []).append(x)
            injective = all(len(v) == 1 for v in images.values())
            surjective = set(images) == set(Pd.elements(n))
            if not injective and witness is None:
                pair = next(v for v in images.values() if len(v) > 1)[:2]
                witness = {"arity": n, "classes": [_format_class(S, c) for c in pair],
                           "image": _show(next(k for k, v in images.items() if len(v) > 1))}
        per_arity[n] = {"injective": injective, "surjective": surjective, "bijective": injective and surjective}
    bijective = all(v["bijective"] for v in per_arity.values())
    out = {"direction": direction, "operad": Pd.name, "lambda": lam.name, "per_arity": per_arity,
           "bijective": bijective}
    if witness is not None:
        out["witness"] = witness
    return out


def _act_by_perm(Pd: TruncatedOperad, q: Op, tau: Perm) -> Op:
    acted = getattr(Pd, "perm_action", None)
    if acted is None:
        raise InvariantError(f"{Pd.name} is not a pullback of a symmetric operad")
    return acted(q, tau)


def _format_class(S: TruncatedOperad, x: Op) -> str:
    q, tau = S.representative(x)
    return f"[{q[1]}, {_cycle_or_e(tau)}]"


def _cycle_or_e(tau: Perm) -> str:
    return "e" if tau.is_identity() else P.format_perm(tau, "cycle")


# ---------------------------------------------------------------------------
# cartesian criterion

def is_cartesian(C: LambdaCollection) -> dict:
    """Cartesian iff every stabilising pair ``p g = p`` has ``pi(g) = e``."""
    lam = C.lam
    for n in range(C.n_max + 1):
        for p in C.elements(n):
            for g in _group(lam, n):
                if not lam.pi(g).is_identity() and C.act(p, g) == p:
                    witness = {"p": p[1], "arity": n, "g": lam.format(g), "pi_g": _cycle_or_e(lam.pi(g))}
                    return {"result": "NotCartesian", "witness": witness}
    return {"result": "Cartesian"}


# ---------------------------------------------------------------------------
# substitution product

def unit_collection(lam: ActionOperad, n_max: int) -> LambdaCollection:
    """``I(1) = Λ(1)`` with the regular action, empty elsewhere."""
    return LambdaCollection(lam, n_max, {1: _group(lam, 1)}, lambda n, x, g: lam.multiply(x, g), "I")


def _sub_tuples(X: LambdaCollection, Y: LambdaCollection, k: int):
    lam = X.lam
    n_max = min(X.n_max, Y.n_max)
    Gk = _group(lam, k)
    for r in range(n_max + 1):
        for x in X.elements(r):
            for ks in _size_vectors(r, k):
                if sum(ks) != k:
                    continue
                for ys in itertools.product(*(Y.elements(j) for j in ks)):
                    for g in Gk:
                        yield (x, ys, g)


def _sub_neighbours(X: LambdaCollection, Y: LambdaCollection, t, generators: bool):
    lam = X.lam
    x, ys, g = t
    r = x[0]
    ks = [y[0] for y in ys]
    hs = lam.generators(r) if generators else _group(lam, r)
    for h in hs:
        # (x h; ys; g) ~ (x; h . ys; delta_k(h) g)
        yield (X.act(x, h), ys, g), (x, P.act_on_tuple(lam.pi(h), ys), lam.multiply(lam.duplication(h, ks), g))
    for i, k in enumerate(ks):
        gs = lam.generators(k) if generators else _group(lam, k)
        for gi in gs:
            # (x; .., y_i g_i, ..; g) ~ (x; ..; beta(e, .., g_i, .., e) g)
            parts = [lam.identity(j) for j in ks]
            parts[i] = gi
            new = list(ys)
            new[i] = Y.act(ys[i], gi)
            yield (x, tuple(new), g), (x, ys, lam.multiply(lam.block_sum(parts), g))


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def substitution_classes(X: LambdaCollection, Y: LambdaCollection, k: int, max_tuples: int = 200_000) -> list[list]:
    """Classes of ``(x; y_1..y_r; g)`` in ``(X o Y)(k)``, via union-find on generating relations.

    Each class is returned as a sorted list of its members; classes are
    sorted by their first member's serialisation, so output is deterministic.
    """
    if X.lam is not Y.lam and X.lam.name != Y.lam.name:
        raise InvariantError("collections over different action operads")
    if k > min(X.n_max, Y.n_max):
        raise ArityError(f"arity {k} exceeds the truncation")
    tuples = list(_sub_tuples(X, Y, k))
    if len(tuples) > max_tuples:
        raise BudgetError(f"{len(tuples)} tuples exceed the budget of {max_tuples}")
    uf = _UnionFind()
    for t in tuples:
        uf.find(t)
        for a, b in _sub_neighbours(X, Y, t, generators=True):
            uf.union(a, b)
    groups: dict = {}
    for t in tuples:
        groups.setdefault(uf.find(t), []).append(t)
    classes = [sorted(v, key=repr) for v in groups.values()]
    classes.sort(key=lambda c: repr(c[0]))
    return classes


def substitution_product(X: LambdaCollection, Y: LambdaCollection, k: int) -> int:
    """The number of classes in ``(X o Y)(k)``."""
    return len(substitution_classes(X, Y, k))


def check_monoid_is_operad(Pd: TruncatedOperad) -> list[AxiomReport]:
    """Read ``mu`` as a multiplication ``P o P -> P`` and check the monoid laws in range.

    The multiplication sends ``[x; y_1..y_n; g]`` to ``mu(x; y_1..y_n) g``.
    Checks: it is constant on classes, the two unit triangles with
    ``I -> P, a -> id.a`` commute, and the associativity square commutes.
    """
    lam = Pd.lam
    reports = []

    def m(t):
        x, ys, g = t
        return Pd.act(Pd.mu(x, ys), g)

    cases, witness = 0, None
    for k in range(Pd.n_max + 1):
        for t in _sub_tuples(Pd, Pd, k):
            for a, b in _sub_neighbours(Pd, Pd, t, generators=False):
                cases += 1
                if m(a) != m(b) and witness is None:
                    witness = {"lhs_tuple": _show_tuple(a), "rhs_tuple": _show_tuple(b),
                               "lhs": _show(m(a)), "rhs": _show(m(b))}
    reports.append(_report("monoid-well-defined", cases, witness, Pd.name))

    cases, witness = 0, None
    for a in _group(lam, 1):
        ua = Pd.act(Pd.unit, a)
        for k in range(Pd.n_max + 1):
            for y in Pd.elements(k):
                for g in _group(lam, k):
                    cases += 2
                    left = Pd.act(Pd.mu(ua, (y,)), g)
                    expect = Pd.act(y, lam.multiply(lam.duplication(a, (k,)), g))
                    if left != expect and witness is None:
                        witness = {"side": "left", "a": lam.format(a), "y": _show(y), "g": lam.format(g)}
                    right = Pd.act(Pd.mu(y, (ua,) * k), g)
                    expect = Pd.act(y, lam.multiply(lam.block_sum([a] * k), g))
                    if right != expect and witness is None:
                        witness = {"side": "right", "a": lam.format(a), "y": _show(y), "g": lam.format(g)}
    reports.append(_report("monoid-unit", cases, witness, Pd.name))

    cases, witness = 0, None
    for x in Pd.all_elements():
        for ys in Pd.composable(x):
            k = sum(y[0] for y in ys)
            for ks in _size_vectors(k, Pd.n_max):
                for zs in itertools.product(*(Pd.elements(j) for j in ks)):
                    inner, pos = [], 0
                    for y in ys:
                        inner.append((y, tuple(zs[pos:pos + y[0]]), lam.identity(sum(z[0] for z in zs[pos:pos + y[0]]))))
                        pos += y[0]
                    total = sum(z[0] for z in zs)
                    for g in _group(lam, total):
                        cases += 1
                        lhs = m((m((x, ys, lam.identity(k))), zs, g))
                        rhs = m((x, tuple(m(t) for t in inner), g))
                        if lhs != rhs and witness is None:
                            witness = {"x": _show(x), "y": [_show(y) for y in ys], "z": [_show(z) for z in zs],
                                       "g": lam.format(g)}
    reports.append(_report("monoid-associativity", cases, witness, Pd.name))
    return reports


def _show_tuple(t) -> str:
    x, ys, g = t
    return f"({_show(x)}; {', '.join(_show(y) for y in ys)}; {g})"
