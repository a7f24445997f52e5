"""The free Λ-monoidal category on a finite category.

Objects of ``EΛ(X)`` are tuples of objects of ``X``.  There are no morphisms
between tuples of different lengths.  A morphism ``(x_1..x_n) -> (y_1..y_n)``
is a group element ``g`` of ``Λ(n)`` together with morphisms
``f_i: x_i -> y_{pi(g)(i)}`` of ``X``.  Composition multiplies the group
parts and composes components along ``pi``:

    (h, k) . (g, f) = (h g, (k_{pi(g)(i)} . f_i)_i)

Tensor concatenates tuples and takes block sums of group parts.  Hom-sets are
counted exactly when ``Λ(n)`` is finite.  For infinite ``Λ(n)`` only the
components over a given ``g`` can be listed.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Callable, Hashable, Iterator, Sequence
from dataclasses import dataclass

from .aopcore import ActionOperad, AxiomReport, Equality, Status
from .errors import BudgetError, CompositionError, InvariantError

__all__ = [
    "FiniteCategory",
    "discrete_category",
    "translation_category",
    "delooping",
    "terminal_category",
    "FreeMonCatMorphism",
    "FreeMonoidalCategory",
    "hom_count",
    "el_one_is_blambda",
]


class FiniteCategory:
    """A finite category given by explicit tables.

    ``homs[(a, b)]`` lists the morphism labels from ``a`` to ``b`` (labels
    are unique across the whole category), ``ids[a]`` is the identity on
    ``a`` and ``compose[(g, f)]`` is ``g . f`` for ``f: a -> b``, ``g: b -> c``.
    """

    def __init__(self, objects: Sequence[Hashable], homs: dict[tuple, Sequence[Hashable]],
                 compose: dict[tuple, Hashable], ids: dict[Hashable, Hashable], name: str = "X"):
        self.objects = list(objects)
        self.homs = {(a, b): list(homs.get((a, b), ())) for a in self.objects for b in self.objects}
        self.compose_table = dict(compose)
        self.ids = dict(ids)
        self.name = name
        self.ends: dict[Hashable, tuple] = {}
        for (a, b), fs in self.homs.items():
            for f in fs:
                if f in self.ends:
                    raise InvariantError(f"morphism label {f!r} is used twice")
                self.ends[f] = (a, b)
        for a in self.objects:
            if self.ends.get(self.ids.get(a)) != (a, a):
                raise InvariantError(f"identity of {a!r} is missing or has the wrong ends")

    def source(self, f) -> Hashable:
        return self.ends[f][0]

    def target(self, f) -> Hashable:
        return self.ends[f][1]

    def hom(self, a, b) -> list:
        return self.homs.get((a, b), [])

    def compose(self, g, f):
        """``g . f`` (first ``f``, then ``g``)."""
        if self.target(f) != self.source(g):
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        return self.compose_table[(g, f)]

    def morphisms(self) -> list:
        return [f for fs in self.homs.values() for f in fs]

    def check_laws(self) -> AxiomReport:
        cases, witness = 0, None
        for f in self.morphisms():
            a, b = self.ends[f]
            cases += 1
            if (self.compose(f, self.ids[a]) != f or self.compose(self.ids[b], f) != f) and witness is None:
                witness = {"f": f, "law": "identity"}
            for g in self.morphisms():
                if self.source(g) != b:
                    continue
                gf = self.compose(g, f)
                if self.ends[gf] != (a, self.target(g)) and witness is None:
                    witness = {"f": f, "g": g, "law": "composite has wrong ends"}
                for h in self.morphisms():
                    if self.source(h) != self.target(g):
                        continue
                    cases += 1
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) and witness is None:
                        witness = {"f": f, "g": g, "h": h, "law": "associativity"}
        status = Status.FAIL if witness else Status.PASS
        return AxiomReport("category-laws", status, cases, None, witness, self.name)

    def to_json(self) -> str:
        data = {
            "objects": [str(a) for a in self.objects],
            "homs": [[str(a), str(b), [str(f) for f in fs]] for (a, b), fs in self.homs.items() if fs],
            "compose": sorted([str(g), str(f), str(h)] for (g, f), h in self.compose_table.items()),
            "ids": {str(a): str(f) for a, f in self.ids.items()},
        }
        return json.dumps(data, separators=(",", ":"), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FiniteCategory":
        data = json.loads(text)
        homs = {(a, b): fs for a, b, fs in data["homs"]}
        compose = {(g, f): h for g, f, h in data["compose"]}
        return cls(data["objects"], homs, compose, data["ids"])


def discrete_category(objects: Sequence[Hashable]) -> FiniteCategory:
    ids = {a: f"id_{a}" for a in objects}
    homs = {(a, a): [ids[a]] for a in objects}
    compose = {(ids[a], ids[a]): ids[a] for a in objects}
    return FiniteCategory(objects, homs, compose, ids, "discrete")


def terminal_category() -> FiniteCategory:
    return discrete_category(["*"])


def translation_category(S: Sequence[Hashable]) -> FiniteCategory:
    """``E S``: objects ``S`` and exactly one morphism between any two of them."""
    S = list(S)
    homs = {(a, b): [(a, b)] for a in S for b in S}
    compose = {((b, c), (a, b)): (a, c) for a in S for b in S for c in S}
    ids = {a: (a, a) for a in S}
    return FiniteCategory(S, homs, compose, ids, "E")


def delooping(elements: Sequence[Hashable], multiply: Callable, identity: Hashable, obj: Hashable = "*") -> FiniteCategory:
    """``B G``: one object whose endomorphisms are the group ``G``; ``g . f = multiply(g, f)``."""
    elements = list(elements)
    compose = {(g, f): multiply(g, f) for g in elements for f in elements}
    return FiniteCategory([obj], {(obj, obj): elements}, compose, {obj: identity}, "B")


@dataclass(frozen=True)
class FreeMonCatMorphism:
    source: tuple
    target: tuple
    g: object
    components: tuple

    def __repr__(self) -> str:
        return f"FreeMonCatMorphism({self.source} -> {self.target}, g={self.g}, {list(self.components)})"


class FreeMonoidalCategory:
    """``EΛ(X)`` computed on demand."""

    def __init__(self, lam: ActionOperad, X: FiniteCategory):
        self.lam = lam
        self.X = X

    def identity(self, xs: Sequence) -> FreeMonCatMorphism:
        xs = tuple(xs)
        return FreeMonCatMorphism(xs, xs, self.lam.identity(len(xs)), tuple(self.X.ids[x] for x in xs))

    def morphism(self, g, components: Sequence) -> FreeMonCatMorphism:
        """Build ``(g, f_1..f_n)`` and read off source and target from the components."""
        comps = tuple(components)
        n = self.lam.arity(g)
        if len(comps) != n:
            raise CompositionError(f"{n} components expected, got {len(comps)}")
        pg = self.lam.pi(g)
        source = tuple(self.X.source(f) for f in comps)
        target = [None] * n
        for i, f in enumerate(comps, 1):
            target[pg(i) - 1] = self.X.target(f)
        return FreeMonCatMorphism(source, tuple(target), g, comps)

    def components_over(self, g, xs: Sequence, ys: Sequence) -> Iterator[tuple]:
        """All component tuples ``f_i: x_i -> y_{pi(g)(i)}`` over a fixed ``g``."""
        if len(xs) != len(ys) or self.lam.arity(g) != len(xs):
            return iter(())
        pg = self.lam.pi(g)
        choices = [self.X.hom(x, ys[pg(i) - 1]) for i, x in enumerate(xs, 1)]
        return itertools.product(*choices)

    def hom(self, xs: Sequence, ys: Sequence) -> Iterator[FreeMonCatMorphism]:
        xs, ys = tuple(xs), tuple(ys)
        if len(xs) != len(ys):
            return
        if not self.lam.finite:
            raise BudgetError(f"hom-sets of E{self.lam.name} are infinite; use components_over")
        for g in self.lam.sample_elements(len(xs)):
            for comps in self.components_over(g, xs, ys):
                yield FreeMonCatMorphism(xs, ys, g, comps)

    def hom_count(self, xs: Sequence, ys: Sequence) -> int:
        """``sum over g of prod_i |X(x_i, y_{pi(g)(i)})|``."""
        if len(xs) != len(ys):
            return 0
        if not self.lam.finite:
            raise BudgetError(f"hom-sets of E{self.lam.name} are infinite")
        total = 0
        for g in self.lam.sample_elements(len(xs)):
            pg = self.lam.pi(g)
            prod = 1
            for i, x in enumerate(xs, 1):
                prod *= len(self.X.hom(x, ys[pg(i) - 1]))
            total += prod
        return total

    def compose(self, h: FreeMonCatMorphism, f: FreeMonCatMorphism) -> FreeMonCatMorphism:
        """``h . f``: first ``f``, then ``h``."""
        if f.target != h.source:
            raise CompositionError(f"target {f.target} does not match source {h.source}")
        pf = self.lam.pi(f.g)
        comps = tuple(self.X.compose(h.components[pf(i) - 1], c) for i, c in enumerate(f.components, 1))
        return FreeMonCatMorphism(f.source, h.target, self.lam.multiply(h.g, f.g), comps)

    def then(self, f: FreeMonCatMorphism, h: FreeMonCatMorphism) -> FreeMonCatMorphism:
        return self.compose(h, f)

    def tensor(self, parts: Sequence):
        """Concatenate object tuples, or block-sum morphisms."""
        parts = list(parts)
        if all(isinstance(p, tuple) for p in parts):
            return tuple(x for p in parts for x in p)
        if not all(isinstance(p, FreeMonCatMorphism) for p in parts):
            raise TypeError("tensor expects only object tuples or only morphisms")
        return FreeMonCatMorphism(
            tuple(x for p in parts for x in p.source),
            tuple(y for p in parts for y in p.target),
            self.lam.block_sum([p.g for p in parts]),
            tuple(c for p in parts for c in p.components),
        )

    def same(self, a: FreeMonCatMorphism, b: FreeMonCatMorphism) -> bool:
        return (a.source == b.source and a.target == b.target and a.components == b.components
                and self.lam.equal(a.g, b.g) is Equality.EQUAL)

    def objects(self, max_length: int) -> Iterator[tuple]:
        for n in range(max_length + 1):
            yield from itertools.product(self.X.objects, repeat=n)

    def check_category_laws(self, max_length: int = 3) -> AxiomReport:
        """Identity and associativity laws over every triple of composable morphisms."""
        cases, witness = 0, None
        for n in range(max_length + 1):
            objs = list(itertools.product(self.X.objects, repeat=n))
            homs = {(a, b): list(self.hom(a, b)) for a in objs for b in objs}
            for (a, b), fs in homs.items():
                for f in fs:
                    cases += 1
                    if not (self.same(self.compose(f, self.identity(a)), f)
                            and self.same(self.compose(self.identity(b), f), f)) and witness is None:
                        witness = {"f": repr(f), "law": "identity"}
                    for c in objs:
                        for g in homs[(b, c)]:
                            gf = self.compose(g, f)
                            for d in objs:
                                for h in homs[(c, d)]:
                                    cases += 1
                                    if not self.same(self.compose(h, gf), self.compose(self.compose(h, g), f)):
                                        if witness is None:
                                            witness = {"f": repr(f), "g": repr(g), "h": repr(h), "law": "associativity"}
        status = Status.FAIL if witness else Status.PASS
        return AxiomReport("free-category-laws", status, cases, None, witness, self.lam.name)

    def check_strict_monoidal(self, max_length: int = 3) -> AxiomReport:
        """Unit and associativity of the tensor, and the interchange law."""
        cases, witness = 0, None
        mors = []
        for n in range(max_length + 1):
            for a in itertools.product(self.X.objects, repeat=n):
                for b in itertools.product(self.X.objects, repeat=n):
                    mors.extend(self.hom(a, b))
        e = self.identity(())
        for f in mors:
            cases += 1
            if not (self.same(self.tensor([e, f]), f) and self.same(self.tensor([f, e]), f)) and witness is None:
                witness = {"f": repr(f), "law": "unit"}
        small = [f for f in mors if len(f.source) <= max(1, max_length // 2)]
        for f, g, h in itertools.product(small, repeat=3):
            if len(f.source) + len(g.source) + len(h.source) > max_length:
                continue
            cases += 1
            left = self.tensor([self.tensor([f, g]), h])
            right = self.tensor([f, self.tensor([g, h])])
            if not self.same(left, right) and witness is None:
                witness = {"f": repr(f), "g": repr(g), "h": repr(h), "law": "associativity"}
        for f1, g1 in itertools.product(small, repeat=2):
            if len(f1.source) + len(g1.source) > max_length:
                continue
            for f2 in (m for m in small if m.source == f1.target):
                for g2 in (m for m in small if m.source == g1.target):
                    cases += 1
                    lhs = self.compose(self.tensor([f2, g2]), self.tensor([f1, g1]))
                    rhs = self.tensor([self.compose(f2, f1), self.compose(g2, g1)])
                    if not self.same(lhs, rhs) and witness is None:
                        witness = {"f1": repr(f1), "g1": repr(g1), "f2": repr(f2), "g2": repr(g2), "law": "interchange"}
        status = Status.FAIL if witness else Status.PASS
        return AxiomReport("strict-monoidal", status, cases, None, witness, self.lam.name)


def hom_count(X: FiniteCategory, xs: Sequence, ys: Sequence, lam: ActionOperad) -> int:
    return FreeMonoidalCategory(lam, X).hom_count(xs, ys)


def el_one_is_blambda(lam: ActionOperad, n_max: int) -> dict:
    """Compare ``EΛ(1)`` with the one-object-per-arity category ``BΛ``.

    Over the terminal category each ``g`` in ``Λ(n)`` carries exactly one
    component tuple, so ``hom(n, n)`` is ``Λ(n)``.  Composition must be the
    group product and tensor the block sum.  For infinite groups the check
    runs over identities, generators and their inverses.
    """
    E = FreeMonoidalCategory(lam, terminal_category())
    sizes = {}
    problems = []
    for n in range(n_max + 1):
        obj = ("*",) * n
        elems = lam.sample_elements(n)
        if lam.finite:
            sizes[n] = E.hom_count(obj, obj)
            if sizes[n] != len(elems):
                problems.append({"arity": n, "hom_size": sizes[n], "group_order": len(elems)})
        for g in elems:
            if len(list(E.components_over(g, obj, obj))) != 1:
                problems.append({"arity": n, "g": lam.format(g), "issue": "not exactly one component tuple"})
        for g, h in itertools.product(elems, repeat=2):
            fg = E.morphism(g, ["id_*"] * n)
            fh = E.morphism(h, ["id_*"] * n)
            if lam.equal(E.compose(fg, fh).g, lam.multiply(g, h)) is not Equality.EQUAL:
                problems.append({"arity": n, "g": lam.format(g), "h": lam.format(h), "issue": "composition"})
    for a in range(n_max + 1):
        for b in range(n_max + 1 - a):
            for g, h in itertools.product(lam.sample_elements(a), lam.sample_elements(b)):
                t = E.tensor([E.morphism(g, ["id_*"] * a), E.morphism(h, ["id_*"] * b)])
                if lam.equal(t.g, lam.block_sum([g, h])) is not Equality.EQUAL:
                    problems.append({"g": lam.format(g), "h": lam.format(h), "issue": "tensor"})
    return {"result": "Pass" if not problems else "Fail", "lambda": lam.name, "hom_sizes": sizes,
            "problems": problems[:5]}
