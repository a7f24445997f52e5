"""The action operad ``A•`` built from an abelian group ``A``.

``A•(n)`` is the direct sum of ``n`` copies of ``A``; block sum is
concatenation, duplication repeats the ``i``-th entry ``k_i`` times and
``pi`` is the zero map.
"""

from __future__ import annotations

import itertools
import random
import re
from collections.abc import Sequence
from dataclasses import dataclass

from ..aopcore import ActionOperad
from ..errors import ArityError, InvariantError, ParseError
from ..perm import Perm


class AbelianGroup:
    """A small abelian group on the labels ``0..order-1`` (or ``Z`` when ``order`` is 0).

    ``cyclic(m)`` gives ``Z/m`` with ordinary modular arithmetic;
    ``from_table`` accepts an explicit Cayley table whose identity is 0.
    """

    def __init__(self, order: int, table: list[list[int]] | None = None, label: str | None = None):
        self.order = order
        self.table = table
        self.label = label or (f"Z/{order}" if order else "Z")
        if table is not None:
            self._inverse = [row.index(0) for row in table]

    @classmethod
    def cyclic(cls, m: int) -> "AbelianGroup":
        if m < 0:
            raise InvariantError("modulus must be non-negative")
        return cls(m)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], label: str | None = None) -> "AbelianGroup":
        table = [list(row) for row in table]
        k = len(table)
        if k == 0 or any(len(row) != k for row in table):
            raise InvariantError("Cayley table must be square and non-empty")
        elems = range(k)
        if any(sorted(row) != list(elems) for row in table):
            raise InvariantError("Cayley table rows must be permutations of the labels")
        if any(table[0][x] != x for x in elems):
            raise InvariantError("label 0 must be the identity")
        for a, b in itertools.product(elems, repeat=2):
            if table[a][b] != table[b][a]:
                raise InvariantError(f"table is not abelian: {a}*{b} != {b}*{a}")
        for a, b, c in itertools.product(elems, repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvariantError(f"table is not associative at ({a},{b},{c})")
        return cls(k, table, label or f"table{k}")

    def add(self, a: int, b: int) -> int:
        if self.table is not None:
            return self.table[a][b]
        return (a + b) % self.order if self.order else a + b

    def neg(self, a: int) -> int:
        if self.table is not None:
            return self._inverse[a]
        return (-a) % self.order if self.order else -a

    def elements(self) -> range:
        if not self.order:
            raise InvariantError("Z has infinitely many elements")
        return range(self.order)


@dataclass(frozen=True)
class AbelianTuple:
    entries: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


class AbelianOperad(ActionOperad):
    def __init__(self, group: AbelianGroup | int):
        self.group = AbelianGroup.cyclic(group) if isinstance(group, int) else group
        self.finite = bool(self.group.order)
        self.name = f"abelian:{self.group.order}" if self.group.table is None else f"abelian:{self.group.label}"

    def arity(self, g: AbelianTuple) -> int:
        return len(g.entries)

    def identity(self, n: int) -> AbelianTuple:
        return AbelianTuple((0,) * n)

    def multiply(self, g, h):
        if len(g.entries) != len(h.entries):
            raise ArityError(f"cannot multiply tuples of lengths {g.n} and {h.n}")
        add = self.group.add
        return AbelianTuple(tuple(add(a, b) for a, b in zip(g.entries, h.entries)))

    def inverse(self, g):
        return AbelianTuple(tuple(self.group.neg(a) for a in g.entries))

    def pi(self, g) -> Perm:
        return Perm.identity(len(g.entries))

    def block_sum(self, parts: Sequence[AbelianTuple]) -> AbelianTuple:
        return AbelianTuple(tuple(x for p in parts for x in p.entries))

    def duplication(self, g, ks: Sequence[int]) -> AbelianTuple:
        if len(ks) != len(g.entries):
            raise ArityError(f"duplication at arity {g.n} needs {g.n} block sizes, got {len(ks)}")
        return AbelianTuple(tuple(a for a, k in zip(g.entries, ks) for _ in range(k)))

    def elements(self, n: int):
        for t in itertools.product(self.group.elements(), repeat=n):
            yield AbelianTuple(t)

    def order(self, n: int) -> int | None:
        return self.group.order ** n if self.group.order else None

    def generators(self, n: int) -> list[AbelianTuple]:
        # unit vectors generate A^n when A is cyclic; for tables use every basis-like vector
        gens = [1] if self.group.table is None else list(range(1, self.group.order))
        return [AbelianTuple(tuple(a if j == i else 0 for j in range(n))) for i in range(n) for a in gens]

    def random_element(self, n: int, rng: random.Random, max_length: int = 8):
        if self.group.order:
            return AbelianTuple(tuple(rng.randrange(self.group.order) for _ in range(n)))
        return AbelianTuple(tuple(rng.randint(-max_length, max_length) for _ in range(n)))

    def parse(self, text: str) -> AbelianTuple:
        m = re.fullmatch(r"\s*[\[(]\s*(-?\d+(\s*,\s*-?\d+)*)?\s*[\])]\s*", text)
        if not m:
            raise ParseError(f"cannot parse tuple {text!r}; expected (a1,...,an)")
        body = m.group(1)
        entries = tuple(int(x) for x in body.split(",")) if body else ()
        if self.group.order:
            bad = [x for x in entries if not 0 <= x < self.group.order]
            if bad:
                raise ParseError(f"entry {bad[0]} is not an element of {self.group.label}")
        return AbelianTuple(entries)

    def to_json(self, g):
        return list(g.entries)
