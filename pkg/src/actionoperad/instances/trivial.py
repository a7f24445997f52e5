"""The terminal action operad: every group is trivial and ``pi`` is zero."""

from __future__ import annotations

import random
import re
from collections.abc import Sequence
from dataclasses import dataclass

from ..aopcore import ActionOperad
from ..errors import ArityError, ParseError
from ..perm import Perm


@dataclass(frozen=True)
class TrivialElement:
    """The unique element of the trivial group at arity ``n``."""

    n: int

    def __str__(self) -> str:
        return f"e{self.n}"


class TrivialOperad(ActionOperad):
    name = "trivial"
    finite = True

    def arity(self, g: TrivialElement) -> int:
        return g.n

    def identity(self, n: int) -> TrivialElement:
        return TrivialElement(n)

    def multiply(self, g, h):
        if g.n != h.n:
            raise ArityError(f"cannot multiply elements of arities {g.n} and {h.n}")
        return g

    def inverse(self, g):
        return g

    def pi(self, g) -> Perm:
        return Perm.identity(g.n)

    def block_sum(self, parts: Sequence[TrivialElement]) -> TrivialElement:
        return TrivialElement(sum(p.n for p in parts))

    def duplication(self, g, ks: Sequence[int]) -> TrivialElement:
        if len(ks) != g.n:
            raise ArityError(f"duplication at arity {g.n} needs {g.n} block sizes, got {len(ks)}")
        return TrivialElement(sum(ks))

    def elements(self, n: int):
        yield TrivialElement(n)

    def order(self, n: int) -> int:
        return 1

    def parse(self, text: str) -> TrivialElement:
        m = re.fullmatch(r"\s*e(\d+)\s*", text)
        if not m:
            raise ParseError(f"cannot parse trivial element {text!r}; expected e<n>")
        return TrivialElement(int(m.group(1)))

    def random_element(self, n: int, rng: random.Random, max_length: int = 8):
        return TrivialElement(n)
