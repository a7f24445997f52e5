"""The symmetric groups as an action operad (``pi`` is the identity)."""

from __future__ import annotations

import math
import random
from collections.abc import Sequence

from .. import perm as P
from ..aopcore import ActionOperad
from ..perm import Perm


class SymmetricOperad(ActionOperad):
    name = "sigma"
    finite = True

    def arity(self, g: Perm) -> int:
        return g.n

    def identity(self, n: int) -> Perm:
        return Perm.identity(n)

    def multiply(self, g: Perm, h: Perm) -> Perm:
        return P.compose(g, h)

    def inverse(self, g: Perm) -> Perm:
        return g.inverse()

    def pi(self, g: Perm) -> Perm:
        return g

    def block_sum(self, parts: Sequence[Perm]) -> Perm:
        return P.block_sum(parts)

    def duplication(self, g: Perm, ks: Sequence[int]) -> Perm:
        return P.duplication(g, ks)

    def format(self, g: Perm) -> str:
        return P.format_perm(g)

    def parse(self, text: str) -> Perm:
        return P.parse_perm(text)

    def elements(self, n: int):
        return P.all_perms(n)

    def order(self, n: int) -> int:
        return math.factorial(n)

    def generators(self, n: int) -> list[Perm]:
        return [Perm.transposition(i, i + 1, n) for i in range(1, n)]

    def random_element(self, n: int, rng: random.Random, max_length: int = 8) -> Perm:
        images = list(range(1, n + 1))
        rng.shuffle(images)
        return Perm._raw(tuple(images))

    def to_json(self, g: Perm):
        return list(g.images)
