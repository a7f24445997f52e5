"""Ribbon braid groups as an action operad.

An element of ``RB(n)`` is stored in the normal form ``t^m * b``: a vector
``m`` of full-twist exponents (one per ribbon, counted at the top) followed
by a braid ``b``.  Twists are carried along braids by the underlying
permutation, so ``(m, b)(m', b') = (m + pi(b).m', b b')`` where ``pi(b).m'``
moves the entry in position ``j`` to position ``pi(b)(j)``.

Cabling a ribbon with ``k`` twists ``m`` into ``k`` parallel ribbons gives
each new ribbon ``m`` twists and wraps all of them in ``m`` full twists
``gamma_k^2``.
"""

from __future__ import annotations

import random
import re
from collections.abc import Sequence

from ..aopcore import ActionOperad, Equality
from ..errors import ArityError, ParseError
from ..perm import Perm, act_on_tuple
from .braid import BraidWord, braid_beta, braid_delta, braid_equal, format_braid, garside_half_twist, parse_braid

__all__ = ["RibbonElement", "RibbonOperad", "ribbon_delta", "ribbon_beta"]


class RibbonElement:
    """``t_1^{m_1} ... t_n^{m_n} * braid``."""

    __slots__ = ("twists", "braid")

    def __init__(self, twists: Sequence[int], braid: BraidWord | None = None):
        twists = tuple(int(x) for x in twists)
        if braid is None:
            braid = BraidWord(len(twists))
        if braid.n != len(twists):
            raise ArityError(f"{len(twists)} twist exponents for a braid on {braid.n} strands")
        self.twists = twists
        self.braid = braid

    @property
    def n(self) -> int:
        return len(self.twists)

    @classmethod
    def identity(cls, n: int) -> "RibbonElement":
        return cls((0,) * n)

    @classmethod
    def twist(cls, i: int, n: int, power: int = 1) -> "RibbonElement":
        """The full twist ``t_i^power`` of ribbon ``i``."""
        m = [0] * n
        m[i - 1] = power
        return cls(m)

    @classmethod
    def from_braid(cls, b: BraidWord) -> "RibbonElement":
        return cls((0,) * b.n, b)

    def __mul__(self, other: "RibbonElement") -> "RibbonElement":
        if self.n != other.n:
            raise ArityError(f"cannot multiply ribbon braids on {self.n} and {other.n} ribbons")
        moved = act_on_tuple(self.braid.pi(), other.twists)
        return RibbonElement(tuple(a + b for a, b in zip(self.twists, moved)), self.braid * other.braid)

    def inverse(self) -> "RibbonElement":
        back = act_on_tuple(self.braid.pi().inverse(), self.twists)
        return RibbonElement(tuple(-x for x in back), self.braid.inverse())

    def pi(self) -> Perm:
        return self.braid.pi()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RibbonElement):
            return NotImplemented
        return self.twists == other.twists and self.braid == other.braid

    def __hash__(self) -> int:
        return hash((self.twists, hash(self.braid)))

    def __repr__(self) -> str:
        return f"RibbonElement({list(self.twists)}, {self.braid!r})"

    def __str__(self) -> str:
        return format_ribbon(self)


def ribbon_beta(parts: Sequence[RibbonElement]) -> RibbonElement:
    twists = tuple(x for p in parts for x in p.twists)
    return RibbonElement(twists, braid_beta([p.braid for p in parts]))


def ribbon_delta(x: RibbonElement, ks: Sequence[int]) -> RibbonElement:
    """Cable ribbon ``i`` (counted at the bottom) into ``ks[i-1]`` parallel ribbons.

    The twist exponents sit at the top of the element, where ribbon ``i``
    has become a cable of ``k'_i`` ribbons with ``k' = pi(braid).ks``.
    """
    if len(ks) != x.n:
        raise ArityError(f"duplication on {x.n} ribbons needs {x.n} cable sizes, got {len(ks)}")
    top = act_on_tuple(x.braid.pi(), tuple(ks))
    twists = tuple(m for m, k in zip(x.twists, top) for _ in range(k))
    wraps = braid_beta([garside_half_twist(k) ** (2 * m) for m, k in zip(x.twists, top)])
    return RibbonElement(twists, wraps * braid_delta(x.braid, ks))


_RIBBON = re.compile(r"^\s*t\[([^\]]*)\]\s*(\|(.*))?$", re.S)


def parse_ribbon(text: str) -> RibbonElement:
    """Parse ``"t[1,0,-2] | s1 s2"``; the braid part may be omitted.

    Text without a twist vector is read as a braid with zero twists.
    """
    m = _RIBBON.match(text)
    if not m:
        return RibbonElement.from_braid(parse_braid(text))
    body = m.group(1).strip()
    try:
        twists = [int(v) for v in body.split(",")] if body else []
    except ValueError:
        raise ParseError(f"bad twist vector {body!r}") from None
    braid = parse_braid(m.group(3) or "", len(twists))
    return RibbonElement(twists, braid)


def format_ribbon(x: RibbonElement) -> str:
    return "t[" + ",".join(str(v) for v in x.twists) + "] | " + format_braid(x.braid)


class RibbonOperad(ActionOperad):
    name = "ribbon"
    finite = False

    def arity(self, g: RibbonElement) -> int:
        return g.n

    def identity(self, n: int) -> RibbonElement:
        return RibbonElement.identity(n)

    def multiply(self, g: RibbonElement, h: RibbonElement) -> RibbonElement:
        return g * h

    def inverse(self, g: RibbonElement) -> RibbonElement:
        return g.inverse()

    def pi(self, g: RibbonElement) -> Perm:
        return g.pi()

    def block_sum(self, parts: Sequence[RibbonElement]) -> RibbonElement:
        return ribbon_beta(parts)

    def duplication(self, g: RibbonElement, ks: Sequence[int]) -> RibbonElement:
        return ribbon_delta(g, ks)

    def equal(self, g: RibbonElement, h: RibbonElement) -> Equality:
        if g.twists != h.twists:
            return Equality.NOT_EQUAL
        return braid_equal(g.braid, h.braid)

    def format(self, g: RibbonElement) -> str:
        return format_ribbon(g)

    def parse(self, text: str) -> RibbonElement:
        return parse_ribbon(text)

    def generators(self, n: int) -> list[RibbonElement]:
        gens = [RibbonElement.twist(i, n) for i in range(1, n + 1)]
        gens += [RibbonElement.from_braid(BraidWord(n, (i,))) for i in range(1, n)]
        return gens

    def random_element(self, n: int, rng: random.Random, max_length: int = 8) -> RibbonElement:
        twists = [rng.randint(-2, 2) for _ in range(n)]
        if n < 2:
            return RibbonElement(twists)
        length = rng.randint(0, max_length)
        letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]
        return RibbonElement(twists, BraidWord(n, letters))

    def to_json(self, g: RibbonElement):
        return {"twists": list(g.twists), "word": list(g.braid.letters)}
