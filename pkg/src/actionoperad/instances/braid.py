"""Artin braid groups as an action operad.

Braids are words in the standard generators.  A letter ``+i`` stands for
``s_i`` (strand ``i`` crossing strand ``i + 1``) and ``-i`` for its inverse.
Words are not normalised; equality is decided by Dehornoy's handle
reduction applied to ``w * v^-1``, which is complete for the word problem.

``block_sum`` places braids side by side and ``duplication`` replaces each
strand by a cable of parallel strands.
"""

from __future__ import annotations

import random
import re
from collections.abc import Iterable, Sequence

from ..aopcore import ActionOperad, Equality
from ..errors import ArityError, InvariantError, ParseError
from ..perm import Perm

__all__ = [
    "BraidWord",
    "BraidOperad",
    "braid_is_trivial",
    "braid_equal",
    "braid_beta",
    "braid_delta",
    "garside_half_twist",
    "free_reduce",
    "parse_braid",
    "format_braid",
]


class BraidWord:
    """A braid on ``n`` strands given as a word in the Artin generators.

    Two ``BraidWord`` objects compare equal when they represent the same
    braid, not merely when they are spelled the same way; use
    :meth:`same_word` for literal comparison.
    """

    __slots__ = ("n", "letters", "_pi")

    def __init__(self, n: int, letters: Iterable[int] = ()):
        letters = tuple(int(x) for x in letters)
        if n < 0:
            raise ArityError("strand count must be non-negative")
        for x in letters:
            if x == 0 or abs(x) > n - 1:
                raise InvariantError(f"generator index {x} out of range for {n} strands")
        self.n = n
        self.letters = letters
        self._pi = None

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n)

    @classmethod
    def generator(cls, i: int, n: int) -> "BraidWord":
        return cls(n, (i,))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ArityError(f"cannot multiply braids on {self.n} and {other.n} strands")
        return BraidWord(self.n, free_reduce(self.letters + other.letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, free_reduce(base.letters * abs(k)))

    def pi(self) -> Perm:
        """The underlying permutation; ``s_i`` maps to the transposition ``(i i+1)``."""
        if self._pi is None:
            images = list(range(1, self.n + 1))
            # multiply left to right: pi(w) = pi(l_1) * ... * pi(l_k)
            for x in reversed(self.letters):
                i = abs(x)
                images = [i + 1 if y == i else i if y == i + 1 else y for y in images]
            self._pi = Perm._raw(tuple(images))
        return self._pi

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def is_trivial(self) -> bool:
        return braid_is_trivial(self)

    def same_word(self, other: "BraidWord") -> bool:
        return self.n == other.n and self.letters == other.letters

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return braid_equal(self, other) is Equality.EQUAL

    def __hash__(self) -> int:
        # only braid invariants go into the hash, so equal braids hash alike
        return hash((self.n, self.pi().images, self.exponent_sum()))

    def __repr__(self) -> str:
        return f"BraidWord({self.n}, {list(self.letters)})"

    def __str__(self) -> str:
        return format_braid(self)


def free_reduce(letters: Sequence[int]) -> tuple[int, ...]:
    """Cancel adjacent ``x, -x`` pairs."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _find_handle(word: list[int]) -> tuple[int, int] | None:
    """Locate the handle whose right end comes first.

    A handle of index ``i`` is a factor ``s_i^e u s_i^-e`` in which ``u``
    only uses generators of index greater than ``i``.  Scanning left to
    right with the position of the latest occurrence of every index, the
    factor ending at position ``p`` is a handle iff the latest occurrence of
    index ``i`` has the opposite sign and no smaller index occurs after it.
    Because it is the first to end, it contains no nested handle.
    """
    last: dict[int, int] = {}
    for p, x in enumerate(word):
        i = abs(x)
        q = last.get(i)
        if q is not None and word[q] == -x:
            if all(last.get(j, -1) < q for j in range(1, i)):
                return q, p
        last[i] = p
    return None


def handle_reduce(letters: Sequence[int], max_steps: int = 1_000_000) -> tuple[int, ...]:
    """Apply handle reductions until none is left.

    The result is empty exactly when the input is the trivial braid.  A
    nonempty result uses its smallest generator index with one sign only.
    """
    word = list(free_reduce(letters))
    for _ in range(max_steps):
        found = _find_handle(word)
        if found is None:
            return tuple(word)
        q, p = found
        e = 1 if word[q] > 0 else -1
        i = abs(word[q])
        middle: list[int] = []
        for x in word[q + 1:p]:
            if abs(x) == i + 1:
                d = 1 if x > 0 else -1
                middle.extend((-e * (i + 1), d * i, e * (i + 1)))
            else:
                middle.append(x)
        word = list(free_reduce(word[:q] + middle + word[p + 1:]))
    raise RuntimeError("handle reduction did not finish within the step limit")


def braid_is_trivial(w: BraidWord) -> bool:
    """True iff ``w`` is the identity braid."""
    if w.exponent_sum() != 0 or not w.pi().is_identity():
        return False
    return not handle_reduce(w.letters)


def braid_equal(u: BraidWord, v: BraidWord) -> Equality:
    if u.n != v.n:
        raise ArityError(f"braids on {u.n} and {v.n} strands cannot be compared")
    if u.letters == v.letters:
        return Equality.EQUAL
    if u.exponent_sum() != v.exponent_sum() or u.pi() != v.pi():
        return Equality.NOT_EQUAL
    return Equality.of(not handle_reduce(u.letters + v.inverse().letters))


def braid_beta(parts: Sequence[BraidWord]) -> BraidWord:
    """Place braids side by side, shifting generator indices."""
    letters: list[int] = []
    offset = 0
    for w in parts:
        letters.extend(x + offset if x > 0 else x - offset for x in w.letters)
        offset += w.n
    return BraidWord(offset, letters)


def _crossing(p: int, a: int, b: int) -> list[int]:
    # The cable of a strands starting at position p crosses the next cable of
    # b strands; afterwards the b strands occupy positions p..p+b-1.
    out: list[int] = []
    for s in range(b - 1, -1, -1):
        out.extend(range(p + s, p + s + a))
    return out


def _cable_letter(x: int, sizes: Sequence[int]) -> list[int]:
    i = abs(x)
    if x > 0:
        p = 1 + sum(sizes[:i - 1])
        return _crossing(p, sizes[i - 1], sizes[i])
    # the inverse crossing is cabled with the sizes seen after the crossing
    swapped = list(sizes)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    return [-y for y in reversed(_cable_letter(i, swapped))]


def braid_delta(w: BraidWord, ks: Sequence[int]) -> BraidWord:
    """Replace strand ``i`` (counted at the bottom of the word) by ``ks[i-1]`` parallel strands.

    Letters are processed from right to left; the running list of cable
    sizes is permuted by each letter's underlying transposition.
    """
    if len(ks) != w.n:
        raise ArityError(f"duplication on {w.n} strands needs {w.n} cable sizes, got {len(ks)}")
    if any(k < 0 for k in ks):
        raise ArityError(f"cable sizes must be non-negative, got {list(ks)}")
    sizes = list(ks)
    pieces: list[list[int]] = []
    for x in reversed(w.letters):
        pieces.append(_cable_letter(x, sizes))
        i = abs(x)
        sizes[i - 1], sizes[i] = sizes[i], sizes[i - 1]
    letters = [y for piece in reversed(pieces) for y in piece]
    return BraidWord(sum(ks), free_reduce(letters))


def garside_half_twist(k: int) -> BraidWord:
    """The positive half twist ``(s_1 ... s_{k-1})(s_1 ... s_{k-2}) ... (s_1)`` on ``k`` strands."""
    if k < 0:
        raise ArityError("strand count must be non-negative")
    letters = [i for top in range(k - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(k, letters)


_TOKEN = re.compile(r"^s(\d+)(\^(-?\d+))?$")
_PREFIX = re.compile(r"^\s*B(\d+)\s*:(.*)$", re.S)


def parse_braid(text: str, n: int | None = None) -> BraidWord:
    """Parse ``"s1 s2^-1 s1"``.

    Powers ``s2^3`` are expanded.  ``"e"`` or an empty string is the
    identity.  The strand count is ``n``, or a ``"B4:"`` prefix, or one more
    than the largest index used.
    """
    m = _PREFIX.match(text)
    body = text
    if m:
        declared = int(m.group(1))
        if n is not None and n != declared:
            raise ArityError(f"text declares {declared} strands, expected {n}")
        n, body = declared, m.group(2)
    letters: list[int] = []
    for col, token in _tokens(body):
        if token == "e":
            continue
        t = _TOKEN.match(token)
        if not t:
            raise ParseError(f"bad braid token {token!r}", column=col)
        i = int(t.group(1))
        power = int(t.group(3)) if t.group(3) else 1
        if i < 1 or (n is not None and i > n - 1):
            raise ParseError(f"generator {token!r} out of range", column=col)
        letters.extend([i if power > 0 else -i] * abs(power))
    if n is None:
        n = max((abs(x) for x in letters), default=0) + 1
    return BraidWord(n, letters)


def _tokens(body: str):
    for m in re.finditer(r"\S+", body):
        yield m.start() + 1, m.group()


def format_braid(w: BraidWord, with_strands: bool = False) -> str:
    text = " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in w.letters) or "e"
    return f"B{w.n}: {text}" if with_strands else text


class BraidOperad(ActionOperad):
    """The braid groups; ``pi`` forgets everything but the permutation."""

    name = "braid"
    finite = False

    def arity(self, g: BraidWord) -> int:
        return g.n

    def identity(self, n: int) -> BraidWord:
        return BraidWord(n)

    def multiply(self, g: BraidWord, h: BraidWord) -> BraidWord:
        return g * h

    def inverse(self, g: BraidWord) -> BraidWord:
        return g.inverse()

    def pi(self, g: BraidWord) -> Perm:
        return g.pi()

    def block_sum(self, parts: Sequence[BraidWord]) -> BraidWord:
        return braid_beta(parts)

    def duplication(self, g: BraidWord, ks: Sequence[int]) -> BraidWord:
        return braid_delta(g, ks)

    def equal(self, g: BraidWord, h: BraidWord) -> Equality:
        return braid_equal(g, h)

    def format(self, g: BraidWord) -> str:
        return format_braid(g)

    def parse(self, text: str) -> BraidWord:
        return parse_braid(text)

    def generators(self, n: int) -> list[BraidWord]:
        return [BraidWord(n, (i,)) for i in range(1, n)]

    def random_element(self, n: int, rng: random.Random, max_length: int = 8) -> BraidWord:
        if n < 2:
            return BraidWord(n)
        length = rng.randint(0, max_length)
        return BraidWord(n, [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)])

    def to_json(self, g: BraidWord):
        return {"strands": g.n, "word": list(g.letters)}

