"""Cactus groups as an action operad.

``J(n)`` is generated by involutions ``s_{p,q}`` for ``1 <= p < q <= n``
subject to

1. ``s_{p,q}^2 = e``;
2. ``s_{p,q} s_{k,l} = s_{k,l} s_{p,q}`` when the intervals are disjoint;
3. ``s_{p,q} s_{k,l} = s_{p+q-l, p+q-k} s_{p,q}`` when ``[k,l]`` lies in ``[p,q]``.

The underlying permutation of ``s_{p,q}`` reverses the interval ``[p,q]``.
Equality of cactus words is only semi-decided here: invariants prove
inequality, rewriting proves equality, and anything else is ``UNKNOWN``.
"""

from __future__ import annotations

import heapq
import random
import re
from collections.abc import Iterable, Sequence

from ..aopcore import ActionOperad, Equality
from ..errors import ArityError, InvariantError, ParseError
from ..perm import Perm

__all__ = [
    "CactusWord",
    "CactusOperad",
    "cactus_pi",
    "cactus_beta",
    "cactus_delta",
    "cactus_equal",
    "coboundary_commutor",
    "parse_cactus",
    "format_cactus",
    "length_parities",
    "reflect",
]

Letter = tuple[int, int]


class CactusWord:
    """A word in the generators ``s_{p,q}`` of ``J(n)``.

    ``==`` compares spelling; group equality goes through
    :func:`cactus_equal`, which may answer ``UNKNOWN``.
    """

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ArityError("fruit count must be non-negative")
        out = []
        for p, q in letters:
            if not 1 <= p <= q <= n:
                raise InvariantError(f"generator s({p},{q}) out of range for n = {n}")
            if p < q:
                out.append((int(p), int(q)))
        self.n = n
        self.letters: tuple[Letter, ...] = tuple(out)

    @classmethod
    def identity(cls, n: int) -> "CactusWord":
        return cls(n)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "CactusWord") -> "CactusWord":
        if self.n != other.n:
            raise ArityError(f"cannot multiply cactus words on {self.n} and {other.n} fruits")
        return CactusWord(self.n, _cancel(self.letters + other.letters))

    def inverse(self) -> "CactusWord":
        return CactusWord(self.n, tuple(reversed(self.letters)))

    def pi(self) -> Perm:
        return cactus_pi(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, CactusWord) and self.n == other.n and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.n, self.letters))

    def __repr__(self) -> str:
        return f"CactusWord({self.n}, {list(self.letters)})"

    def __str__(self) -> str:
        return format_cactus(self)


def _cancel(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for x in letters:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def reflect(outer: Letter, inner: Letter) -> Letter:
    """The interval ``inner`` reflected inside ``outer`` (which must contain it)."""
    p, q = outer
    k, l = inner
    return (p + q - l, p + q - k)


def cactus_pi(w: CactusWord) -> Perm:
    """Product of interval reversals, leftmost letter outermost."""
    images = list(range(1, w.n + 1))
    for p, q in reversed(w.letters):
        images = [p + q - y if p <= y <= q else y for y in images]
    return Perm._raw(tuple(images))


def cactus_beta(parts: Sequence[CactusWord]) -> CactusWord:
    letters: list[Letter] = []
    offset = 0
    for w in parts:
        letters.extend((p + offset, q + offset) for p, q in w.letters)
        offset += w.n
    return CactusWord(offset, letters)


def _dup_letter(letter: Letter, sizes: Sequence[int]) -> list[Letter]:
    p, q = letter
    a = sum(sizes[:p - 1])
    span = sum(sizes[p - 1:q])
    out = [(a + 1, a + span)]
    start = a
    for k in sizes[p - 1:q]:
        out.append((start + 1, start + k))
        start += k
    return [(x, y) for x, y in out if x < y]


def cactus_delta(w: CactusWord, ks: Sequence[int]) -> CactusWord:
    """Duplication: letters from right to left, sizes permuted by each reversal."""
    if len(ks) != w.n:
        raise ArityError(f"duplication on {w.n} fruits needs {w.n} block sizes, got {len(ks)}")
    if any(k < 0 for k in ks):
        raise ArityError(f"block sizes must be non-negative, got {list(ks)}")
    sizes = list(ks)
    pieces = []
    for p, q in reversed(w.letters):
        pieces.append(_dup_letter((p, q), sizes))
        sizes[p - 1:q] = reversed(sizes[p - 1:q])
    letters = [x for piece in reversed(pieces) for x in piece]
    return CactusWord(sum(ks), _cancel(letters))


def length_parities(w: CactusWord) -> tuple[int, ...]:
    """Image in the abelianisation: parity of the letter count for each interval length.

    Relation 3 identifies generators of equal length, so this vector is an
    invariant of the group element.
    """
    counts = [0] * (w.n + 1)
    for p, q in w.letters:
        counts[q - p + 1] ^= 1
    return tuple(counts[2:])


def _greedy(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    """Cancel letters that can be slid together using relations 2 and 3."""
    word = list(_cancel(letters))
    changed = True
    while changed:
        changed = False
        for j in range(1, len(word)):
            x = word[j]
            cur = x
            prefix = word[:j]
            # slide cur leftwards through prefix, rewriting as we go
            moved: list[Letter] = []
            i = j - 1
            while i >= 0:
                y = prefix[i]
                if y == cur:
                    new = prefix[:i] + list(reversed(moved)) + word[j + 1:]
                    word = list(_cancel(new))
                    changed = True
                    break
                if cur[1] < y[0] or y[1] < cur[0]:
                    moved.append(y)
                elif y[0] <= cur[0] and cur[1] <= y[1]:
                    cur = reflect(y, cur)
                    moved.append(y)
                elif cur[0] <= y[0] and y[1] <= cur[1]:
                    moved.append(reflect(cur, y))
                else:
                    break
                i -= 1
            if changed:
                break
    return tuple(word)


def _neighbours(word: tuple[Letter, ...], n: int, max_len: int):
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        if x == y:
            yield word[:i] + word[i + 2:]
            continue
        if x[1] < y[0] or y[1] < x[0]:
            yield word[:i] + (y, x) + word[i + 2:]
        elif x[0] <= y[0] and y[1] <= x[1]:
            yield word[:i] + (reflect(x, y), x) + word[i + 2:]
        elif y[0] <= x[0] and x[1] <= y[1]:
            yield word[:i] + (y, reflect(y, x)) + word[i + 2:]
    if len(word) + 2 <= max_len:
        gens = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
        for i in range(len(word) + 1):
            for g in gens:
                yield word[:i] + (g, g) + word[i:]


def cactus_equal(u: CactusWord, v: CactusWord, slack: int = 4, max_states: int = 100_000) -> Equality:
    """Semi-decide whether two cactus words are the same group element.

    ``NOT_EQUAL`` is certain: the permutations or the abelian invariants
    differ.  ``EQUAL`` is certain: ``u v^-1`` was rewritten to the empty
    word.  The rewriting search explores words of length at most
    ``len(u v^-1) + slack`` and at most ``max_states`` of them; when it
    gives up the answer is ``UNKNOWN``.
    """
    if u.n != v.n:
        raise ArityError(f"cactus words on {u.n} and {v.n} fruits cannot be compared")
    if u.letters == v.letters:
        return Equality.EQUAL
    if cactus_pi(u) != cactus_pi(v) or length_parities(u) != length_parities(v):
        return Equality.NOT_EQUAL
    start = _greedy(u.letters + tuple(reversed(v.letters)))
    if not start:
        return Equality.EQUAL
    max_len = len(start) + slack
    seen = {start}
    heap = [(len(start), 0, start)]
    counter = 0
    while heap and len(seen) < max_states:
        _, _, word = heapq.heappop(heap)
        for nxt in _neighbours(word, u.n, max_len):
            nxt = _greedy(nxt)
            if not nxt:
                return Equality.EQUAL
            if nxt not in seen:
                seen.add(nxt)
                counter += 1
                heapq.heappush(heap, (len(nxt), counter, nxt))
    return Equality.UNKNOWN


def coboundary_commutor(m: int, n: int) -> CactusWord:
    """``s_{1,m+n} s_{1,m} s_{m+1,m+n}``; degenerate intervals are dropped."""
    if m < 1 or n < 1:
        raise ArityError("commutor sizes must be positive")
    return CactusWord(m + n, [(1, m + n), (1, m), (m + 1, m + n)])


_LETTER = re.compile(r"s?\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_PREFIX = re.compile(r"^\s*J(\d+)\s*:(.*)$", re.S)


def parse_cactus(text: str, n: int | None = None) -> CactusWord:
    """Parse ``"(1,3)(2,4)"`` or ``"s(1,3) s(2,4)"``; ``"e"`` is the identity and ``"J5:"`` fixes the size."""
    m = _PREFIX.match(text)
    body = text
    if m:
        n, body = int(m.group(1)), m.group(2)
    letters: list[Letter] = []
    pos = 0
    stripped = body.strip()
    if stripped not in ("", "e"):
        offset = body.index(stripped)
        while pos < len(stripped):
            if stripped[pos].isspace():
                pos += 1
                continue
            t = _LETTER.match(stripped, pos)
            if not t:
                raise ParseError(f"bad cactus token at {stripped[pos:]!r}", column=offset + pos + 1)
            p, q = int(t.group(1)), int(t.group(2))
            if not 1 <= p < q or (n is not None and q > n):
                raise ParseError(f"generator {t.group(0)!r} out of range", column=offset + pos + 1)
            letters.append((p, q))
            pos = t.end()
    if n is None:
        n = max((q for _, q in letters), default=1)
    return CactusWord(n, letters)


def format_cactus(w: CactusWord, with_size: bool = False) -> str:
    text = "".join(f"({p},{q})" for p, q in w.letters) or "e"
    return f"J{w.n}: {text}" if with_size else text


class CactusOperad(ActionOperad):
    name = "cactus"
    finite = False
    semi_decidable = True

    def arity(self, g: CactusWord) -> int:
        return g.n

    def identity(self, n: int) -> CactusWord:
        return CactusWord(n)

    def multiply(self, g: CactusWord, h: CactusWord) -> CactusWord:
        return g * h

    def inverse(self, g: CactusWord) -> CactusWord:
        return g.inverse()

    def pi(self, g: CactusWord) -> Perm:
        return cactus_pi(g)

    def block_sum(self, parts: Sequence[CactusWord]) -> CactusWord:
        return cactus_beta(parts)

    def duplication(self, g: CactusWord, ks: Sequence[int]) -> CactusWord:
        return cactus_delta(g, ks)

    def equal(self, g: CactusWord, h: CactusWord) -> Equality:
        return cactus_equal(g, h)

    def format(self, g: CactusWord) -> str:
        return format_cactus(g)

    def parse(self, text: str) -> CactusWord:
        return parse_cactus(text)

    def generators(self, n: int) -> list[CactusWord]:
        return [CactusWord(n, [(p, q)]) for p in range(1, n + 1) for q in range(p + 1, n + 1)]

    def random_element(self, n: int, rng: random.Random, max_length: int = 8) -> CactusWord:
        if n < 2:
            return CactusWord(n)
        letters = []
        for _ in range(rng.randint(0, max_length)):
            p, q = sorted(rng.sample(range(1, n + 1), 2))
            letters.append((p, q))
        return CactusWord(n, letters)

    def to_json(self, g: CactusWord):
        return {"size": g.n, "word": [list(x) for x in g.letters]}
