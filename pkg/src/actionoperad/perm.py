"""Exact permutation arithmetic on {1, ..., n}.

Permutations are stored in one-line form: ``images[i - 1]`` is the image of
``i``.  The product convention is fixed once and for all here and inherited by
every other module:

    (g * h)(i) == g(h(i))      # the right-hand factor acts first

Besides the group operations the module provides the three structural maps on
the symmetric groups: block sum ``block_sum`` (written beta), duplication
``duplication`` (written delta), operadic composition ``mu_sigma`` and the
grid transposition ``transposition_perm``.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator, Sequence
from typing import Any

from .errors import ArityError, InvariantError, ParseError

__all__ = [
    "Perm",
    "compose",
    "act_on_tuple",
    "block_sum",
    "duplication",
    "mu_sigma",
    "transposition_perm",
    "parse_perm",
    "format_perm",
    "all_perms",
    "reversal",
]


class Perm:
    """A permutation of ``{1..n}`` in one-line form.

    ``Perm([2, 3, 1])`` sends 1 to 2, 2 to 3 and 3 to 1.  The empty
    permutation is the unique element of the symmetric group on zero letters.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvariantError(f"{list(images)} is not a permutation of 1..{len(images)}")
        self.images = images
        self._hash = None

    @classmethod
    def _raw(cls, images: tuple) -> "Perm":
        # Trusted constructor used on hot paths; skips validation.
        p = object.__new__(cls)
        p.images = images
        p._hash = None
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._raw(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> "Perm":
        cycles = [tuple(c) for c in cycles]
        seen = [x for c in cycles for x in c]
        if len(set(seen)) != len(seen):
            raise InvariantError(f"cycles {cycles} are not disjoint")
        if any(x < 1 for x in seen):
            raise InvariantError("cycle entries must be positive")
        size = max(seen, default=0)
        if n is None:
            n = size
        elif n < size:
            raise ArityError(f"cycle entry {size} exceeds n = {n}")
        images = list(range(1, n + 1))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a - 1] = b
        return cls._raw(tuple(images))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Perm":
        return cls.from_cycles([(i, j)], n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else self.inverse()
        out = Perm.identity(self.n)
        for _ in range(abs(k)):
            out = compose(out, base)
        return out

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Perm._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        done = set()
        out = []
        for start in range(1, self.n + 1):
            if start in done:
                continue
            cyc = [start]
            done.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                done.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __lt__(self, other: "Perm") -> bool:
        return (self.n, self.images) < (other.n, other.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"

    def __str__(self) -> str:
        return format_perm(self)


def compose(g: Perm, h: Perm) -> Perm:
    """Return ``g * h``, the permutation ``i -> g(h(i))``."""
    if len(g.images) != len(h.images):
        raise ArityError(f"cannot compose permutations of sizes {g.n} and {h.n}")
    gi = g.images
    return Perm._raw(tuple(gi[x - 1] for x in h.images))


def act_on_tuple(g: Perm, xs: Sequence) -> tuple:
    """Left action on tuples: entry ``i`` of the output is ``xs[g^-1(i)]``.

    Equivalently the entry in position ``j`` moves to position ``g(j)``.
    """
    if len(xs) != g.n:
        raise ArityError(f"tuple of length {len(xs)} cannot be acted on by a permutation of size {g.n}")
    out = [None] * g.n
    for j, x in enumerate(xs):
        out[g.images[j] - 1] = x
    return tuple(out)


def block_sum(parts: Sequence[Perm]) -> Perm:
    """Block sum: ``parts[i]`` acts on the i-th consecutive block of points."""
    images: list[int] = []
    offset = 0
    for p in parts:
        images.extend(x + offset for x in p.images)
        offset += len(p.images)
    return Perm._raw(tuple(images))


def duplication(sigma: Perm, ks: Sequence[int]) -> Perm:
    """Replace point ``i`` by a block of ``ks[i-1]`` points and move blocks along ``sigma``.

    Input block ``i`` (of size ``ks[i-1]``) lands, order preserved, in output
    block position ``sigma(i)``.  Zero-size blocks are allowed.
    """
    n = sigma.n
    if len(ks) != n:
        raise ArityError(f"duplication of a size-{n} permutation needs {n} block sizes, got {len(ks)}")
    if any(k < 0 for k in ks):
        raise ArityError(f"block sizes must be non-negative, got {list(ks)}")
    inv = sigma.inverse().images
    # start of each output block position, output blocks ordered by position
    out_start = [0] * (n + 1)
    acc = 0
    for pos in range(1, n + 1):
        out_start[pos] = acc
        acc += ks[inv[pos - 1] - 1]
    images: list[int] = []
    for i in range(n):
        base = out_start[sigma.images[i]]
        images.extend(base + j for j in range(1, ks[i] + 1))
    return Perm._raw(tuple(images))


def mu_sigma(sigma: Perm, taus: Sequence[Perm]) -> Perm:
    """Operadic composition in the symmetric operad: ``duplication(sigma, sizes) * block_sum(taus)``."""
    if len(taus) != sigma.n:
        raise ArityError(f"composition at arity {sigma.n} needs {sigma.n} inputs, got {len(taus)}")
    return compose(duplication(sigma, [t.n for t in taus]), block_sum(taus))


def transposition_perm(m: int, n: int) -> Perm:
    """The lex-to-colex reindexing of an ``m`` by ``n`` grid.

    Position ``a*n + b + 1`` (row ``a``, column ``b``, rows listed first) is
    sent to ``b*m + a + 1`` (columns listed first).
    """
    if m < 0 or n < 0:
        raise ArityError("grid dimensions must be non-negative")
    images = [0] * (m * n)
    for a in range(m):
        for b in range(n):
            images[a * n + b] = b * m + a + 1
    return Perm._raw(tuple(images))


def reversal(n: int) -> Perm:
    """The order-reversing permutation ``i -> n + 1 - i``."""
    return Perm._raw(tuple(range(n, 0, -1)))


def all_perms(n: int) -> Iterator[Perm]:
    """All elements of the symmetric group on ``n`` letters, in lexicographic order."""
    for t in itertools.permutations(range(1, n + 1)):
        yield Perm._raw(t)


_ONELINE = re.compile(r"^\[\s*(\d+\s*(,\s*\d+\s*)*)?\]$")
_CYCLES = re.compile(r"^(\s*\(\s*(\d+([\s,]+\d+)*)?\s*\)\s*)+$")


def parse_perm(text: str, n: int | None = None) -> Perm:
    """Parse ``"[2,1,3]"`` (one-line) or ``"(1 2)(3)"`` (cycles).

    In cycle form the size is the largest point mentioned unless ``n`` is
    given.  Raises :class:`ParseError` for malformed text and
    :class:`InvariantError` for one-line data that is not a bijection.
    """
    s = text.strip()
    if _ONELINE.match(s):
        body = s[1:-1].strip()
        values = [int(x) for x in body.split(",")] if body else []
        p = Perm(values)
        if n is not None and p.n != n:
            raise ArityError(f"expected a permutation of size {n}, got {p.n}")
        return p
    if _CYCLES.match(s):
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", s):
            cycles.append(tuple(int(x) for x in re.split(r"[\s,]+", body.strip()) if x))
        return Perm.from_cycles(cycles, n)
    raise ParseError(f"cannot parse permutation {text!r}")


def format_perm(p: Perm, style: str = "oneline", fixed_points: bool = False) -> str:
    """Render ``p`` as ``"[2,1,3]"`` or in cycle notation.

    Cycle notation omits fixed points unless ``fixed_points`` is set; the
    largest point is always printed when fixed so that the size survives a
    round trip through :func:`parse_perm`.
    """
    if style == "oneline":
        return "[" + ",".join(str(x) for x in p.images) + "]"
    if style != "cycle":
        raise ValueError(f"unknown style {style!r}")
    cycles = p.cycles(include_fixed=fixed_points)
    if p.n and p(p.n) == p.n and not fixed_points:
        cycles.append((p.n,))
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)
