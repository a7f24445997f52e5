"""Families of groups over the symmetric groups that are not action operads.

Two kinds of obstruction are reproduced mechanically:

* The hyperoctahedral groups ``H(n)`` of signed permutation matrices carry
  two natural candidate duplications.  The reversal-twisted candidate
  (variant 1) breaks Axiom 8 and the untwisted one (variant 2) breaks
  Axiom 6.  :func:`exhibit_axiom8_failure` and :func:`exhibit_axiom6_failure`
  evaluate both sides on explicit witnesses.
* For a family of subgroups ``G(n) <= Sigma(n)`` with ``pi`` the inclusion,
  the maps ``pi_n`` must be all surjective or all trivial.  Cyclic groups,
  alternating groups and ``{e, reversal}`` fail this, which
  :func:`subgroup_obstruction` records by group orders.
"""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Sequence

from . import perm as P
from .aopcore import ActionOperad, AxiomReport, Status, _generated_subgroup_size
from .errors import ArityError, InvariantError
from .perm import Perm

__all__ = [
    "SignedPerm",
    "signed_block_sum",
    "signed_duplication",
    "hyperoct_delta",
    "HyperoctahedralCandidate",
    "exhibit_axiom8_failure",
    "exhibit_axiom6_failure",
    "subgroup_obstruction",
    "reversal_signed",
    "FAMILIES",
]

VARIANT_NAMES = {1: "ReversalTwisted", 2: "Untwisted"}


class SignedPerm:
    """A signed permutation matrix.

    ``perm`` is the underlying permutation and ``signs[i-1]`` the sign of the
    non-zero entry in row ``i``; the matrix has ``signs[sigma(j)-1]`` at
    ``(sigma(j), j)``.  Products are matrix products.
    """

    __slots__ = ("perm", "signs")

    def __init__(self, perm: Perm, signs: Sequence[int]):
        signs = tuple(int(s) for s in signs)
        if len(signs) != perm.n:
            raise ArityError(f"{len(signs)} signs for a permutation of size {perm.n}")
        if any(s not in (1, -1) for s in signs):
            raise InvariantError(f"signs must be +1 or -1, got {list(signs)}")
        self.perm = perm
        self.signs = signs

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(Perm.identity(n), (1,) * n)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "SignedPerm":
        n = len(rows)
        images = [0] * n
        signs = [0] * n
        for i, row in enumerate(rows):
            nz = [(j, v) for j, v in enumerate(row) if v]
            if len(row) != n or len(nz) != 1 or nz[0][1] not in (1, -1):
                raise InvariantError(f"{[list(r) for r in rows]} is not a signed permutation matrix")
            j, v = nz[0]
            images[j] = i + 1
            signs[i] = v
        return cls(Perm(images), signs)

    @classmethod
    def from_column_signs(cls, perm: Perm, column_signs: Sequence[int]) -> "SignedPerm":
        """Build from the sign of each column, i.e. the sign attached to each input point."""
        signs = [0] * perm.n
        for j, s in enumerate(column_signs, 1):
            signs[perm(j) - 1] = s
        return cls(perm, signs)

    @property
    def n(self) -> int:
        return self.perm.n

    def column_signs(self) -> tuple[int, ...]:
        return tuple(self.signs[self.perm(j) - 1] for j in range(1, self.n + 1))

    def matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for j in range(1, self.n + 1):
            i = self.perm(j)
            m[i - 1][j - 1] = self.signs[i - 1]
        return m

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        if self.n != other.n:
            raise ArityError(f"cannot multiply signed permutations of sizes {self.n} and {other.n}")
        ginv = self.perm.inverse()
        signs = tuple(self.signs[i - 1] * other.signs[ginv(i) - 1] for i in range(1, self.n + 1))
        return SignedPerm(P.compose(self.perm, other.perm), signs)

    def inverse(self) -> "SignedPerm":
        return SignedPerm(self.perm.inverse(), self.column_signs())

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPerm) and self.perm == other.perm and self.signs == other.signs

    def __hash__(self) -> int:
        return hash((self.perm, self.signs))

    def __repr__(self) -> str:
        return f"SignedPerm({list(self.perm.images)}, {list(self.signs)})"

    def __str__(self) -> str:
        """``((1 3 2); 1,-1,1)``: cycle form followed by the column signs."""
        signs = ",".join(str(s) for s in self.column_signs())
        return f"({P.format_perm(self.perm, 'cycle')}; {signs})"


def reversal_signed(n: int) -> SignedPerm:
    """``r_n``: the anti-diagonal matrix with every entry ``-1``."""
    return SignedPerm(P.reversal(n), (-1,) * n)


def signed_block_sum(parts: Sequence[SignedPerm]) -> SignedPerm:
    return SignedPerm(P.block_sum([p.perm for p in parts]), [s for p in parts for s in p.signs])


def signed_duplication(g: SignedPerm, ks: Sequence[int]) -> SignedPerm:
    """Replace each entry ``+-1`` in column ``j`` by ``+-I_{k_j}``."""
    perm = P.duplication(g.perm, ks)
    out_sizes = P.act_on_tuple(g.perm, tuple(ks))
    signs = [s for s, k in zip(g.signs, out_sizes) for _ in range(k)]
    return SignedPerm(perm, signs)


def hyperoct_delta(variant: int, g: SignedPerm, ks: Sequence[int]) -> SignedPerm:
    """Candidate duplication on ``H(n)``.

    Variant 1 multiplies ``g`` on the left by ``r_n``, expands the result
    blockwise and multiplies on the right by ``beta(r_{k_1}, ..., r_{k_n})``.
    Variant 2 only expands ``g`` blockwise.
    """
    if len(ks) != g.n:
        raise ArityError(f"duplication of a size-{g.n} element needs {g.n} block sizes, got {len(ks)}")
    if variant == 1:
        twisted = reversal_signed(g.n) * g
        return signed_duplication(twisted, ks) * signed_block_sum([reversal_signed(k) for k in ks])
    if variant == 2:
        return signed_duplication(g, ks)
    raise ValueError(f"unknown variant {variant!r}")


class HyperoctahedralCandidate(ActionOperad):
    """``H(n)`` with signed block sum and one of the two candidate duplications."""

    finite = True

    def __init__(self, variant: int):
        if variant not in (1, 2):
            raise ValueError(f"unknown variant {variant!r}")
        self.variant = variant
        self.name = f"hyperoct:v{variant}"

    def arity(self, g: SignedPerm) -> int:
        return g.n

    def identity(self, n: int) -> SignedPerm:
        return SignedPerm.identity(n)

    def multiply(self, g: SignedPerm, h: SignedPerm) -> SignedPerm:
        return g * h

    def inverse(self, g: SignedPerm) -> SignedPerm:
        return g.inverse()

    def pi(self, g: SignedPerm) -> Perm:
        return g.perm

    def block_sum(self, parts: Sequence[SignedPerm]) -> SignedPerm:
        return signed_block_sum(parts)

    def duplication(self, g: SignedPerm, ks: Sequence[int]) -> SignedPerm:
        return hyperoct_delta(self.variant, g, ks)

    def format(self, g: SignedPerm) -> str:
        return str(g)

    def elements(self, n: int):
        for p in P.all_perms(n):
            for signs in itertools.product((1, -1), repeat=n):
                yield SignedPerm(p, signs)

    def order(self, n: int) -> int:
        return 2 ** n * math.factorial(n)

    def generators(self, n: int) -> list[SignedPerm]:
        gens = [SignedPerm(Perm.transposition(i, i + 1, n), (1,) * n) for i in range(1, n)]
        if n:
            gens.append(SignedPerm(Perm.identity(n), (-1,) + (1,) * (n - 1)))
        return gens

    def random_element(self, n: int, rng: random.Random, max_length: int = 8) -> SignedPerm:
        images = list(range(1, n + 1))
        rng.shuffle(images)
        return SignedPerm(Perm(images), [rng.choice((1, -1)) for _ in range(n)])

    def to_json(self, g: SignedPerm):
        return {"matrix": g.matrix()}


def _describe(x: SignedPerm) -> dict:
    return {
        "underlying": P.format_perm(x.perm, "cycle"),
        "column_signs": list(x.column_signs()),
        "matrix": x.matrix(),
    }


def _report(axiom_id: str, variant: int, lhs: SignedPerm, rhs: SignedPerm, inputs: dict, claims: dict) -> AxiomReport:
    status = Status.PASS if lhs == rhs else Status.FAIL
    witness = {**inputs, "lhs": _describe(lhs), "rhs": _describe(rhs)}
    extra = {"variant": VARIANT_NAMES[variant], "claims": claims}
    return AxiomReport(axiom_id, status, 1, None, witness, f"hyperoct:v{variant}", extra)


AXIOM8_G = SignedPerm(Perm([1]), [-1])
AXIOM8_H = SignedPerm.from_matrix([[-1, 0, 0], [0, 0, -1], [0, 1, 0]])
AXIOM6_G = SignedPerm.from_matrix([[-1, 0, 0], [0, 0, 1], [0, -1, 0]])
AXIOM6_H = SignedPerm.from_matrix([[0, 0, 1], [0, -1, 0], [-1, 0, 0]])
AXIOM6_J = (3, 1, 2)


def exhibit_axiom8_failure(variant: int = 1) -> AxiomReport:
    """Evaluate ``delta_k(g) beta(h) = beta(h) delta_k(g)`` for ``g = [-1]`` in ``H(1)``.

    With ``h = ((2 3); -1, 1, -1)`` the reversal-twisted candidate gives
    ``((1 3 2); 1,-1,1)`` on the left and ``((1 2 3); 1,-1,1)`` on the right.
    """
    g, h = AXIOM8_G, AXIOM8_H
    d = hyperoct_delta(variant, g, (h.n,))
    lhs = d * h
    rhs = h * d
    claims = {
        "asserted": "Axiom 8 fails for the reversal-twisted candidate" if variant == 1
        else "the untwisted candidate satisfies Axiom 8 and fails Axiom 6 instead",
        "observed": "Fail" if lhs != rhs else "Pass",
    }
    inputs = {"g": _describe(g), "h": _describe(h), "k": [h.n]}
    return _report("8", variant, lhs, rhs, inputs, claims)


def exhibit_axiom6_failure(variant: int = 2, size_reading: str = "column") -> AxiomReport:
    """Evaluate ``delta_k(g) delta_j(h) = delta_j(g h)`` with ``k = pi(h).j``.

    The witnesses are two 3x3 signed permutation matrices with
    ``j = (3, 1, 2)`` and hence ``k = (2, 1, 3)``.

    ``size_reading="column"`` attaches block sizes to columns (input points),
    the reading used by :func:`hyperoct_delta` and by Axiom 6 itself.  With
    it the untwisted candidate satisfies the equation on this pair.
    ``size_reading="row"`` attaches the same size lists to rows instead; the
    two sides then differ, but the equation is no longer well typed.
    """
    if size_reading not in ("column", "row"):
        raise ValueError(f"unknown size reading {size_reading!r}")
    g, h, js = AXIOM6_G, AXIOM6_H, AXIOM6_J
    ks = P.act_on_tuple(h.perm, js)

    def delta(x: SignedPerm, sizes):
        if size_reading == "row":
            sizes = P.act_on_tuple(x.perm.inverse(), tuple(sizes))
        return hyperoct_delta(variant, x, sizes)

    lhs = delta(g, ks) * delta(h, js)
    rhs = delta(g * h, js)
    claims = {
        "asserted": "Axiom 6 fails for the untwisted candidate" if variant == 2
        else "no claim about Axiom 6 for the reversal-twisted candidate; evaluated for comparison",
        "observed": "Fail" if lhs != rhs else "Pass",
        "size_reading": size_reading,
    }
    inputs = {"g": _describe(g), "h": _describe(h), "k": list(ks), "j": list(js)}
    return _report("6", variant, lhs, rhs, inputs, claims)


def _cyclic(n: int) -> list[Perm]:
    return [Perm(list(range(2, n + 1)) + [1])] if n >= 2 else []


def _alternating(n: int) -> list[Perm]:
    return [Perm.from_cycles([(1, i, i + 1)], n) for i in range(2, n)] if n >= 3 else []


def _reflexive(n: int) -> list[Perm]:
    return [P.reversal(n)] if n >= 2 else []


FAMILIES = {"Cyclic": _cyclic, "Alternating": _alternating, "ReflexiveC2": _reflexive}


def subgroup_obstruction(family: str, n_max: int) -> dict:
    """Find the arities where the inclusion of ``family(n)`` is neither trivial nor onto.

    Any such arity rules out an action-operad structure whose ``pi`` is the
    inclusion, since ``pi_n`` must be onto for all ``n`` or trivial for all
    ``n``.  ``obstructions`` lists every such arity up to ``n_max``.
    """
    if family not in FAMILIES:
        raise KeyError(family)
    orders = {}
    kinds = {}
    for n in range(1, n_max + 1):
        size = _generated_subgroup_size(FAMILIES[family](n), n)
        orders[n] = size
        full = math.factorial(n)
        kinds[n] = "trivial" if size == 1 else "onto" if size == full else "proper"
    obstructions = [n for n, k in kinds.items() if k == "proper"]
    return {
        "family": family,
        "n_max": n_max,
        "orders": orders,
        "kinds": kinds,
        "obstructions": obstructions,
        "first_obstruction": obstructions[0] if obstructions else None,
        "result": "Obstructed" if obstructions else "NoObstructionFound",
    }

