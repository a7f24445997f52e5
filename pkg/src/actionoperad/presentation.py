"""Terms of the free action operad, evaluation, and presentation checks.

A collection over the symmetric groups is a set of named generators, each
typed by a permutation.  Terms are built from generators and identities
``e<n>`` with products, inverses and operadic composition ``mu``.  A term's
underlying permutation comes from the typing alone, and a term evaluates in
any action operad once the generators are assigned elements of the right
type.

Text form::

    sigma * sigma
    mu(sigma; e1, e2)
    inv(x) * beta(x, e1) * delta(x; 2, 1)

``beta(f1..fn)`` abbreviates ``mu(e<n>; f1..fn)`` and ``delta(g; k1..kn)``
abbreviates ``mu(g; e<k1>..e<kn>)``.  A bare ``e`` is rejected because its
arity would have to be guessed.

Presentation files have two sections::

    GENERATORS
    sigma: (1 2)
    RELATIONS
    rho1: sigma * sigma = e2
    rho2: mu(sigma; e1, e2) = mu(e2; e1, sigma) * mu(e2; sigma, e1)

A presentation check evaluates both sides of every relation in a target
operad.  It then closes the images of the generators under products,
inverses, block sums and duplications and compares the result with the
whole group at each finite arity.  That is a finite stand-in for the
coequaliser property, and reports say so.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass

from . import perm as P
from .aopcore import ActionOperad, Equality, mu
from .errors import ArityError, ParseError, TermTypeError
from .instances.cactus import CactusWord, _greedy, cactus_beta, cactus_delta, cactus_equal, coboundary_commutor
from .perm import Perm

__all__ = [
    "Gen",
    "Id",
    "Mul",
    "Inv",
    "OpMu",
    "AOTerm",
    "SCollection",
    "PresentationData",
    "term_arity",
    "term_pi",
    "evaluate",
    "parse_term",
    "parse_presentation",
    "format_presentation",
    "sigma_presentation",
    "SIGMA_PRESENTATION_TEXT",
    "generated_closure",
    "check_presentation",
    "cactus_presentation_check",
    "evaluate_expression",
]


# ---------------------------------------------------------------------------
# terms

@dataclass(frozen=True)
class Gen:
    symbol: str

    def __str__(self) -> str:
        return self.symbol


@dataclass(frozen=True)
class Id:
    n: int

    def __str__(self) -> str:
        return f"e{self.n}"


@dataclass(frozen=True)
class Mul:
    left: "AOTerm"
    right: "AOTerm"

    def __str__(self) -> str:
        return f"{self.left} * {self.right}"


@dataclass(frozen=True)
class Inv:
    term: "AOTerm"

    def __str__(self) -> str:
        return f"inv({self.term})"


@dataclass(frozen=True)
class OpMu:
    head: "AOTerm"
    args: tuple

    def __str__(self) -> str:
        return f"mu({self.head}; " + ", ".join(str(a) for a in self.args) + ")"


AOTerm = Gen | Id | Mul | Inv | OpMu

SCollection = Mapping[str, Perm]
"""Generator names mapped to their underlying permutations."""


def term_arity(t: AOTerm, typing: SCollection) -> int:
    """Arity of a term; raises :class:`TermTypeError` naming the bad subterm."""
    if isinstance(t, Gen):
        if t.symbol not in typing:
            raise TermTypeError(f"unknown generator {t.symbol!r}", t)
        return typing[t.symbol].n
    if isinstance(t, Id):
        return t.n
    if isinstance(t, Mul):
        a, b = term_arity(t.left, typing), term_arity(t.right, typing)
        if a != b:
            raise TermTypeError(f"product of arities {a} and {b} in {t}", t)
        return a
    if isinstance(t, Inv):
        return term_arity(t.term, typing)
    if isinstance(t, OpMu):
        n = term_arity(t.head, typing)
        if n != len(t.args):
            raise TermTypeError(f"mu with head of arity {n} and {len(t.args)} inputs in {t}", t)
        return sum(term_arity(a, typing) for a in t.args)
    raise TermTypeError(f"not a term: {t!r}", t)


def term_pi(t: AOTerm, typing: SCollection) -> Perm:
    """Underlying permutation of a term, computed in the symmetric operad."""
    term_arity(t, typing)
    return _pi(t, typing)


def _pi(t: AOTerm, typing: SCollection) -> Perm:
    if isinstance(t, Gen):
        return typing[t.symbol]
    if isinstance(t, Id):
        return Perm.identity(t.n)
    if isinstance(t, Mul):
        return P.compose(_pi(t.left, typing), _pi(t.right, typing))
    if isinstance(t, Inv):
        return _pi(t.term, typing).inverse()
    return P.mu_sigma(_pi(t.head, typing), [_pi(a, typing) for a in t.args])


def evaluate(t: AOTerm, target: ActionOperad, assignment: Mapping[str, object],
             typing: SCollection | None = None):
    """Evaluate ``t`` in ``target`` with generators sent to ``assignment``.

    When ``typing`` is given, every generator the term uses must be assigned
    an element with the declared underlying permutation.
    """
    if typing is not None:
        for sym in sorted(_symbols(t)):
            if sym not in assignment:
                raise TermTypeError(f"generator {sym!r} is not assigned", Gen(sym))
            if sym in typing and target.pi(assignment[sym]) != typing[sym]:
                raise TermTypeError(
                    f"{sym!r} is typed {P.format_perm(typing[sym])} but assigned an element over "
                    f"{P.format_perm(target.pi(assignment[sym]))}", Gen(sym))
    return _eval(t, target, assignment)


def _eval(t: AOTerm, op: ActionOperad, assignment: Mapping[str, object]):
    if isinstance(t, Gen):
        if t.symbol not in assignment:
            raise TermTypeError(f"generator {t.symbol!r} is not assigned", t)
        return assignment[t.symbol]
    if isinstance(t, Id):
        return op.identity(t.n)
    if isinstance(t, Mul):
        a, b = _eval(t.left, op, assignment), _eval(t.right, op, assignment)
        if op.arity(a) != op.arity(b):
            raise TermTypeError(f"product of arities {op.arity(a)} and {op.arity(b)} in {t}", t)
        return op.multiply(a, b)
    if isinstance(t, Inv):
        return op.inverse(_eval(t.term, op, assignment))
    if isinstance(t, OpMu):
        g = _eval(t.head, op, assignment)
        if op.arity(g) != len(t.args):
            raise TermTypeError(f"mu with head of arity {op.arity(g)} and {len(t.args)} inputs in {t}", t)
        return mu(op, g, [_eval(a, op, assignment) for a in t.args])
    raise TermTypeError(f"not a term: {t!r}", t)


def _symbols(t: AOTerm) -> set[str]:
    if isinstance(t, Gen):
        return {t.symbol}
    if isinstance(t, Id):
        return set()
    if isinstance(t, Mul):
        return _symbols(t.left) | _symbols(t.right)
    if isinstance(t, Inv):
        return _symbols(t.term)
    return _symbols(t.head).union(*(_symbols(a) for a in t.args))


# ---------------------------------------------------------------------------
# parsing

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FUNC = re.compile(r"(mu|delta|beta|inv)\s*\(")
_IDENT = re.compile(r"e(\d+)(?![A-Za-z0-9_])")
_INT = re.compile(r"-?\d+")


class _TermParser:
    """Recursive descent over the term grammar.

    With ``literals`` set, anything that is not a function call, an identity
    or a parenthesised term is read as an element literal: the longest
    bracket-balanced stretch up to the next top-level ``,``, ``;``, ``*`` or
    closing parenthesis.  Literal text is stored under fresh ``#k`` symbols.
    """

    def __init__(self, text: str, names: Iterable[str] = (), literals: bool = False,
                 line: int | None = None, column_offset: int = 0):
        self.text = text
        self.pos = 0
        self.names = set(names)
        self.literal_mode = literals
        self.literals: dict[str, str] = {}
        self.line = line
        self.offset = column_offset

    def error(self, message: str, pos: int | None = None):
        col = (self.pos if pos is None else pos) + 1 + self.offset
        if self.line is None:
            return ParseError(f"{message} (column {col})", column=col)
        return ParseError(message, line=self.line, column=col)

    def ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> AOTerm:
        t = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.text[self.pos:]!r}")
        return t

    def expr(self) -> AOTerm:
        t = self.factor()
        while self.peek() == "*":
            self.pos += 1
            t = Mul(t, self.factor())
        return t

    def factor(self) -> AOTerm:
        t = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.ws()
            m = _INT.match(self.text, self.pos)
            if not m:
                raise self.error("expected an integer exponent")
            self.pos = m.end()
            k = int(m.group())
            if k == 0:
                raise self.error("exponent 0 hides the arity; write e<n> instead", m.start())
            base = t
            for _ in range(abs(k) - 1):
                t = Mul(t, base)
            if k < 0:
                t = Inv(t)
        return t

    def args(self, head_sep: bool) -> tuple[AOTerm | None, list]:
        self.expect("(")
        head = None
        if head_sep:
            head = self.expr()
            self.expect(";")
        items = [self.expr()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.expr())
        self.expect(")")
        return head, items

    def atom(self) -> AOTerm:
        self.ws()
        start = self.pos
        m = _FUNC.match(self.text, self.pos)
        if m:
            name = m.group(1)
            self.pos = m.end() - 1
            if name == "mu":
                head, items = self.args(True)
                return OpMu(head, tuple(items))
            if name == "inv":
                _, items = self.args(False)
                if len(items) != 1:
                    raise self.error("inv takes one argument", start)
                return Inv(items[0])
            if name == "beta":
                _, items = self.args(False)
                return OpMu(Id(len(items)), tuple(items))
            self.expect("(")
            head = self.expr()
            self.expect(";")
            sizes = []
            while True:
                self.ws()
                k = _INT.match(self.text, self.pos)
                if not k or int(k.group()) < 0:
                    raise self.error("delta sizes must be non-negative integers")
                sizes.append(int(k.group()))
                self.pos = k.end()
                if self.peek() != ",":
                    break
                self.pos += 1
            self.expect(")")
            return OpMu(head, tuple(Id(k) for k in sizes))
        m = _IDENT.match(self.text, self.pos)
        if m and not (self.literal_mode and not self._literal_ends(m.end())):
            self.pos = m.end()
            return Id(int(m.group(1)))
        if self.peek() == "(" and not (self.literal_mode and self._paren_is_literal()):
            self.pos += 1
            t = self.expr()
            self.expect(")")
            return t
        if self.literal_mode:
            return self.literal()
        m = _NAME.match(self.text, self.pos)
        if m:
            if m.group() == "e":
                raise self.error("bare 'e' has no arity; write e<n>")
            if m.group() not in self.names:
                raise self.error(f"unknown generator {m.group()!r}")
            self.pos = m.end()
            return Gen(m.group())
        raise self.error("expected a term" if self.pos < len(self.text) else "unexpected end of input")

    def _literal_ends(self, pos: int) -> bool:
        rest = self.text[pos:].lstrip()
        return not rest or rest[0] in ",;*)^"

    def _paren_is_literal(self) -> bool:
        return bool(re.match(r"\(\s*\d", self.text[self.pos:]))

    def literal(self) -> AOTerm:
        start = self.pos
        depth = 0
        i = self.pos
        while i < len(self.text):
            c = self.text[i]
            if c in "([":
                depth += 1
            elif c in ")]":
                if depth == 0:
                    break
                depth -= 1
            elif depth == 0 and c in ",;*":
                break
            elif depth == 0 and c == "^" and self.text[start:i].rstrip()[-1:] in (")", "]"):
                m = _INT.match(self.text, i + 1)
                if m and self._literal_ends(m.end()):
                    break
            i += 1
        raw = self.text[start:i].strip()
        if not raw:
            raise self.error("expected an element", start)
        self.pos = i
        sym = f"#{len(self.literals)}"
        self.literals[sym] = raw
        return Gen(sym)


def parse_term(text: str, names: Iterable[str] = ()) -> AOTerm:
    """Parse a term whose generator symbols are drawn from ``names``."""
    return _TermParser(text, names).parse()


def evaluate_expression(text: str, op: ActionOperad):
    """Evaluate an expression whose leaves are element literals of ``op``.

    ``mu([2,3,1]; [2,1], e2, (1 3))`` in the symmetric operad,
    ``delta(s1; 2, 2)`` for braids or ``delta(s(1,2); 2, 3)`` for cacti.
    """
    parser = _TermParser(text, literals=True)
    term = parser.parse()
    assignment = {}
    for sym, raw in parser.literals.items():
        try:
            assignment[sym] = op.parse(raw)
        except (ParseError, ValueError) as exc:
            raise ParseError(f"cannot read {raw!r} as an element of {op.name}: {exc}") from None
    try:
        return _eval(term, op, assignment)
    except ArityError as exc:
        raise TermTypeError(str(exc), term) from None


# ---------------------------------------------------------------------------
# presentations

@dataclass
class PresentationData:
    """Generators typed by permutations and relations ``name: lhs = rhs``.

    Both sides of a relation must have the same underlying permutation; that
    permutation is the relation's type.
    """

    generators: dict[str, Perm]
    relations: dict[str, tuple[AOTerm, AOTerm]]

    def __post_init__(self):
        self.relation_types: dict[str, Perm] = {}
        for name, (lhs, rhs) in self.relations.items():
            a, b = term_pi(lhs, self.generators), term_pi(rhs, self.generators)
            if a != b:
                raise TermTypeError(
                    f"relation {name}: sides have types {P.format_perm(a)} and {P.format_perm(b)}", rhs)
            self.relation_types[name] = a

    def without(self, *names: str) -> "PresentationData":
        return PresentationData(dict(self.generators),
                                {k: v for k, v in self.relations.items() if k not in names})


def parse_presentation(text: str) -> PresentationData:
    """Read the ``GENERATORS`` / ``RELATIONS`` format; errors carry line and column."""
    section = None
    gens: dict[str, Perm] = {}
    rels: dict[str, tuple[AOTerm, AOTerm]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        header = line.strip().rstrip(":").upper()
        if header in ("GENERATORS", "RELATIONS"):
            section = header
            continue
        if section is None:
            raise ParseError("expected a GENERATORS or RELATIONS header", line=lineno, column=1)
        m = re.match(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*:", line)
        if not m:
            raise ParseError("expected 'name:'", line=lineno, column=len(line) - len(line.lstrip()) + 1)
        name, body, col = m.group(1), line[m.end():], m.end()
        if name in gens or name in rels:
            raise ParseError(f"{name!r} is defined twice", line=lineno, column=1)
        if section == "GENERATORS":
            if _IDENT.fullmatch(name) or name in ("mu", "beta", "delta", "inv", "e"):
                raise ParseError(f"{name!r} is reserved", line=lineno, column=1)
            try:
                gens[name] = P.parse_perm(body)
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno, column=col + 1) from None
        else:
            depth, eq = 0, None
            for i, c in enumerate(body):
                depth += c in "(["
                depth -= c in ")]"
                if c == "=" and depth == 0:
                    eq = i
                    break
            if eq is None:
                raise ParseError("relation needs 'lhs = rhs'", line=lineno, column=col + 1)
            lhs = _TermParser(body[:eq], gens, line=lineno, column_offset=col).parse()
            rhs = _TermParser(body[eq + 1:], gens, line=lineno, column_offset=col + eq + 1).parse()
            try:
                term_pi(lhs, gens)
                term_pi(rhs, gens)
            except TermTypeError as exc:
                raise ParseError(str(exc), line=lineno, column=col + 1) from None
            rels[name] = (lhs, rhs)
    try:
        return PresentationData(gens, rels)
    except TermTypeError as exc:
        raise ParseError(str(exc), line=len(text.splitlines()), column=1) from None


def format_presentation(data: PresentationData) -> str:
    lines = ["GENERATORS"]
    lines += [f"{k}: {P.format_perm(v, 'cycle')}" for k, v in data.generators.items()]
    lines.append("RELATIONS")
    lines += [f"{k}: {a} = {b}" for k, (a, b) in data.relations.items()]
    return "\n".join(lines) + "\n"


SIGMA_PRESENTATION_TEXT = """\
GENERATORS
sigma: (1 2)
RELATIONS
rho1: sigma * sigma = e2
rho2: mu(sigma; e1, e2) = mu(e2; e1, sigma) * mu(e2; sigma, e1)
"""


def sigma_presentation() -> PresentationData:
    """One transposition, squaring to the identity, satisfying the hexagon-style relation."""
    return parse_presentation(SIGMA_PRESENTATION_TEXT)


def _size_vectors(length: int, max_sum: int):
    if length == 0:
        yield ()
        return
    for first in range(max_sum + 1):
        for rest in _size_vectors(length - 1, max_sum - first):
            yield (first,) + rest


def generated_closure(op: ActionOperad, seeds: Iterable, n_max: int, max_elements: int = 100_000,
                      key: Callable = lambda g: g) -> tuple[dict[int, list], bool]:
    """Close ``seeds`` and all identities under products, inverses, block sums and duplications.

    Only arities up to ``n_max`` are kept.  Elements are merged when their
    ``key`` agrees, so for instances with a semi-decidable word problem the
    closure is an under-approximation.  Returns the elements per arity and
    whether the closure finished within ``max_elements``.
    """
    pools: dict[int, dict] = {n: {} for n in range(n_max + 1)}
    frontier = []

    def add(g) -> None:
        n = op.arity(g)
        if n <= n_max:
            k = key(g)
            if k not in pools[n]:
                pools[n][k] = g
                frontier.append(g)

    for n in range(n_max + 1):
        add(op.identity(n))
    for g in seeds:
        add(g)
    while frontier:
        if sum(len(p) for p in pools.values()) > max_elements:
            return {n: list(p.values()) for n, p in pools.items()}, False
        current, frontier[:] = list(frontier), []
        for g in current:
            n = op.arity(g)
            add(op.inverse(g))
            for h in list(pools[n].values()):
                add(op.multiply(g, h))
                add(op.multiply(h, g))
            for m in range(n_max - n + 1):
                for h in list(pools[m].values()):
                    add(op.block_sum([g, h]))
                    add(op.block_sum([h, g]))
            for ks in _size_vectors(n, n_max):
                add(op.duplication(g, ks))
    return {n: list(p.values()) for n, p in pools.items()}, True


_SCOPE = ("relations are evaluated in the target and the generated sub-operad is compared with the "
          "target at each finite arity; the universal property itself is not checked")


def check_presentation(data: PresentationData, target: ActionOperad, assignment: Mapping[str, object],
                       n_max: int = 4, max_elements: int = 100_000) -> dict:
    """Check relations and generation of a presentation in ``target``.

    Generators whose image has a different underlying permutation from
    their declared type are listed under ``typing``.  Such an assignment is
    not a map of collections over the symmetric groups (into the trivial
    operad every generator lands on the identity), but relations and
    generation are still checked.
    """
    missing = [sym for sym in data.generators if sym not in assignment]
    if missing:
        raise TermTypeError(f"generators {missing} are not assigned", Gen(missing[0]))
    mismatches = [{"generator": sym, "type": P.format_perm(data.generators[sym]),
                   "assigned": P.format_perm(target.pi(assignment[sym]))}
                  for sym in data.generators if target.pi(assignment[sym]) != data.generators[sym]]
    relations = []
    for name, (lhs, rhs) in data.relations.items():
        a, b = _eval(lhs, target, assignment), _eval(rhs, target, assignment)
        eq = target.equal(a, b)
        status = {Equality.EQUAL: "Pass", Equality.NOT_EQUAL: "Fail"}.get(eq, "Inconclusive")
        relations.append({"relation": name, "status": status, "lhs": target.format(a), "rhs": target.format(b)})
    rel_status = _combine(r["status"] for r in relations)

    if target.finite:
        pools, complete = generated_closure(target, assignment.values(), n_max, max_elements)
        per_arity = {n: {"reached": len(pools[n]), "order": target.order(n)} for n in range(n_max + 1)}
        if not complete:
            gen_status = "Inconclusive"
        else:
            gen_status = "Pass" if all(v["reached"] == v["order"] for v in per_arity.values()) else "Fail"
    else:
        per_arity, gen_status = {}, "Skipped"
    generation = {"status": gen_status, "per_arity": per_arity}
    if gen_status == "Skipped":
        generation["reason"] = f"{target.name} has infinite groups; only the relations were checked"
    overall = _combine([rel_status] + ([gen_status] if gen_status != "Skipped" else []))
    return {"target": target.name, "status": overall, "relations_status": rel_status,
            "relations": relations, "generation": generation,
            "typing": {"status": "Mismatch" if mismatches else "Pass", "mismatches": mismatches},
            "scope": _SCOPE}


def _combine(statuses: Iterable[str]) -> str:
    s = set(statuses)
    if "Fail" in s:
        return "Fail"
    if "Inconclusive" in s:
        return "Inconclusive"
    return "Pass"


def cactus_presentation_check(n_max: int = 5, max_pool: int = 400, max_rounds: int = 3) -> dict:
    """Check that ``s_{1,2}`` generates every ``s_{p,q}`` under products, block sums and duplications.

    Arities are filled in increasing order.  Arity ``n`` starts from block
    sums and duplications of words of lower arity.  Then up to
    ``max_rounds`` rounds of products follow, keeping the ``max_pool``
    shortest words after greedy cancellation.  A generator counts as reached
    once :func:`cactus_equal` proves it equal to a pooled word.  The
    closure is deliberately partial, so a miss reads ``Inconclusive``.
    The report also checks that the commutor ``c_{m,n}`` is inverse to
    ``c_{n,m}`` for ``m + n <= 4``.
    """
    pools: dict[int, dict] = {n: {(): CactusWord(n)} for n in range(n_max + 1)}
    if n_max >= 2:
        pools[2][((1, 2),)] = CactusWord(2, [(1, 2)])
    found: dict[tuple, int] = {}
    rounds_used = {}

    def keep(n: int, words) -> None:
        pool = pools[n]
        for w in words:
            norm = _greedy(w.letters)
            if norm not in pool:
                pool[norm] = CactusWord(n, norm)
        if len(pool) > max_pool:
            pools[n] = dict(sorted(pool.items(), key=lambda kv: (len(kv[0]), kv[0]))[:max_pool])

    def scan(n: int, round_no: int) -> bool:
        done = True
        for p in range(1, n + 1):
            for q in range(p + 1, n + 1):
                if (n, p, q) in found:
                    continue
                t = CactusWord(n, [(p, q)])
                if ((p, q),) in pools[n] or any(
                        cactus_equal(w, t, max_states=2000) is Equality.EQUAL
                        for w in pools[n].values() if len(w) % 2 == 1 and len(w) <= 5):
                    found[(n, p, q)] = round_no
                else:
                    done = False
        return done

    for n in range(2, n_max + 1):
        seeds = []
        for a in range(1, n):
            for g in pools[a].values():
                for h in pools[n - a].values():
                    seeds.append(cactus_beta([g, h]))
        for m in range(2, n):
            for g in pools[m].values():
                seeds.extend(cactus_delta(g, ks) for ks in _size_vectors(m, n) if sum(ks) == n)
        keep(n, seeds)
        r = 0
        while not scan(n, r) and r < max_rounds:
            r += 1
            words = list(pools[n].values())
            keep(n, [g * h for g in words for h in words])
        rounds_used[n] = r

    per_arity = {}
    for n in range(2, n_max + 1):
        per_arity[n] = [{"generator": f"({p},{q})", "reached": (n, p, q) in found,
                         "round": found.get((n, p, q))}
                        for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    all_found = all(item["reached"] for items in per_arity.values() for item in items)
    involution = []
    for total in range(2, 5):
        for m in range(1, total):
            prod = coboundary_commutor(m, total - m) * coboundary_commutor(total - m, m)
            involution.append({"m": m, "n": total - m,
                               "result": cactus_equal(prod, CactusWord(total)).value})
    if any(x["result"] == "NotEqual" for x in involution):
        status = "Fail"
    elif all_found and all(x["result"] == "Equal" for x in involution):
        status = "Pass"
    else:
        status = "Inconclusive"
    return {"status": status, "seed": "(1,2)", "product_rounds": rounds_used, "generators": per_arity,
            "coboundary_involution": involution}
