"""Command-line interface.

Exit codes: 0 pass, 1 fail, 2 inconclusive, 64 usage error.  ``--format
json`` prints one JSON object per line.  Randomness comes from ``--seed``,
which defaults to ``ACTIONOPERAD_SEED`` or 0.

Examples::

    actionoperad verify sigma --max-arity 5
    actionoperad eval braid "delta(s1; 2, 2)"
    actionoperad cartesian --operad comm
    actionoperad freecat hom --lambda sigma --X discrete:a,b --src a,b --dst b,a
    actionoperad present check sigma.pres --target sigma --n-max 4
    actionoperad counterexample axiom8
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import finoperad as F
from . import freecat as FC
from . import nonexamples as NX
from . import presentation as PR
from .aopcore import (
    AxiomReport,
    SampleBudget,
    Status,
    check_derived_laws,
    check_nine_axioms,
    check_single_axiom,
    overall_status,
)
from .errors import ActionOperadError
from .instances import SELECTORS, get_instance

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64

BUDGETS = {
    "small": {"exhaustive": 4, "random": 50},
    "medium": {"exhaustive": 5, "random": 200},
    "large": {"exhaustive": 6, "random": 1000},
}

_STATUS_EXIT = {Status.PASS: EXIT_PASS, Status.FAIL: EXIT_FAIL, Status.INCONCLUSIVE: EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def default_seed() -> int:
    raw = os.environ.get("ACTIONOPERAD_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ACTIONOPERAD_SEED must be an integer, got {raw!r}") from None


def _instance(selector: str):
    try:
        return get_instance(selector)
    except KeyError:
        raise UsageError(f"unknown instance {selector!r}; choose from {', '.join(SELECTORS)}") from None


class _Out:
    def __init__(self, mode: str, stream=None):
        self.mode = mode
        self.stream = stream or sys.stdout

    def emit(self, obj: dict, text: str) -> None:
        if self.mode == "json":
            print(json.dumps(obj, sort_keys=True, ensure_ascii=False), file=self.stream)
        else:
            print(text, file=self.stream)


def _report_text(r: AxiomReport) -> str:
    line = f"{r.instance} {r.axiom_id}: {r.status.value} ({r.cases_checked} cases)"
    if r.witness is not None:
        line += " witness=" + json.dumps(r.witness, ensure_ascii=False)
    return line


# ---------------------------------------------------------------------------
# verify

def _verify_job(selector: str, suite: str, budget: SampleBudget, axiom: str | None) -> list[AxiomReport]:
    op = get_instance(selector)
    if suite == "nine":
        return check_nine_axioms(op, budget, [axiom])
    if suite == "single":
        return [check_single_axiom(op, budget)]
    return check_derived_laws(op, budget)


def cmd_verify(args, out: _Out) -> int:
    _instance(args.instance)
    preset = BUDGETS[args.budget]
    exhaustive = preset["exhaustive"] if args.max_arity is None else args.max_arity
    random_cases = preset["random"] if args.random_cases is None else args.random_cases
    budget = SampleBudget(max_total_arity=max(exhaustive, args.random_arity), exhaustive_up_to=exhaustive,
                          random_cases=random_cases, seed=args.seed)
    jobs = []
    if args.suite in ("all", "nine"):
        jobs += [("nine", str(a)) for a in range(1, 10)]
    if args.suite in ("all", "single"):
        jobs.append(("single", None))
    if args.suite in ("all", "derived"):
        jobs.append(("derived", None))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_verify_job, args.instance, s, budget, a) for s, a in jobs]
            results = [f.result() for f in futures]
    else:
        results = [_verify_job(args.instance, s, budget, a) for s, a in jobs]
    reports = [r for batch in results for r in batch]
    for r in reports:
        out.emit(r.as_dict(), _report_text(r))
    return _STATUS_EXIT[overall_status(reports)]


# ---------------------------------------------------------------------------
# eval

def cmd_eval(args, out: _Out) -> int:
    op = _instance(args.instance)
    try:
        value = PR.evaluate_expression(args.expr, op)
    except (ActionOperadError, ValueError) as exc:
        raise UsageError(f"cannot evaluate {args.expr!r}: {exc}") from None
    text = op.format(value)
    out.emit({"instance": op.name, "expr": args.expr, "result": text, "pi": str(op.pi(value))}, text)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# symmetrize / cartesian

def _operad(spec: str, lam, n_max: int) -> F.TruncatedOperad:
    builtins = {
        "assoc": lambda: F.assoc_operad(lam, n_max),
        "comm": lambda: F.comm_operad(lam, n_max),
        "lambda": lambda: F.lambda_as_operad(lam, n_max, "regular"),
        "lambda-trivial": lambda: F.lambda_as_operad(lam, n_max, "trivial"),
    }
    if spec in builtins:
        return builtins[spec]()
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"--operad must be one of {', '.join(builtins)} or a JSON file, got {spec!r}")
    try:
        return F.TruncatedOperad.from_json(path.read_text())
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot read operad from {spec}: {exc}") from None


def cmd_symmetrize(args, out: _Out) -> int:
    lam = _instance(args.lam)
    if not lam.finite:
        raise UsageError(f"symmetrization needs finite groups; {lam.name} is infinite")
    Pd = _operad(args.operad, lam, args.n_max)
    S = F.symmetrize(Pd)
    sizes = {n: S.size(n) for n in range(Pd.n_max + 1)}
    unit = F.check_unit_counit(Pd, "unit")
    obj = {"operad": Pd.name, "lambda": lam.name, "sizes": sizes, "unit_bijective": unit["bijective"]}
    counit = None
    if args.counit:
        from .instances.sigma import SymmetricOperad

        base = F.pullback(_operad(args.operad, SymmetricOperad(), args.n_max), lam)
        counit = F.check_unit_counit(base, "counit")
        obj["counit_bijective"] = counit["bijective"]
        if "witness" in counit:
            obj["counit_witness"] = counit["witness"]
    text = f"sym({Pd.name}) sizes " + " ".join(f"{n}:{k}" for n, k in sizes.items())
    text += f"; unit bijective={unit['bijective']}"
    if counit is not None:
        text += f"; counit bijective={counit['bijective']}"
        if "witness" in counit:
            text += " witness=" + ",".join(counit["witness"]["classes"])
    out.emit(obj, text)
    return EXIT_PASS


def cmd_cartesian(args, out: _Out) -> int:
    lam = _instance(args.lam)
    if not lam.finite:
        raise UsageError(f"the cartesian check needs finite groups; {lam.name} is infinite")
    Pd = _operad(args.operad, lam, args.n_max)
    res = F.is_cartesian(Pd)
    obj = {"operad": Pd.name, "lambda": Pd.lam.name, **res}
    if res["result"] == "Cartesian":
        out.emit(obj, "Cartesian")
        return EXIT_PASS
    w = res["witness"]
    out.emit(obj, f"NotCartesian witness=({w['p']},{w['pi_g']})")
    return EXIT_FAIL


# ---------------------------------------------------------------------------
# freecat

def _category(spec: str) -> FC.FiniteCategory:
    kind, _, rest = spec.partition(":")
    items = [x for x in rest.split(",") if x] if rest else []
    if kind == "discrete":
        return FC.discrete_category(items)
    if kind == "translation":
        return FC.translation_category(items)
    if kind == "terminal":
        return FC.terminal_category()
    if kind == "cyclic":
        try:
            m = int(rest)
        except ValueError:
            raise UsageError(f"cyclic:<m> needs an integer, got {rest!r}") from None
        if m < 1:
            raise UsageError("cyclic:<m> needs m >= 1")
        return FC.delooping(list(range(m)), lambda a, b: (a + b) % m, 0)
    path = Path(spec)
    if path.is_file():
        try:
            return FC.FiniteCategory.from_json(path.read_text())
        except (ValueError, KeyError) as exc:
            raise UsageError(f"cannot read category from {spec}: {exc}") from None
    raise UsageError(f"--X must be discrete:a,b | translation:a,b | cyclic:<m> | terminal | FILE, got {spec!r}")


def _objects(text: str) -> tuple:
    return tuple(x for x in text.split(",") if x) if text else ()


def cmd_freecat(args, out: _Out) -> int:
    lam = _instance(args.lam)
    if args.action == "hom":
        X = _category(args.X)
        src, dst = _objects(args.src), _objects(args.dst)
        unknown = [x for x in src + dst if x not in X.objects]
        if unknown:
            raise UsageError(f"objects {unknown} are not in {args.X}")
        if not lam.finite and len(src) == len(dst):
            raise UsageError(f"hom-sets of E{lam.name} are infinite")
        count = FC.hom_count(X, src, dst, lam)
        out.emit({"lambda": lam.name, "X": args.X, "src": list(src), "dst": list(dst), "count": count}, str(count))
        return EXIT_PASS
    res = FC.el_one_is_blambda(lam, args.n_max)
    text = f"{res['result']} hom sizes " + " ".join(f"{n}:{k}" for n, k in res["hom_sizes"].items())
    out.emit(res, text.rstrip())
    return EXIT_PASS if res["result"] == "Pass" else EXIT_FAIL


# ---------------------------------------------------------------------------
# present

def _default_assignment(data: PR.PresentationData, target) -> dict:
    if target.name == "sigma":
        return dict(data.generators)
    if target.name == "trivial":
        return {k: target.identity(v.n) for k, v in data.generators.items()}
    raise UsageError(f"give --assign NAME=ELEMENT for every generator when the target is {target.name}")


def cmd_present(args, out: _Out) -> int:
    if args.action == "cactus":
        res = PR.cactus_presentation_check(args.n_max)
        reached = sum(g["reached"] for gs in res["generators"].values() for g in gs)
        total = sum(len(gs) for gs in res["generators"].values())
        out.emit(res, f"{res['status']} generators reached {reached}/{total}")
        return {"Pass": EXIT_PASS, "Fail": EXIT_FAIL}.get(res["status"], EXIT_INCONCLUSIVE)
    target = _instance(args.target)
    try:
        data = PR.parse_presentation(Path(args.file).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    except ActionOperadError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    if args.assign:
        assignment = {}
        for item in args.assign:
            name, sep, literal = item.partition("=")
            if not sep or name not in data.generators:
                raise UsageError(f"bad --assign {item!r}")
            try:
                assignment[name] = target.parse(literal)
            except (ActionOperadError, ValueError) as exc:
                raise UsageError(f"cannot read {literal!r} in {target.name}: {exc}") from None
        missing = set(data.generators) - set(assignment)
        if missing:
            raise UsageError(f"no --assign for {sorted(missing)}")
    else:
        assignment = _default_assignment(data, target)
    res = PR.check_presentation(data, target, assignment, args.n_max)
    text = f"relations={res['relations_status']} generation={res['generation']['status']}"
    for r in res["relations"]:
        text += f"\n  {r['relation']}: {r['status']}  {r['lhs']} | {r['rhs']}"
    out.emit(res, text)
    return {"Pass": EXIT_PASS, "Fail": EXIT_FAIL}.get(res["status"], EXIT_INCONCLUSIVE)


# ---------------------------------------------------------------------------
# counterexample

def cmd_counterexample(args, out: _Out) -> int:
    if args.which == "axiom8":
        r = NX.exhibit_axiom8_failure(args.variant or 1)
    elif args.which == "axiom6":
        r = NX.exhibit_axiom6_failure(args.variant or 2, args.size_reading)
    else:
        res = NX.subgroup_obstruction(args.family, args.n_max)
        out.emit(res, f"{args.family}: {res['result']} first at n={res.get('first_obstruction')}")
        return EXIT_FAIL if res["result"] == "Obstructed" else EXIT_PASS
    out.emit(r.as_dict(), _report_text(r))
    return _STATUS_EXIT[r.status]


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="actionoperad", description="Check action operads and related constructions.")
    p.add_argument("--format", choices=["text", "json"], default="text", help="output mode")
    p.add_argument("--seed", type=int, default=None, help="random seed (default: ACTIONOPERAD_SEED or 0)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the axiom suites on an instance")
    v.add_argument("instance", help=" | ".join(SELECTORS))
    v.add_argument("--suite", choices=["all", "nine", "single", "derived"], default="all")
    v.add_argument("--budget", choices=sorted(BUDGETS), default="small")
    v.add_argument("--max-arity", type=int, default=None, help="total arity bound of the exhaustive pass")
    v.add_argument("--random-cases", type=int, default=None)
    v.add_argument("--random-arity", type=int, default=8, help="output arity bound of random cases")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate mu/beta/delta expressions")
    e.add_argument("instance")
    e.add_argument("expr")
    e.set_defaults(func=cmd_eval)

    for name, func, helptext in (("symmetrize", cmd_symmetrize, "symmetrize a finite Λ-operad"),
                                 ("cartesian", cmd_cartesian, "test the cartesian criterion")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--operad", required=True, help="assoc | comm | lambda | lambda-trivial | FILE.json")
        s.add_argument("--lambda", dest="lam", default="sigma")
        s.add_argument("--n-max", type=int, default=3)
        if name == "symmetrize":
            s.add_argument("--counit", action="store_true",
                           help="also check the counit on the pullback of the symmetric operad of the same name")
        s.set_defaults(func=func)

    f = sub.add_parser("freecat", help="free Λ-monoidal categories")
    f.add_argument("action", choices=["hom", "el1"])
    f.add_argument("--lambda", dest="lam", default="sigma")
    f.add_argument("--X", default="terminal", help="discrete:a,b | translation:a,b | cyclic:<m> | terminal | FILE")
    f.add_argument("--src", default="")
    f.add_argument("--dst", default="")
    f.add_argument("--n-max", type=int, default=4)
    f.set_defaults(func=cmd_freecat)

    pr = sub.add_parser("present", help="check presentations")
    pr.add_argument("action", choices=["check", "cactus"])
    pr.add_argument("file", nargs="?")
    pr.add_argument("--target", default="sigma")
    pr.add_argument("--n-max", type=int, default=4)
    pr.add_argument("--assign", action="append", default=[], metavar="NAME=ELEMENT")
    pr.set_defaults(func=cmd_present)

    c = sub.add_parser("counterexample", help="replay the non-examples")
    c.add_argument("which", choices=["axiom8", "axiom6", "subgroup"])
    c.add_argument("--variant", type=int, choices=[1, 2], default=None)
    c.add_argument("--size-reading", choices=["column", "row"], default="column")
    c.add_argument("--family", choices=list(NX.FAMILIES), default="Alternating")
    c.add_argument("--n-max", type=int, default=5)
    c.set_defaults(func=cmd_counterexample)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = default_seed()
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if args.command == "present" and args.action == "check" and not args.file:
            raise UsageError("present check needs a presentation file")
        return args.func(args, _Out(args.format))
    except UsageError as exc:
        print(f"actionoperad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
