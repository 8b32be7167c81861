"""Command-line front end.

Exit codes: 0 success or "equivalent", 1 "not equivalent" or a failed
check, 2 invalid input or a system outside the requested fragment,
3 "unknown" (budget exhausted), 4 a derivation that failed to replay.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, nullseq
from .completion import complete, minimize, verify_epsilon_theorems
from .corpus import example
from .fileformat import (
    FormatError,
    derivation_to_json,
    dumps,
    format_system,
    load_system,
    outcome_to_json,
    system_to_json,
)
from .rewrite import (
    DEFAULT_MAX_STATES,
    DerivationError,
    FragmentError,
    Verdict,
    check_cancellation_condition,
    check_non_overlapping,
    decide_bounded,
    decide_fixed_length,
    decide_reducing,
    reduce_to_normal_form,
)

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_UNKNOWN, EXIT_REPLAY = 0, 1, 2, 3, 4
VERDICT_EXIT = {Verdict.EQUIVALENT: EXIT_OK, Verdict.NOT_EQUIVALENT: EXIT_NO,
                Verdict.UNKNOWN: EXIT_UNKNOWN}


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _out(text=""):
    print(text)


def _word(alphabet, text):
    try:
        w = alphabet.parse(text)
    except ValueError as exc:
        raise _Fail(EXIT_INPUT, f"bad word {text!r}: {exc}") from None
    if not w:
        raise _Fail(EXIT_INPUT, "words must be non-empty")
    return w


def _alphabet_for(text, given):
    if given:
        return core.Alphabet(given)
    tokens = text.split()
    if len(tokens) > 1:
        return core.Alphabet(sorted(set(tokens)))
    return core.Alphabet.from_text(text.strip())


def _load(path):
    try:
        return load_system(path)
    except (OSError, FormatError) as exc:
        raise _Fail(EXIT_INPUT, str(exc)) from None


def _replay(d, system, null=None):
    try:
        d.replay(system, null)
    except DerivationError as exc:
        raise _Fail(EXIT_REPLAY, f"derivation does not replay: {exc}") from None


def cmd_reduce(args):
    sf = _load(args.system)
    system = sf.system
    w = _word(system.alphabet, args.word)
    report = check_non_overlapping(system.lhs_words()) if system.equations else None
    if report is not None and not report.ok:
        raise _Fail(EXIT_INPUT, "left-hand sides overlap:\n  " + "\n  ".join(report.describe()))
    try:
        nf, d = reduce_to_normal_form(w, system, args.strategy, args.seed)
    except FragmentError as exc:
        raise _Fail(EXIT_INPUT, str(exc)) from None
    if args.check:
        _replay(d, system)
    if args.json:
        _out(dumps({"normal_form": system.fmt(nf), "derivation": derivation_to_json(d, system)}))
    else:
        for line in d.describe(system):
            _out(line)
        _out(f"normal form: {system.fmt(nf)}")
        _out(f"steps: {len(d)}")
    return EXIT_OK


def _decide(args, sf, p, q):
    system = sf.system
    budget = dict(max_length=args.max_length, max_states=args.max_states)
    if args.bounded:
        return "bounded", decide_bounded(p, q, system, null=sf.null, **budget), sf.null
    if args.exact_case == "a":
        return "fixed-length", decide_fixed_length(p, q, system), None
    if args.exact_case == "b":
        return "reducing", decide_reducing(p, q, system), None
    if sf.null is not None:
        ns = sf.null_system()
        return "null-sequence", nullseq.decide_problem_two(p, q, ns), sf.null
    if system.length_preserving:
        return "fixed-length", decide_fixed_length(p, q, system), None
    if system.length_reducing and check_non_overlapping(system.lhs_words()).ok:
        return "reducing", decide_reducing(p, q, system), None
    return "bounded", decide_bounded(p, q, system, **budget), None


def cmd_equiv(args):
    sf = _load(args.system)
    system = sf.system
    p, q = _word(system.alphabet, args.p), _word(system.alphabet, args.q)
    try:
        method, out, null = _decide(args, sf, p, q)
    except (FragmentError, ValueError) as exc:
        raise _Fail(EXIT_INPUT, str(exc)) from None
    if out.witness is not None and args.check:
        _replay(out.witness, system, null)
    if args.json:
        data = outcome_to_json(out, system, null)
        data["method"] = method
        _out(dumps(data))
    else:
        _out(f"verdict: {out.verdict.value}")
        _out(f"method: {method}")
        if out.note:
            _out(f"note: {out.note}")
        _out(f"states: {out.states}")
        if out.witness is not None:
            for line in out.witness.describe(system, null):
                _out(line)
            _out(f"steps: {len(out.witness)}")
    return VERDICT_EXIT[out.verdict]


def cmd_complete(args):
    alphabet = _alphabet_for(args.word, args.alphabet)
    r = _word(alphabet, args.word)
    if len(r) < 2:
        raise _Fail(EXIT_INPUT, "the null sequence needs at least two symbols")
    state = complete(r, alphabet)
    fmt = alphabet.format
    ms = minimize(state) if args.minimize or args.verify else None
    report = verify_epsilon_theorems(ms, state) if args.verify else None
    if args.trace:
        lines = [json.dumps(rec, sort_keys=True, ensure_ascii=False) for rec in state.trace]
        if args.trace == "-":
            sys.stderr.write("\n".join(lines) + "\n")
        else:
            with open(args.trace, "w", encoding="utf-8") as fh:
                fh.write("\n".join(lines) + "\n")
    if args.json:
        data = {
            "seed": fmt(r),
            "iterations": state.iterations,
            "fixpoint": state.fixpoint,
            "gamma": sorted(fmt(w) for w in state.gamma),
            "delta": system_to_json(state.delta, r),
            "trace": list(state.trace),
        }
        if ms is not None:
            data["epsilon"] = system_to_json(ms.epsilon, r)
            data["certified_minimum"] = ms.certified_minimum
        if report is not None:
            data["verify"] = {k: list(v) for k, v in report.checks.items()}
        _out(dumps(data))
    else:
        _out(f"# null sequences ({len(state.gamma)}), fixpoint after {state.iterations} rounds")
        for w in sorted(state.gamma):
            _out(f"#   {fmt(w)}")
        sys.stdout.write(format_system(state.delta, r, comment="generated system"))
        if ms is not None:
            note = "minimized system" + ("" if ms.certified_minimum else " (greedy, not certified)")
            sys.stdout.write(format_system(ms.epsilon, r, comment=note))
        if report is not None:
            for name, bad in report.checks.items():
                _out(f"{name}: {'pass' if not bad else 'FAIL'}")
                for item in bad:
                    _out(f"  {item}")
    return EXIT_OK if report is None or report.ok else EXIT_NO


def _analysis(w, fmt):
    so = core.max_self_overlap(w)
    chain = core.overlap_chain(w)
    root = core.primitive_root(w)
    ext = core.minimal_extension(w)
    data = {
        "word": fmt(w),
        "length": len(w),
        "borders": [fmt(b) for b in core.borders(w)],
        "primitive_root": {"root": fmt(root.root), "exponent": root.exponent},
        "self_overlap": None,
        "chain": [{"u": fmt(s.u), "c": fmt(s.c), "d": fmt(s.d)} for s in chain],
        "intermediate_overlaps": [],
        "minimal_extension": {"t": fmt(ext.t), "x": fmt(ext.x), "y": fmt(ext.y)},
    }
    if so is not None:
        data["self_overlap"] = {"c": fmt(so.c), "u": fmt(so.u), "d": fmt(so.d),
                                "alpha": fmt(so.alpha), "beta": fmt(so.beta), "n": so.n}
        data["intermediate_overlaps"] = [fmt(o.u) for o in core.intermediate_overlaps(w)]
    return data


def cmd_analyze(args):
    alphabet = _alphabet_for(args.word, args.alphabet)
    w = _word(alphabet, args.word)
    data = _analysis(w, alphabet.format)
    if args.json:
        _out(dumps(data))
        return EXIT_OK
    _out(f"word: {data['word']}")
    _out(f"length: {data['length']}")
    _out("borders: " + (", ".join(data["borders"]) or "none"))
    root = data["primitive_root"]
    _out(f"primitive root: {root['root']} (exponent {root['exponent']})")
    so = data["self_overlap"]
    if so is None:
        _out("self-overlap: none")
    else:
        _out(f"self-overlap: C={so['c']} U={so['u']} D={so['d']} "
             f"alpha={so['alpha'] or '(empty)'} beta={so['beta']} n={so['n']}")
    _out(f"overlap chain: {len(data['chain'])} stage(s)")
    for k, st in enumerate(data["chain"], 1):
        _out(f"  stage {k}: U={st['u']} C={st['c']} D={st['d']}")
    _out("intermediate overlaps: " + (", ".join(data["intermediate_overlaps"]) or "none"))
    ext = data["minimal_extension"]
    _out(f"minimal extension: T={ext['t']} X={ext['x']} Y={ext['y']}")
    return EXIT_OK


def cmd_corpus(args):
    params = {}
    if args.example == 1:
        params["n"] = args.n or [1]
        params["extra"] = args.extra or []
    elif args.example == 3:
        params.update(a=args.a, c=args.c, n=args.n[0] if args.n else 3)
    elif args.example == 4:
        params["n"] = args.n[0] if args.n else 2
    elif args.example == 5:
        params.update(n=args.n[0] if args.n else 2, p=args.p)
    try:
        spec = example(args.example, **params)
    except ValueError as exc:
        raise _Fail(EXIT_INPUT, str(exc)) from None
    ns = spec.ns
    if args.json:
        _out(dumps(system_to_json(ns.eqs, ns.r)))
    else:
        shown = {k: v for k, v in spec.params.items() if v not in ((), [])}
        label = f"example {spec.example}" + (f" {shown}" if shown else "")
        sys.stdout.write(format_system(ns.eqs, ns.r, comment=label))
    return EXIT_OK


def cmd_check(args):
    sf = _load(args.system)
    system = sf.system
    results = []  # (name, passed, details)
    if system.mode == "semi" or (system.equations and system.length_reducing):
        if system.equations:
            rep = check_non_overlapping(system.lhs_words())
            results.append(("non-overlapping", rep.ok, rep.describe()))
        bad = [i for i, eq in enumerate(system.equations) if len(eq.lhs) <= len(eq.rhs)]
        results.append(("length-reducing", not bad, [f"rule {i}" for i in bad]))
    if sf.null is not None:
        try:
            ns = sf.null_system()
        except ValueError as exc:
            raise _Fail(EXIT_INPUT, str(exc)) from None
        comp = nullseq.check_complete(ns)
        results.append(("complete", comp.ok,
                        [f"{system.alphabet.name(z)}R not parallel to R{system.alphabet.name(z)}"
                         for z in comp.failing]))
        cert = nullseq.check_perfect_syntactic(ns)
        if cert is not None:
            results.append(("perfect (certificate)", True, []))
        else:
            bound = args.max_len or len(ns.r) + 2
            perf = nullseq.check_perfect_bounded(ns, bound)
            detail = ([f"A={system.fmt(perf.counterexample[0])} B={system.fmt(perf.counterexample[1])}"]
                      if perf.counterexample else [])
            results.append((f"perfect up to length {bound}", perf.ok, detail))
        if len(ns.r) >= 2:
            state = complete(ns.r, system.alphabet)
            rep = verify_epsilon_theorems(minimize(state), state)
            results.append(("epsilon theorems", rep.ok,
                            [f"{k}: {v}" for k, bad in rep.checks.items() for v in bad]))
    if not results:
        cert = check_cancellation_condition(system, orient=True)
        results.append(("cancellation condition", cert.ok, [cert.violation] if cert.violation else []))
    if args.json:
        _out(dumps({name: {"pass": ok, "details": list(det)} for name, ok, det in results}))
    else:
        for name, ok, det in results:
            _out(f"{name}: {'pass' if ok else 'FAIL'}")
            for item in det:
                _out(f"  {item}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_NO


def build_parser():
    parser = argparse.ArgumentParser(prog="thue", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, check=True):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if check:
            p.add_argument("--check", action="store_true",
                           help="replay every derivation before printing it")

    p = sub.add_parser("reduce", help="reduce a word to its normal form")
    p.add_argument("system")
    p.add_argument("word")
    p.add_argument("--strategy", choices=["leftmost", "rightmost", "random"], default="leftmost")
    p.add_argument("--seed", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("equiv", help="decide whether two words are equivalent")
    p.add_argument("system")
    p.add_argument("p")
    p.add_argument("q")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact-case", choices=["a", "b"],
                   help="force the length-preserving (a) or length-reducing (b) procedure")
    g.add_argument("--bounded", action="store_true", help="force the budgeted search")
    p.add_argument("--max-length", type=_positive, default=None)
    p.add_argument("--max-states", type=_positive, default=DEFAULT_MAX_STATES)
    common(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("complete", help="generate the equation system of a null sequence")
    p.add_argument("word")
    p.add_argument("--alphabet", help="symbols separated by spaces (default: those of the word)")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--verify", action="store_true", help="minimize and check the structural theorems")
    p.add_argument("--trace", metavar="PATH", help="write one JSON line per round ('-' for stderr)")
    common(p, check=False)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("analyze", help="borders, roots and overlap chains of a word")
    p.add_argument("word")
    p.add_argument("--alphabet")
    common(p, check=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("corpus", help="print one of the worked examples as a system file")
    p.add_argument("example", type=int, choices=[1, 2, 3, 4, 5])
    p.add_argument("--n", type=_positive, nargs="+", help="n (examples 3-5) or n_1 ... n_r (example 1)")
    p.add_argument("--p", type=_positive, default=2)
    p.add_argument("--a", default="a")
    p.add_argument("--c", default="c")
    p.add_argument("--extra", nargs="*", help="extra symbols for example 1")
    common(p, check=False)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("check", help="run the checks that apply to a system file")
    p.add_argument("system")
    p.add_argument("--max-len", type=_positive, default=None,
                   help="length bound for the perfection search")
    common(p, check=False)
    p.set_defaults(func=cmd_check)
    return parser


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
