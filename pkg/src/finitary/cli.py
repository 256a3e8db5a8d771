"""Command-line front end.

Subcommands: ``ordinal`` (compare/validate/cnf/height over bracket text),
``seq`` (monitor a sequence program), ``formula`` (parse/nnf/eval),
``game`` (synth/play/serve) and ``proof`` (check/search).  Every command
prints human-readable lines by default; ``--json`` switches to a trace
document ``{"schema_version": 1, "kind": ..., "invocation": ..., "payload":
...}`` on stdout.  Errors go to stderr with a nonzero exit status.
"""

import argparse
import json
import sys

from . import descent, game, ordinals, proofs
from .formulas import (
    FormulaSyntaxError,
    eval_bounded,
    free_vars,
    nnf,
    parse_formula,
    print_formula,
)

SCHEMA_VERSION = 1


def _emit(args, kind: str, payload: dict, lines: list[str]) -> None:
    if args.json:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": kind,
            "invocation": {"command": args.command, "argv": sys.argv[1:]},
            "payload": payload,
        }
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


def _fail(message: str, code: int = 1) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


# ---------------------------------------------------------------- ordinal

def cmd_ordinal(args) -> int:
    try:
        if args.action == "compare":
            a = ordinals.parse_ordinal(args.values[0])
            b = ordinals.parse_ordinal(args.values[1])
            verdict = {ordinals.LESS: "LT", ordinals.EQUAL: "EQ",
                       ordinals.GREATER: "GT"}[ordinals.compare(a, b)]
            _emit(args, "ordinal_compare", {"verdict": verdict}, [verdict])
            return 0
        value = ordinals.parse_ordinal(args.values[0])
        if args.action == "validate":
            ok = ordinals.is_ordinal(value)
            _emit(args, "ordinal_validate", {"valid": ok},
                  ["ordinal" if ok else "invalid"])
            return 0 if ok else 1
        if not ordinals.is_ordinal(value):
            return _fail("not a valid ordinal (constituents must weakly decrease)")
        if args.action == "cnf":
            text = ordinals.render_cnf(value)
            _emit(args, "ordinal_cnf", {"cnf": text}, [text])
        else:
            h = ordinals.height(value)
            _emit(args, "ordinal_height", {"height": h}, [str(h)])
        return 0
    except ordinals.ParseError as err:
        return _fail(str(err))


# -------------------------------------------------------------------- seq

def _program_from_spec(spec: str) -> descent.SequenceProgram:
    kind, _, rest = spec.partition(":")
    if kind == "constant":
        return descent.constant_program(ordinals.parse_ordinal(rest))
    if kind == "descent":
        seed_text, _, bracket = rest.partition(":")
        return descent.canonical_descent(ordinals.parse_ordinal(bracket),
                                         int(seed_text))
    if kind == "list":
        values = [ordinals.parse_ordinal(part) for part in rest.split(";") if part]
        return descent.replay_program(values)
    raise ValueError(
        f"unknown program spec {spec!r}; use constant:<brackets>, "
        f"descent:<seed>:<brackets>, or list:<brackets>;<brackets>;...")


def cmd_seq(args) -> int:
    try:
        program = _program_from_spec(args.program)
    except (ordinals.ParseError, ValueError) as err:
        return _fail(str(err))
    try:
        report = descent.monitor(program, args.budget, window=args.window)
    except ValueError as err:
        return _fail(str(err))
    _emit(args, "descent_report", report.to_payload(), [report.to_line()])
    return 0 if report.violation is None else 2


# ---------------------------------------------------------------- formula

def cmd_formula(args) -> int:
    try:
        f = parse_formula(args.text)
    except FormulaSyntaxError as err:
        return _fail(str(err))
    if args.action == "parse":
        text = print_formula(f)
        _emit(args, "formula_parse",
              {"formula": text, "free_vars": sorted(free_vars(f))}, [text])
        return 0
    if args.action == "nnf":
        text = print_formula(nnf(f))
        _emit(args, "formula_nnf", {"formula": text}, [text])
        return 0
    try:
        verdict = eval_bounded(f, args.bound)
    except ValueError as err:
        return _fail(str(err))
    _emit(args, "formula_eval",
          {"verdict": str(verdict), "value": verdict.value, "bound": args.bound},
          [str(verdict)])
    return 0


# ------------------------------------------------------------------- game

def _game_state(args) -> game.GameState:
    sentence = nnf(parse_formula(args.sentence))
    return game.initial_state([sentence], args.bound)


def cmd_game(args) -> int:
    if args.action == "serve":
        from . import server
        return server.serve(port=args.port)
    try:
        state = _game_state(args)
    except (FormulaSyntaxError, ValueError) as err:
        return _fail(str(err))
    if args.action == "synth":
        tree = game.synthesize_reduction(state, args.depth)
        if tree is None:
            _emit(args, "game_synth", {"reduction": False, "bound": args.bound},
                  ["NO-REDUCTION"])
            return 1
        lines_count = sum(1 for _ in game.walk_strategy(state, tree))
        payload = {
            "reduction": True,
            "bound": args.bound,
            "lines": lines_count,
            "root_measure": ordinals.render_brackets(tree.measure),
        }
        _emit(args, "game_synth", payload,
              [f"REDUCTION lines={lines_count} "
               f"measure={ordinals.render_cnf(tree.measure)}"])
        return 0
    # play: synthesized proponent when available, spoiler adversary
    tree = game.synthesize_reduction(state, args.depth)
    proponent = game.tree_strategy(tree) if tree is not None \
        else game.first_legal_strategy
    result = game.play(state, proponent, game.spoiler_adversary, args.budget)
    payload = game.trace_payload(result, args.bound)
    payload["schema_version"] = SCHEMA_VERSION
    lines = [f"{player}: {game.move_to_payload(move)}" for player, move in result.moves]
    lines.append(f"outcome: {result.outcome}")
    _emit(args, "game_trace", payload, lines)
    return 0 if result.outcome == "win" else 1


# ------------------------------------------------------------------ proof

def cmd_proof(args) -> int:
    profile = proofs.DEFAULT_PROFILE
    if args.extra_axiom:
        try:
            extras = tuple(parse_formula(text) for text in args.extra_axiom)
        except FormulaSyntaxError as err:
            return _fail(str(err))
        profile = proofs.CalculusProfile(extra_axioms=extras)
    if args.action == "check":
        try:
            with open(args.file, encoding="utf-8") as handle:
                proof = proofs.parse_proof(handle.read())
        except (OSError, proofs.ProofFormatError, FormulaSyntaxError) as err:
            return _fail(str(err))
        report = proofs.check_proof(proof, profile)
        if report.ok:
            conclusion = print_formula(proof.conclusion) if proof.steps else "-"
            _emit(args, "proof_check",
                  {"ok": True, "steps": len(proof.steps),
                   "length": proofs.proof_length(proof),
                   "conclusion": conclusion},
                  [f"OK steps={len(proof.steps)} conclusion={conclusion}"])
            return 0
        _emit(args, "proof_check",
              {"ok": False, "step": report.step, "reason": report.reason},
              [f"ERROR step={report.step} reason={report.reason}"])
        return 2
    # search
    try:
        found = proofs.search_contradiction(args.max_length, profile)
    except ValueError as err:
        return _fail(str(err))
    if found is None:
        _emit(args, "search_report",
              {"max_length": args.max_length, "found": None,
               "ceiling": profile.search_ceiling},
              [f"CON-VERIFIED length<{args.max_length}"])
        return 0
    text = proofs.format_proof(found)
    _emit(args, "search_report",
          {"max_length": args.max_length, "found": text.splitlines(),
           "length": proofs.proof_length(found)},
          ["CONTRADICTION", *text.splitlines()])
    return 3


# ------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finitary",
        description="ordinals below epsilon-zero, descent monitoring, "
                    "arithmetic formulas, the reduction game, and a proof kernel")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ordinal", help="bracket-notation ordinal operations")
    p.add_argument("action", choices=["compare", "validate", "cnf", "height"])
    p.add_argument("values", nargs="+", help="bracket text, e.g. [[],[]]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ordinal)

    p = sub.add_parser("seq", help="monitor an ordinal sequence program")
    p.add_argument("action", choices=["monitor"])
    p.add_argument("--program", required=True,
                   help="constant:<brackets> | descent:<seed>:<brackets> "
                        "| list:<b1>;<b2>;...")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--window", type=int, default=descent.DEFAULT_WINDOW)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("formula", help="parse, normalize, or evaluate a formula")
    p.add_argument("action", choices=["parse", "nnf", "eval"])
    p.add_argument("text")
    p.add_argument("--bound", type=int, default=4,
                   help="quantifier domain bound for eval")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("game", help="the reduction game")
    p.add_argument("action", choices=["synth", "play", "serve"])
    p.add_argument("--sentence", help="closed formula; normalized to NNF")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--depth", type=int, default=64)
    p.add_argument("--budget", type=int, default=200, help="play step budget")
    p.add_argument("--port", type=int, default=8741)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("proof", help="check proof files, search for contradictions")
    p.add_argument("action", choices=["check", "search"])
    p.add_argument("file", nargs="?", help="proof file for 'check'")
    p.add_argument("--max-length", type=int, default=5)
    p.add_argument("--extra-axiom", action="append", default=[],
                   help="extend the axiom list (test harness hook)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_proof)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "game" and args.action != "serve" and not args.sentence:
        return _fail("--sentence is required for synth/play")
    if args.command == "proof" and args.action == "check" and not args.file:
        return _fail("proof check needs a file argument")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
