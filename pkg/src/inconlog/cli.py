"""Command line front end.

Exit codes: 0 for success (and "yes" answers), 1 for "no" answers,
2 for parse or validation problems, 3 for exceeded caps or budgets.
Output is deterministic byte for byte: collections are sorted before
printing and nothing depends on hash order.

The resource caps can be set per invocation with --max-atoms,
--max-extensions and --mus-budget, or process-wide with the
environment variables INCONLOG_MAX_ATOMS, INCONLOG_MAX_EXTENSIONS and
INCONLOG_MUS_BUDGET (flags win).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import IO, List, Optional, Sequence

from . import af as af_mod
from . import arguments, bridges, extensions, files, formulas, semantics, theory
from .errors import CapExceeded, InputError

_ENV_PREFIX = "INCONLOG_"


@dataclass
class Caps:
    max_atoms: int = formulas.DEFAULT_ATOM_CAP
    max_extensions: int = theory.DEFAULT_EXTENSION_CAP
    mus_budget: int = arguments.DEFAULT_SUBSET_BUDGET


def _env_default(name: str, fallback: int) -> int:
    raw = os.environ.get(_ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError as err:
        raise InputError(f"{_ENV_PREFIX}{name} must be an integer, got {raw!r}") from err


def _caps(ns: argparse.Namespace) -> Caps:
    return Caps(
        max_atoms=ns.max_atoms
        if ns.max_atoms is not None
        else _env_default("MAX_ATOMS", formulas.DEFAULT_ATOM_CAP),
        max_extensions=ns.max_extensions
        if ns.max_extensions is not None
        else _env_default("MAX_EXTENSIONS", theory.DEFAULT_EXTENSION_CAP),
        mus_budget=ns.mus_budget
        if ns.mus_budget is not None
        else _env_default("MUS_BUDGET", arguments.DEFAULT_SUBSET_BUDGET),
    )


def _load_valid(path: str) -> theory.ReliabilityTheory:
    loaded = files.load_theory(path)
    report = theory.validate(loaded)
    if not report.ok:
        raise InputError(report.issues[0].describe())
    return loaded


def _format_id_set(ids) -> str:
    return " ".join(sorted(ids)) if ids else "(empty)"


def _format_atom_set(atoms) -> str:
    return "{" + ",".join(sorted(atoms)) + "}"


def _first_order(t: theory.ReliabilityTheory) -> theory.TotalOrder:
    return theory.first_linear_extension(t)


def _cmd_check(ns, out: IO[str]) -> int:
    loaded = files.load_theory(ns.file)
    report = theory.validate(loaded)
    for issue in report.issues:
        print(issue.describe(), file=out)
    for warning in report.warnings:
        print(f"warning: {warning}", file=out)
    if not report.ok:
        return 2
    print("valid", file=out)
    return 0


def _cmd_extensions(ns, out: IO[str]) -> int:
    caps = _caps(ns)
    t = _load_valid(ns.file)
    members = extensions.all_extensions(
        t, extension_cap=caps.max_extensions, max_atoms=caps.max_atoms
    )
    for line in sorted(_format_id_set(m) for m in members):
        print(line, file=out)
    print(f"(count: {len(members)})", file=out)
    return 0


def _cmd_entails(ns, out: IO[str]) -> int:
    caps = _caps(ns)
    t = _load_valid(ns.file)
    goal = formulas.parse_formula(ns.formula)
    ask = extensions.credulous_entails if ns.credulous else extensions.skeptical_entails
    answer = ask(
        t, goal, extension_cap=caps.max_extensions, max_atoms=caps.max_atoms
    )
    print("yes" if answer else "no", file=out)
    return 0 if answer else 1


def _cmd_models(ns, out: IO[str]) -> int:
    caps = _caps(ns)
    t = _load_valid(ns.file)
    models = semantics.preferred_models(t, max_atoms=caps.max_atoms)
    for line in sorted(_format_atom_set(m) for m in models):
        print(line, file=out)
    return 0


def _cmd_conditional(ns, out: IO[str]) -> int:
    caps = _caps(ns)
    t = _load_valid(ns.file)
    alpha = formulas.parse_formula(ns.alpha)
    beta = formulas.parse_formula(ns.beta)
    answer = semantics.conditional(
        t, alpha, beta, extension_cap=caps.max_extensions, max_atoms=caps.max_atoms
    )
    print("yes" if answer else "no", file=out)
    return 0 if answer else 1


def _cmd_revise(ns, out: IO[str]) -> int:
    t = _load_valid(ns.file)
    alpha = formulas.parse_formula(ns.alpha)
    files.save_theory(semantics.revise(t, alpha), ns.output)
    return 0


def _cmd_af(ns, out: IO[str]) -> int:
    caps = _caps(ns)
    t = _load_valid(ns.file)
    if not ns.rule4:
        framework = af_mod.linear_framework(
            t, _first_order(t), budget=caps.mus_budget, max_atoms=caps.max_atoms
        )
        out.write(af_mod.render_af(framework))
        return 0
    framework = af_mod.partial_framework(
        t, budget=caps.mus_budget, max_atoms=caps.max_atoms
    )
    out.write(af_mod.render_af(framework))
    listed = []
    for ext in af_mod.stable_extensions(framework):
        ignored = af_mod.is_ignored(t, ext)
        if ignored and not ns.show_ignored:
            continue
        victims = {
            a.victim
            for a in ext.members
            if isinstance(a, arguments.UnderminingArgument)
        }
        survivors = _format_id_set(frozenset(t.ids) - victims)
        suffix = " (ignored)" if ignored else ""
        listed.append(f"stable: {survivors}{suffix}")
    for line in sorted(listed):
        print(line, file=out)
    return 0


def _cmd_argue(ns, out: IO[str]) -> int:
    caps = _caps(ns)
    t = _load_valid(ns.file)
    goal = formulas.parse_formula(ns.formula)
    trace: Optional[List[str]] = [] if ns.trace else None
    _, state = arguments.saturate(
        t,
        _first_order(t),
        trace=trace,
        budget=caps.mus_budget,
        max_atoms=caps.max_atoms,
    )
    if trace is not None:
        for line in trace:
            print(line, file=out)
    if not arguments.belief_holds(t, state, goal, max_atoms=caps.max_atoms):
        print("not believed", file=out)
        return 1
    found = arguments.supports(
        t, state, goal, budget=caps.mus_budget, max_atoms=caps.max_atoms
    )
    for line in sorted(arguments.format_argument(a) for a in found):
        print(line, file=out)
    return 0


def _cmd_atms(ns, out: IO[str]) -> int:
    caps = _caps(ns)
    with open(ns.file, encoding="utf-8") as handle:
        problem = bridges.parse_atms(handle.read())
    if ns.node is not None:
        try:
            labels = bridges.atms_labels(
                problem, ns.node, budget=caps.mus_budget, max_atoms=caps.max_atoms
            )
        except ValueError as err:
            raise InputError(str(err)) from err
        for line in sorted(_format_atom_set(s) for s in labels):
            print(line, file=out)
        return 0
    nogoods = bridges.atms_nogoods(
        problem, budget=caps.mus_budget, max_atoms=caps.max_atoms
    )
    for line in sorted(_format_atom_set(s) for s in nogoods):
        print(line, file=out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--max-atoms", type=int, default=None)
    shared.add_argument("--max-extensions", type=int, default=None)
    shared.add_argument("--mus-budget", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="inconlog",
        description="Reason with inconsistent premises ordered by reliability.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("check", parents=[shared], help="validate a theory file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_check)

    p = commands.add_parser(
        "extensions", parents=[shared], help="most reliable consistent premise sets"
    )
    p.add_argument("file")
    p.set_defaults(handler=_cmd_extensions)

    p = commands.add_parser(
        "entails", parents=[shared], help="skeptical (default) or credulous entailment"
    )
    p.add_argument("file")
    p.add_argument("formula")
    p.add_argument("--credulous", action="store_true")
    p.set_defaults(handler=_cmd_entails)

    p = commands.add_parser("models", parents=[shared], help="preferred models")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_models)

    p = commands.add_parser(
        "conditional", parents=[shared], help="does alpha reasonably imply beta"
    )
    p.add_argument("file")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(handler=_cmd_conditional)

    p = commands.add_parser(
        "revise", parents=[shared], help="add alpha as the most reliable premise"
    )
    p.add_argument("file")
    p.add_argument("alpha")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_revise)

    p = commands.add_parser(
        "af", parents=[shared], help="argumentation framework export"
    )
    p.add_argument("file")
    p.add_argument("--rule4", action="store_true")
    p.add_argument("--show-ignored", action="store_true")
    p.set_defaults(handler=_cmd_af)

    p = commands.add_parser(
        "argue", parents=[shared], help="minimal supporting arguments for a goal"
    )
    p.add_argument("file")
    p.add_argument("formula")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(handler=_cmd_argue)

    p = commands.add_parser("atms", parents=[shared], help="ATMS labels and nogoods")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--node")
    group.add_argument("--nogoods", action="store_true")
    p.set_defaults(handler=_cmd_atms)

    return parser


def run(argv: Sequence[str], out: Optional[IO[str]] = None) -> int:
    """Run one command; returns the exit code instead of raising SystemExit."""
    stream = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    try:
        return ns.handler(ns, stream)
    except InputError as err:
        print(f"error: {err}", file=stream)
        return 2
    except FileNotFoundError as err:
        print(f"error: {err}", file=stream)
        return 2
    except CapExceeded as err:
        print(f"error: {err}", file=stream)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))
