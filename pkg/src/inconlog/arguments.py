"""Arguments for and against premises, and the believed premise set.

A supporting argument P => g records that premise set P entails goal
g.  An undermining argument P =/> v records that P together with
premise v is minimally unsatisfiable, so whoever accepts all of P must
drop v.  Undermining arguments come from the minimal unsatisfiable
subsets (MUSes) of the premise set: against a total reliability order
the least reliable member of each MUS is the one undermined; against
the bare partial order every minimally reliable member is.

Given the undermining arguments for a total order, the believed set is
the unique fixed point D = premises \\ out(D), where out(D) collects
the victims of arguments whose support lies inside D.  It is computed
by a single most-reliable-first sweep: each premise stays unless some
argument against it has all its support still standing.  The sweep
touches every argument at most once, so it costs on the order of
(number of arguments) * (premise count) literal operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from . import formulas
from .errors import SubsetBudgetExceeded
from .formulas import ConsistencyIndex, Formula, DEFAULT_ATOM_CAP
from .theory import ReliabilityTheory, TotalOrder, min_under, minimal_elements

DEFAULT_SUBSET_BUDGET = 24


@dataclass(frozen=True)
class SupportingArgument:
    support: FrozenSet[str]
    conclusion: Formula


@dataclass(frozen=True)
class UnderminingArgument:
    support: FrozenSet[str]
    victim: str

    def __post_init__(self):
        if self.victim in self.support:
            raise ValueError(f"victim {self.victim!r} inside its own support")


@dataclass(frozen=True)
class BeliefState:
    believed: FrozenSet[str]
    order: TotalOrder


def _subset_universe(ids: Tuple[str, ...], budget: int, what: str) -> None:
    if len(ids) > budget:
        raise SubsetBudgetExceeded(
            f"{what} over {len(ids)} premises exceeds the budget of {budget}"
        )


def minimal_unsat_subsets(
    theory: ReliabilityTheory,
    budget: int = DEFAULT_SUBSET_BUDGET,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> FrozenSet[FrozenSet[str]]:
    """All minimal unsatisfiable premise subsets, by premise id.

    Ascending-cardinality sweep over the subset lattice, skipping
    supersets of anything already found; at level k everything smaller
    has been seen, so an unsatisfiable survivor is minimal.
    """
    ids = theory.ids
    _subset_universe(ids, budget, "MUS search")
    index = ConsistencyIndex(theory.formulas_by_id(), max_atoms=max_atoms)
    if index.consistent(ids):
        return frozenset()
    found: List[FrozenSet[str]] = []
    for size in range(1, len(ids) + 1):
        for combo in combinations(ids, size):
            subset = frozenset(combo)
            if any(mus <= subset for mus in found):
                continue
            if not index.consistent(combo):
                found.append(subset)
    return frozenset(found)


def undermining_args_linear(
    theory: ReliabilityTheory,
    order: TotalOrder,
    budget: int = DEFAULT_SUBSET_BUDGET,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> FrozenSet[UnderminingArgument]:
    """One argument per MUS, against its least reliable member."""
    out = set()
    for mus in minimal_unsat_subsets(theory, budget=budget, max_atoms=max_atoms):
        victim = min_under(order, mus)
        out.add(UnderminingArgument(mus - {victim}, victim))
    return frozenset(out)


def undermining_args_partial(
    theory: ReliabilityTheory,
    budget: int = DEFAULT_SUBSET_BUDGET,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> FrozenSet[UnderminingArgument]:
    """One argument per MUS per minimally reliable member."""
    out = set()
    for mus in minimal_unsat_subsets(theory, budget=budget, max_atoms=max_atoms):
        for victim in minimal_elements(theory, mus):
            out.add(UnderminingArgument(mus - {victim}, victim))
    return frozenset(out)


def out_set(
    args: Iterable[UnderminingArgument], premise_ids: Iterable[str]
) -> FrozenSet[str]:
    """Victims of arguments whose support lies inside the given set."""
    inside = set(premise_ids)
    return frozenset(a.victim for a in args if a.support <= inside)


def believed_premises(
    theory: ReliabilityTheory,
    args: Iterable[UnderminingArgument],
    order: TotalOrder,
) -> BeliefState:
    """Most-reliable-first sweep to the fixed point D = ids \\ out(D).

    Requires the arguments to come from the MUS construction for this
    order (each victim strictly less reliable than all of its support);
    that is what makes the fixed point unique and one sweep enough.
    """
    against: Dict[str, List[UnderminingArgument]] = {}
    for a in args:
        against.setdefault(a.victim, []).append(a)
    believed: Set[str] = set(theory.ids)
    for pid in order.ranking:
        for a in against.get(pid, ()):
            if a.support <= believed:
                believed.discard(pid)
                break
    return BeliefState(frozenset(believed), order)


def belief_holds(
    theory: ReliabilityTheory,
    state: BeliefState,
    goal: Formula,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> bool:
    """True iff the believed premises classically entail the goal."""
    by_id = theory.formulas_by_id()
    return formulas.entails(
        (by_id[pid] for pid in state.believed), goal, max_atoms=max_atoms
    )


def minimal_entailing_subsets(
    by_id: Mapping[str, Formula],
    universe: Iterable[str],
    goal: Formula,
    budget: int = DEFAULT_SUBSET_BUDGET,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> FrozenSet[FrozenSet[str]]:
    """All subset-minimal id sets within `universe` entailing the goal."""
    ids = tuple(sorted(universe))
    _subset_universe(ids, budget, "support search")
    index = ConsistencyIndex(
        {pid: by_id[pid] for pid in ids}, extra=(goal,), max_atoms=max_atoms
    )
    found: List[FrozenSet[str]] = []
    for size in range(0, len(ids) + 1):
        for combo in combinations(ids, size):
            subset = frozenset(combo)
            if any(small <= subset for small in found):
                continue
            if index.entails(combo, goal):
                found.append(subset)
    return frozenset(found)


def supports(
    theory: ReliabilityTheory,
    state: BeliefState,
    goal: Formula,
    budget: int = DEFAULT_SUBSET_BUDGET,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> FrozenSet[SupportingArgument]:
    """All minimal supporting arguments for a believed goal.

    Raises ValueError when the goal is not believed at all; a believed
    goal always has at least one minimal support (the empty set, when
    the goal is a tautology).
    """
    if not belief_holds(theory, state, goal, max_atoms=max_atoms):
        raise ValueError(f"goal {formulas.format_formula(goal)!r} is not believed")
    subsets = minimal_entailing_subsets(
        theory.formulas_by_id(), state.believed, goal, budget=budget, max_atoms=max_atoms
    )
    return frozenset(SupportingArgument(s, goal) for s in subsets)


def believed_conclusions(
    args: Iterable[SupportingArgument], believed: FrozenSet[str]
) -> List[Formula]:
    """Single scan: conclusions of arguments whose support is believed."""
    seen = set()
    out = []
    for a in args:
        if a.support <= believed and a.conclusion not in seen:
            seen.add(a.conclusion)
            out.append(a.conclusion)
    return out


def premise_arguments(theory: ReliabilityTheory) -> List[SupportingArgument]:
    """The trivial argument {p} => formula(p) for every premise."""
    return [
        SupportingArgument(frozenset((p.id,)), p.formula) for p in theory.premises
    ]


def format_argument(arg: "SupportingArgument | UnderminingArgument") -> str:
    ids = ",".join(sorted(arg.support))
    if isinstance(arg, UnderminingArgument):
        return f"{{{ids}}} =/> {arg.victim}"
    return f"{{{ids}}} => {formulas.format_formula(arg.conclusion)}"


def saturate(
    theory: ReliabilityTheory,
    order: TotalOrder,
    trace: Optional[List[str]] = None,
    budget: int = DEFAULT_SUBSET_BUDGET,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> Tuple[FrozenSet[UnderminingArgument], BeliefState]:
    """Derive every undermining argument for the order, then the fixed point.

    With a trace list supplied, appends one line per derived argument
    (premise arguments first) and one line per believed-set
    recomputation as undermining arguments arrive.
    """
    if trace is not None:
        for a in premise_arguments(theory):
            trace.append(format_argument(a))
    args = undermining_args_linear(theory, order, budget=budget, max_atoms=max_atoms)
    ordered = sorted(args, key=lambda a: (tuple(sorted(a.support)), a.victim))
    accumulated: List[UnderminingArgument] = []
    state = believed_premises(theory, accumulated, order)
    for a in ordered:
        accumulated.append(a)
        state = believed_premises(theory, accumulated, order)
        if trace is not None:
            trace.append(format_argument(a))
            trace.append("believed: " + " ".join(sorted(state.believed)))
    return frozenset(accumulated), state
