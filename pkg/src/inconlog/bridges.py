"""Bridges to two older frameworks: modal categories and the ATMS.

Modal categories are reliability by another name: a sequence of layers
M_0, ..., M_n, most plausible first, where everything in an earlier
layer outranks everything in a later one and layers are internally
unordered.  Encoding the layers this way makes the extensions of the
resulting theory coincide with the preferred maximal consistent
subsets obtained by widening M_0 layer by layer.

An ATMS problem has assumption atoms, node atoms and justifications
(Horn implications from atoms to a node; "deny" justifications
conclude a negated node and stand in for the nogood constraints).
Encoded as a theory in which every justification outranks every
assumption, the classic notions fall out of the argument engine:

  label(n)  = assumption parts of the minimal premise sets entailing n
  nogoods   = minimal assumption parts of the minimal unsatisfiable
              premise sets

Both are independent of which linear extension is chosen, since
supporting arguments and MUSes never consult the order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from . import formulas
from .arguments import (
    DEFAULT_SUBSET_BUDGET,
    minimal_entailing_subsets,
    minimal_unsat_subsets,
)
from .errors import TheoryFormatError
from .formulas import Atom, Formula, Implies, Not, conj, DEFAULT_ATOM_CAP
from .theory import Premise, ReliabilityTheory


@dataclass(frozen=True)
class ModalCategories:
    """Layers of formulas, most plausible first."""

    layers: Tuple[FrozenSet[Formula], ...]


def from_modal_categories(categories: ModalCategories) -> ReliabilityTheory:
    """Layered theory: ids m{layer}_{k}, later layers below earlier ones.

    Formulas within a layer are numbered in rendering order so the
    result is deterministic; members of the same layer stay unordered.
    """
    premises: List[Premise] = []
    by_layer: List[List[str]] = []
    for i, layer in enumerate(categories.layers):
        ids_here = []
        ordered = sorted(layer, key=formulas.format_formula)
        for k, f in enumerate(ordered):
            pid = f"m{i}_{k}"
            premises.append(Premise(pid, f))
            ids_here.append(pid)
        by_layer.append(ids_here)
    pairs = set()
    for i, upper in enumerate(by_layer):
        for lower in by_layer[i + 1 :]:
            pairs.update((lo, up) for lo in lower for up in upper)
    return ReliabilityTheory(tuple(premises), frozenset(pairs))


@dataclass(frozen=True)
class Justification:
    body: FrozenSet[str]
    head: str
    deny: bool = False  # a deny justification concludes !head


@dataclass(frozen=True)
class AtmsProblem:
    assumptions: FrozenSet[str]
    nodes: FrozenSet[str]
    justifications: Tuple[Justification, ...]

    def __post_init__(self):
        overlap = self.assumptions & self.nodes
        if overlap:
            raise ValueError(f"atoms declared twice: {sorted(overlap)}")
        known = self.assumptions | self.nodes
        for j in self.justifications:
            if j.head not in self.nodes:
                raise ValueError(f"justification head {j.head!r} is not a node")
            stray = j.body - known
            if stray:
                raise ValueError(f"unknown atoms in body: {sorted(stray)}")


def justification_formula(j: Justification) -> Formula:
    head: Formula = Atom(j.head)
    if j.deny:
        head = Not(head)
    if not j.body:
        return head
    body_atoms = sorted(j.body)
    body: Formula = Atom(body_atoms[0])
    for name in body_atoms[1:]:
        body = conj(body, Atom(name))
    return Implies(body, head)


def atms_encode(problem: AtmsProblem) -> ReliabilityTheory:
    """One premise per assumption and per justification.

    Assumptions keep their atom as id; justifications are numbered in
    declaration order.  Every assumption is less reliable than every
    justification, and that is the entire order.
    """
    premises: List[Premise] = [
        Premise(name, Atom(name)) for name in sorted(problem.assumptions)
    ]
    just_ids: List[str] = []
    for k, j in enumerate(problem.justifications):
        pid = f"j{k + 1}"
        premises.append(Premise(pid, justification_formula(j)))
        just_ids.append(pid)
    pairs = frozenset(
        (name, pid) for name in sorted(problem.assumptions) for pid in just_ids
    )
    return ReliabilityTheory(tuple(premises), pairs)


def _minimal_sets(sets: Iterable[FrozenSet[str]]) -> FrozenSet[FrozenSet[str]]:
    pool = set(sets)
    return frozenset(
        s for s in pool if not any(other < s for other in pool)
    )


def atms_labels(
    problem: AtmsProblem,
    node: str,
    budget: int = DEFAULT_SUBSET_BUDGET,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> FrozenSet[FrozenSet[str]]:
    """Minimal supporting environments for a node, as assumption sets."""
    if node not in problem.nodes:
        raise ValueError(f"unknown node {node!r}")
    theory = atms_encode(problem)
    entailing = minimal_entailing_subsets(
        theory.formulas_by_id(),
        theory.ids,
        Atom(node),
        budget=budget,
        max_atoms=max_atoms,
    )
    return _minimal_sets(s & problem.assumptions for s in entailing)


def atms_nogoods(
    problem: AtmsProblem,
    budget: int = DEFAULT_SUBSET_BUDGET,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> FrozenSet[FrozenSet[str]]:
    """Minimal assumption sets that can never hold together."""
    theory = atms_encode(problem)
    muses = minimal_unsat_subsets(theory, budget=budget, max_atoms=max_atoms)
    return _minimal_sets(m & problem.assumptions for m in muses)


# ------------------------------------------------------------ text format
#
# assume a1.
# node n.
# just a1, m -> n.
# deny a1, a2 -> n.
#
# Comment lines start with '#'; every statement ends with a period.


def parse_atms(text: str) -> AtmsProblem:
    assumptions: List[str] = []
    nodes: List[str] = []
    justifications: List[Justification] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.endswith("."):
            raise TheoryFormatError("statement must end with '.'", lineno)
        line = line[:-1].strip()
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword in ("assume", "node"):
            if not rest.isidentifier():
                raise TheoryFormatError(f"bad atom name {rest!r}", lineno)
            (assumptions if keyword == "assume" else nodes).append(rest)
            continue
        if keyword in ("just", "deny"):
            body_text, arrow, head = rest.rpartition("->")
            if not arrow:
                raise TheoryFormatError("justification needs '->'", lineno)
            head = head.strip()
            body = [part.strip() for part in body_text.split(",") if part.strip()]
            for name in body + [head]:
                if not name.isidentifier():
                    raise TheoryFormatError(f"bad atom name {name!r}", lineno)
            justifications.append(
                Justification(frozenset(body), head, deny=keyword == "deny")
            )
            continue
        raise TheoryFormatError(f"unknown statement {keyword!r}", lineno)
    return AtmsProblem(
        frozenset(assumptions), frozenset(nodes), tuple(justifications)
    )
