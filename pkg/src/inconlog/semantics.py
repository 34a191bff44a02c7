"""Preferred models, conditional queries and revision.

Interpretations are compared by the premises they satisfy: M is less
preferred than N when their satisfied-premise sets differ and every
premise M alone satisfies is outweighed by some strictly more reliable
premise that N alone satisfies.  The preferred models of a theory are
the maximal interpretations under this relation, over exactly the
atoms that occur in the theory (plus any query atoms).

A conditional "alpha reasonably implies beta" is answered by adding
alpha as a fresh most reliable premise and asking whether beta is a
skeptical consequence of the result.  Revision reuses the same
construction and returns the rebuilt theory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from . import formulas
from .errors import AtomCapExceeded
from .extensions import skeptical_entails
from .formulas import (
    ConsistencyIndex,
    Formula,
    Interpretation,
    DEFAULT_ATOM_CAP,
    interpretation_of_index,
)
from .theory import (
    DEFAULT_EXTENSION_CAP,
    Premise,
    ReliabilityTheory,
    closure_of,
    ensure_valid,
)

REVISION_ID_STEM = "__revision"


def satisfied_premises(
    interpretation: Interpretation, theory: ReliabilityTheory
) -> FrozenSet[str]:
    """Ids of the premises the interpretation makes true."""
    return frozenset(
        p.id for p in theory.premises if formulas.evaluate(p.formula, interpretation)
    )


@dataclass(frozen=True)
class PreferenceWitness:
    """Why `more` beats `less`: each surplus premise of `less` is outweighed."""

    less: Interpretation
    more: Interpretation
    pairing: Tuple[Tuple[str, str], ...]  # (premise of less, more reliable premise of more)


def _premset_beats(
    winner: FrozenSet[str], loser: FrozenSet[str], closure
) -> Optional[List[Tuple[str, str]]]:
    if winner == loser:
        return None
    pairing = []
    surplus_winner = winner - loser
    for pid in sorted(loser - winner):
        match = next(
            (q for q in sorted(surplus_winner) if (pid, q) in closure), None
        )
        if match is None:
            return None
        pairing.append((pid, match))
    return pairing


def preference_witness(
    theory: ReliabilityTheory, less: Interpretation, more: Interpretation
) -> Optional[PreferenceWitness]:
    """A pairing witnessing less < more, or None when it does not hold."""
    pairing = _premset_beats(
        satisfied_premises(more, theory),
        satisfied_premises(less, theory),
        closure_of(theory),
    )
    if pairing is None:
        return None
    return PreferenceWitness(less, more, tuple(pairing))


def prefers(
    theory: ReliabilityTheory, less: Interpretation, more: Interpretation
) -> bool:
    """True iff `more` is strictly preferred over `less`."""
    return preference_witness(theory, less, more) is not None


def preferred_models(
    theory: ReliabilityTheory,
    extra_atoms: Iterable[str] = (),
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> FrozenSet[Interpretation]:
    """All maximally preferred interpretations.

    Works on the quotient by satisfied-premise set: interpretations
    with the same premise set are incomparable, so dominance only needs
    checking between distinct premise sets.
    """
    ensure_valid(theory)
    atoms = tuple(sorted(theory.atoms() | set(extra_atoms)))
    if len(atoms) > max_atoms:
        raise AtomCapExceeded(
            f"{len(atoms)} atoms exceed the preferred-model cap of {max_atoms}"
        )
    index = ConsistencyIndex(
        theory.formulas_by_id(),
        extra=tuple(formulas.Atom(a) for a in atoms),
        max_atoms=max_atoms,
    )
    groups: Dict[FrozenSet[str], List[int]] = {}
    for k in range(1 << len(atoms)):
        premset = frozenset(
            pid for pid, mask in index.masks.items() if mask >> k & 1
        )
        groups.setdefault(premset, []).append(k)
    closure = closure_of(theory)
    winners: Set[int] = set()
    for premset, indices in groups.items():
        dominated = any(
            other != premset and _premset_beats(other, premset, closure) is not None
            for other in groups
        )
        if not dominated:
            winners.update(indices)
    return frozenset(interpretation_of_index(k, atoms) for k in sorted(winners))


def revise(theory: ReliabilityTheory, alpha: Formula) -> ReliabilityTheory:
    """Rebuild the theory with alpha as the strictly most reliable premise.

    Any premise whose formula is syntactically alpha is replaced; order
    pairs are restricted to the surviving premises (after transitive
    closure, so comparisons that merely passed through alpha survive)
    and every survivor is placed below the fresh premise.
    """
    ensure_valid(theory)
    kept = tuple(p for p in theory.premises if p.formula != alpha)
    kept_ids = {p.id for p in kept}
    serial = 0
    while f"{REVISION_ID_STEM}_{serial}" in kept_ids:
        serial += 1
    new_id = f"{REVISION_ID_STEM}_{serial}"
    pairs = {
        (x, y) for x, y in closure_of(theory) if x in kept_ids and y in kept_ids
    }
    pairs.update((pid, new_id) for pid in kept_ids)
    return ReliabilityTheory(kept + (Premise(new_id, alpha),), frozenset(pairs))


def conditional(
    theory: ReliabilityTheory,
    alpha: Formula,
    beta: Formula,
    extension_cap: int = DEFAULT_EXTENSION_CAP,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> bool:
    """Does assuming alpha (as most reliable) make beta skeptically follow?"""
    return skeptical_entails(
        revise(theory, alpha), beta, extension_cap=extension_cap, max_atoms=max_atoms
    )
