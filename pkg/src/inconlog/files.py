"""The plain-text theory format.

    # comment
    premise ID: FORMULA
    order ID1 < ID2

Blank lines and '#' comments are skipped.  An order line says ID1 is
less reliable than ID2.  Reading does not validate the theory (that is
validate's job) beyond the line syntax itself; rendering writes the
premises in declaration order and the order pairs sorted, and
re-reading the result reproduces the theory exactly.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import List, Tuple

from . import formulas
from .errors import FormulaSyntaxError, TheoryFormatError
from .theory import Premise, ReliabilityTheory

_ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def parse_theory(text: str) -> ReliabilityTheory:
    premises: List[Premise] = []
    pairs: List[Tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "premise":
            name, colon, body = rest.partition(":")
            name = name.strip()
            if not colon:
                raise TheoryFormatError("premise line needs 'id: formula'", lineno)
            if not _ID_RE.match(name):
                raise TheoryFormatError(f"bad premise id {name!r}", lineno)
            try:
                formula = formulas.parse_formula(body)
            except FormulaSyntaxError as err:
                raise TheoryFormatError(str(err), lineno) from err
            premises.append(Premise(name, formula))
        elif keyword == "order":
            left, angle, right = rest.partition("<")
            left, right = left.strip(), right.strip()
            if not angle or not _ID_RE.match(left) or not _ID_RE.match(right):
                raise TheoryFormatError("order line needs 'id < id'", lineno)
            pairs.append((left, right))
        else:
            raise TheoryFormatError(f"unknown directive {keyword!r}", lineno)
    return ReliabilityTheory(tuple(premises), frozenset(pairs))


def render_theory(theory: ReliabilityTheory) -> str:
    lines = [
        f"premise {p.id}: {formulas.format_formula(p.formula)}"
        for p in theory.premises
    ]
    lines.extend(f"order {x} < {y}" for x, y in sorted(theory.order))
    return "\n".join(lines) + "\n"


def load_theory(path: "str | Path") -> ReliabilityTheory:
    return parse_theory(Path(path).read_text(encoding="utf-8"))


def save_theory(theory: ReliabilityTheory, path: "str | Path") -> None:
    Path(path).write_text(render_theory(theory), encoding="utf-8")
