"""Corner vectors: the cone of each term described over N plus infinity.

For a term t of a finite set U, the entry for x_i is infinite when x_i is
Janet multiplicative for t; otherwise the cone of t is cut off at exponent
deg_i(t) + k_i - 1, one below the nonmultiplicative power x_i^(k_i). This is
the unique bound admitting exactly the multiples of t whose extra i-degree
stays under k_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .janet import JanetAnnotation, nmp_table
from .terms import Term, TermSet


class Infinity:
    """Explicit unbounded corner entry; a single shared instance."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = Infinity()


@dataclass(frozen=True)
class CornerVector:
    """Per-variable cap of a cone; entries follow the variable order."""

    entries: tuple

    def is_infinite(self, i: int) -> bool:
        return self.entries[i - 1] is INF

    def format(self) -> str:
        return "*".join(
            f"x{i}^{'inf' if e is INF else e}"
            for i, e in enumerate(self.entries, 1)
        )

    def __str__(self):
        return self.format()


def infinite_corners(
    terms: TermSet,
    table: dict[Term, JanetAnnotation] | None = None,
) -> dict[Term, CornerVector]:
    """Corner vector for every term of the set, keyed in lex order."""
    if table is None:
        table = nmp_table(terms)
    out: dict[Term, CornerVector] = {}
    for t in terms:
        ann = table[t]
        entries = []
        for i in range(1, terms.nvars + 1):
            if i in ann.multiplicative:
                entries.append(INF)
            else:
                entries.append(t.deg(i) + ann.nmp[i] - 1)
        out[t] = CornerVector(tuple(entries))
    return out


def corner_to_json(vec: CornerVector) -> list:
    return ["inf" if e is INF else e for e in vec.entries]


def corner_from_json(entries: list) -> CornerVector:
    return CornerVector(tuple(INF if e == "inf" else int(e) for e in entries))
