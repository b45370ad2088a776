"""Built-in expansions used by the cross-verification sweeps.

The members cover every dispatch branch of the closed-form run-length sets:
finite and eventually periodic shapes, first digit 1 versus >= 2, second
nonzero position below, at, and above the finite length, and divisibility
of the word length by the finite length.
"""

from __future__ import annotations

from .expansion import ExpansionOfOne

DEFAULT_CORPUS: tuple[str, ...] = (
    "1,1",
    "1,1,1",
    "1,0,1,0,0,0,1",
    "1,0,0,0,0,1;0,0,0,0,0,1",
    "2,1,1",
    "3,0,2,0,0,0,0,1",
    "3,0,0,2;0,0,0,2",
)


def default_corpus() -> list[ExpansionOfOne]:
    return [ExpansionOfOne.parse(spec) for spec in DEFAULT_CORPUS]


def load_corpus(path: str) -> list[ExpansionOfOne]:
    """Read one expansion spec per line; blank lines and # comments skipped."""
    members = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            text = line.split("#", 1)[0].strip()
            if text:
                members.append(ExpansionOfOne.parse(text))
    return members
