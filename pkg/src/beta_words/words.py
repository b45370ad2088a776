"""Admissible words of the beta-shift: membership, order, enumeration, counting.

A word w of length n is admissible when sigma^k(w 0^inf) is lexicographically
smaller than eps*(1, beta) for every 0 <= k < n.  Enumeration, counting and
the successor/predecessor walk all run on a block-match automaton over the
digits of eps(1, beta): state j means the current block matches the first
j - 1 digits, a digit below eps_j closes the block, a digit equal to eps_j
extends it, anything larger (or completing all M digits of a finite
expansion) is inadmissible.  A word is full exactly when its scan ends on a
closed block, i.e. in state 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import AlphabetMismatch, NotAdmissible
from .expansion import ExpansionOfOne, lex_compare, modified_expansion


@dataclass(frozen=True)
class Word:
    """A fixed-length digit word over {0, ..., eps_1}."""

    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("words must have length >= 1")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        return cls(tuple(int(c) for c in text))

    def text(self) -> str:
        if all(d <= 9 for d in self.digits):
            return "".join(str(d) for d in self.digits)
        return ",".join(str(d) for d in self.digits)


@dataclass(frozen=True)
class Automaton:
    """Block-match transition tables, 1-indexed by state (index 0 unused).

    cmp[j]: digit that extends the match in state j.
    adv[j]: state after an extension; 0 when extending is inadmissible
            (a finite expansion fully matched).
    maxdig[j]: largest admissible digit in state j.
    """

    cmp: tuple[int, ...]
    adv: tuple[int, ...]
    maxdig: tuple[int, ...]


@lru_cache(maxsize=None)
def automaton(e: ExpansionOfOne) -> Automaton:
    if e.is_finite:
        digits = e.preperiod
        m = len(digits)
        cmp = (0,) + digits
        adv = (0,) + tuple(j + 1 for j in range(1, m)) + (0,)
        maxdig = (0,) + digits[:-1] + (digits[-1] - 1,)
        return Automaton(cmp, adv, maxdig)
    pre, per = e.preperiod, e.period
    length = len(pre) + len(per)
    cmp = (0,) + pre + per
    adv = (0,) + tuple(j + 1 for j in range(1, length)) + (len(pre) + 1,)
    return Automaton(cmp, adv, cmp)


def check_alphabet(digits: Sequence[int], e: ExpansionOfOne) -> None:
    bound = e.alphabet_max
    for d in digits:
        if not 0 <= d <= bound:
            raise AlphabetMismatch(f"digit {d} outside alphabet 0..{bound}")


def scan_states(digits: Sequence[int], e: ExpansionOfOne) -> list[int]:
    """States after each digit (length n + 1, starting at 1).

    Raises NotAdmissible at the first offending digit.
    """
    aut = automaton(e)
    cmp, adv, maxdig = aut.cmp, aut.adv, aut.maxdig
    states = [1] * (len(digits) + 1)
    s = 1
    for t, d in enumerate(digits):
        if d > maxdig[s] or d < 0:
            raise NotAdmissible(f"digit {d} at position {t + 1} is not admissible")
        s = adv[s] if d == cmp[s] else 1
        states[t + 1] = s
    return states


def is_admissible(w: Word, e: ExpansionOfOne) -> bool:
    """Definitional test: sigma^k(w 0^inf) < eps*(1, beta) for all 0 <= k < n."""
    check_alphabet(w.digits, e)
    star = modified_expansion(e).as_pair()
    for k in range(len(w)):
        if lex_compare((w.digits[k:], (0,)), star) >= 0:
            return False
    return True


def max_word(e: ExpansionOfOne, n: int) -> Word:
    """The lex-largest admissible word of length n: eps*(1, beta)|_n."""
    _check_n(n)
    return Word(modified_expansion(e).digits_prefix(n))


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("word length n must be >= 1")


def _require_admissible(w: Word, e: ExpansionOfOne) -> list[int]:
    check_alphabet(w.digits, e)
    return scan_states(w.digits, e)


def successor(w: Word, e: ExpansionOfOne) -> Word | None:
    """The next admissible word of the same length; None at the maximum.

    Increments the last position that admits a larger digit and fills the
    rest with zeros (always an admissible continuation).
    """
    states = _require_admissible(w, e)
    aut = automaton(e)
    cmp, adv, maxdig = aut.cmp, aut.adv, aut.maxdig
    digits = list(w.digits)
    n = len(digits)
    for t in range(n, 0, -1):
        s = states[t - 1]
        if digits[t - 1] < maxdig[s]:
            nd = digits[t - 1] + 1
            digits[t - 1] = nd
            st = adv[s] if nd == cmp[s] else 1
            for u in range(t, n):
                digits[u] = 0
                st = adv[st] if cmp[st] == 0 else 1
            return Word(tuple(digits))
    return None


def predecessor(w: Word, e: ExpansionOfOne) -> Word | None:
    """The previous admissible word of the same length; None at 0^n.

    A word ending in a nonzero digit steps down by decrementing it; a word
    ending in zero drops its last nonzero digit by one and continues with
    eps*(1, beta) from there.
    """
    _require_admissible(w, e)
    digits = list(w.digits)
    n = len(digits)
    if all(d == 0 for d in digits):
        return None
    if digits[-1] > 0:
        digits[-1] -= 1
        return Word(tuple(digits))
    k = max(i for i in range(n - 1) if digits[i] > 0)
    star = modified_expansion(e)
    return Word(tuple(digits[:k]) + (digits[k] - 1,) + star.digits_prefix(n - k - 1))


def iter_words(
    e: ExpansionOfOne,
    n: int,
    start: Word | None = None,
    stop: Word | None = None,
) -> Iterator[Word]:
    """All admissible words of length n in lex order, optionally [start, stop)."""
    _check_n(n)
    aut = automaton(e)
    cmp, adv, maxdig = aut.cmp, aut.adv, aut.maxdig
    if start is None:
        digits = [0] * n
        states = [1] * (n + 1)
    else:
        if len(start) != n:
            raise ValueError("start word has the wrong length")
        states = _require_admissible(start, e)
        digits = list(start.digits)
    stop_digits = None
    if stop is not None:
        if len(stop) != n:
            raise ValueError("stop word has the wrong length")
        stop_digits = tuple(stop.digits)
    while True:
        word = tuple(digits)
        if stop_digits is not None and word >= stop_digits:
            return
        yield Word(word)
        for t in range(n, 0, -1):
            s = states[t - 1]
            if digits[t - 1] < maxdig[s]:
                nd = digits[t - 1] + 1
                digits[t - 1] = nd
                st = adv[s] if nd == cmp[s] else 1
                states[t] = st
                for u in range(t, n):
                    digits[u] = 0
                    st = adv[st] if cmp[st] == 0 else 1
                    states[u + 1] = st
                break
        else:
            return


@lru_cache(maxsize=None)
def _count_table(e: ExpansionOfOne, n: int) -> tuple[tuple[int, ...], ...]:
    """table[m][j] = number of admissible length-m continuations from state j."""
    aut = automaton(e)
    cmp, adv = aut.cmp, aut.adv
    width = len(cmp)
    table = [(0,) + (1,) * (width - 1)]
    for _ in range(n):
        prev = table[-1]
        row = [0] * width
        for j in range(1, width):
            total = cmp[j] * prev[1]
            if adv[j]:
                total += prev[adv[j]]
            row[j] = total
        table.append(tuple(row))
    return tuple(table)


def count(e: ExpansionOfOne, n: int) -> int:
    """|Sigma_beta^n| via dynamic programming on the match automaton."""
    _check_n(n)
    return _count_table(e, n)[n][1]


def word_at(e: ExpansionOfOne, n: int, index: int) -> Word:
    """The admissible word of length n at 0-based position index (lex order)."""
    _check_n(n)
    table = _count_table(e, n)
    if not 0 <= index < table[n][1]:
        raise ValueError(f"index {index} out of range for {table[n][1]} words")
    aut = automaton(e)
    cmp, adv = aut.cmp, aut.adv
    digits = []
    s = 1
    for m in range(n - 1, -1, -1):
        block = table[m][1]
        if cmp[s] and index < cmp[s] * block:
            digits.append(index // block)
            index %= block
            s = 1
        else:
            index -= cmp[s] * block
            digits.append(cmp[s])
            s = adv[s]
    return Word(tuple(digits))


def rank_of(w: Word, e: ExpansionOfOne) -> int:
    """0-based position of w in the lex enumeration of its length."""
    _require_admissible(w, e)
    table = _count_table(e, len(w))
    n = len(w)
    return sum(d * table[n - t - 1][1] for t, d in enumerate(w.digits))
