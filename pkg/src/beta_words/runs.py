"""Maximal runs of full and non-full words in the lex enumeration.

Consecutive admissible words group into alternating maximal runs of full and
non-full words.  The run-length sets admit closed forms: the greedy step
count tau (repeatedly subtract the largest nonzero digit position that
fits) gives the non-full run lengths, and the nonzero digit values give the
full run lengths.  This module computes both sides: closed-form sets that
dispatch on the shape of eps(1, beta), and exact enumerated sets from a
single streamed pass, so they can be checked against each other.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import IntegerBeta, TailMismatch, VerificationError
from .expansion import ExpansionOfOne, nonzero_sequence
from .structure import is_full
from .words import Word, automaton, check_alphabet, count, predecessor, scan_states, word_at

FULL = "full"
NONFULL = "nonfull"


def _reject_integer_beta(e: ExpansionOfOne) -> None:
    if e.is_finite and e.finite_length == 1:
        raise IntegerBeta("closed forms require a non-integer beta")


def tau(e: ExpansionOfOne, s: int) -> int:
    """Greedy step count: subtract the largest nonzero digit position <= the
    remainder until s is exhausted.  Position 1 is always nonzero, so the
    greedy walk terminates."""
    if s < 1:
        raise ValueError("tau is defined for s >= 1")
    positions = nonzero_sequence(e, s)
    steps = 0
    remaining = s
    while remaining:
        remaining -= positions[bisect_right(positions, remaining) - 1]
        steps += 1
    return steps


def tau_table(e: ExpansionOfOne, bound: int) -> list[int]:
    """tau(e, s) for s = 1..bound; index 0 is an unused sentinel."""
    positions = nonzero_sequence(e, bound)
    table = [0] * (bound + 1)
    for s in range(1, bound + 1):
        steps = 0
        remaining = s
        while remaining:
            remaining -= positions[bisect_right(positions, remaining) - 1]
            steps += 1
        table[s] = steps
    return table


def second_nonzero_position(e: ExpansionOfOne) -> int:
    """The second nonzero digit position of eps(1, beta); requires beta not
    an integer, in which case it always exists."""
    _reject_integer_beta(e)
    horizon = len(e.preperiod) + len(e.period) + 1
    for i in range(2, horizon + 1):
        if e.digit(i):
            return i
    raise VerificationError("no second nonzero digit found")


# --- closed-form run-length sets ---


def _full_case(e: ExpansionOfOne, n: int) -> tuple[str, tuple[int, ...]]:
    _reject_integer_beta(e)
    if n < 1:
        raise ValueError("word length n must be >= 1")
    values = {e.digit(i) for i in nonzero_sequence(e, n)}
    m = e.finite_length
    if not e.is_finite or m >= n:
        return "short-or-infinite", tuple(sorted(values))
    boundary = e.digit(1) + e.digit(m)
    if n % m == 0:
        return "finite-multiple", tuple(sorted(values | {boundary}))
    values = {e.digit(i) for i in nonzero_sequence(e, n) if i != m}
    return "finite-nonmultiple", tuple(sorted(values | {boundary}))


def full_run_lengths_formula(e: ExpansionOfOne, n: int) -> tuple[int, ...]:
    """Closed form for the set of full-run lengths at word length n."""
    return _full_case(e, n)[1]


def full_run_case(e: ExpansionOfOne, n: int) -> str:
    """Which closed-form branch applies: the expansion digits alone, or a
    merged boundary run when a finite expansion divides (or not) into n."""
    return _full_case(e, n)[0]


def max_full_run_length(e: ExpansionOfOne, n: int) -> int:
    _reject_integer_beta(e)
    m = e.finite_length
    if e.is_finite and m < n:
        return e.alphabet_max + e.digit(m)
    return e.alphabet_max


def min_full_run_length(e: ExpansionOfOne, n: int) -> int:
    _reject_integer_beta(e)
    m = e.finite_length
    if e.is_finite and m < n and n % m != 0:
        return min(e.digit(i) for i in nonzero_sequence(e, m) if i != m)
    return min(e.digit(i) for i in nonzero_sequence(e, n))


def _nonfull_case(e: ExpansionOfOne, n: int) -> tuple[str, tuple[int, ...]]:
    _reject_integer_beta(e)
    if n < 1:
        raise ValueError("word length n must be >= 1")
    m = e.finite_length
    if e.alphabet_max >= 2:
        if not e.is_finite:
            return "eps1>=2 infinite", _range_set(max(tau_table(e, n)[1:]))
        bound = min(m - 1, n)
        return "eps1>=2 finite", _range_set(max(tau_table(e, bound)[1:]))
    n2 = second_nonzero_position(e)
    if not e.is_finite:
        if n < n2:
            return "eps1=1 infinite n<n2", (n,)
        return "eps1=1 infinite n>=n2", _with_low_range(e, n, n2)
    if n2 == m:
        if n < m:
            return "eps1=1 finite n2=M n<M", (n,)
        if n == m:
            return "eps1=1 finite n2=M n=M", (m - 1,)
        low = _range_set(min(n - m, m - 1))
        return "eps1=1 finite n2=M n>M", tuple(sorted(set(low) | {m - 1}))
    if n < n2:
        return "eps1=1 finite n2<M n<n2", (n,)
    if n < m:
        return "eps1=1 finite n2<M n2<=n<M", _with_low_range(e, n, n2)
    return "eps1=1 finite n2<M n>=M", _range_set(max(tau_table(e, m - 1)[1:]))


def nonfull_run_lengths_formula(e: ExpansionOfOne, n: int) -> tuple[int, ...]:
    """Closed form for the set of non-full-run lengths at word length n.

    Dispatches on eps_1 >= 2 (beta > 2) versus eps_1 = 1 (1 < beta < 2), on
    the finite/infinite shape of the expansion, and on how n compares with
    the second nonzero position n2 and the finite length M.
    """
    return _nonfull_case(e, n)[1]


def nonfull_run_case(e: ExpansionOfOne, n: int) -> str:
    """Label of the closed-form branch that applies at (e, n); the ten
    labels spell out the dispatch conditions."""
    return _nonfull_case(e, n)[0]


def _range_set(top: int) -> tuple[int, ...]:
    return tuple(range(1, top + 1))


def _with_low_range(e: ExpansionOfOne, n: int, n2: int) -> tuple[int, ...]:
    taus = tau_table(e, n)
    values = set(range(1, min(n2 - 1, n - n2 + 1) + 1))
    values.update(taus[s] for s in range(n2 - 1, n + 1))
    return tuple(sorted(values))


def max_nonfull_run_length(e: ExpansionOfOne, n: int) -> int:
    _reject_integer_beta(e)
    bound = n if not e.is_finite else min(e.finite_length - 1, n)
    return max(tau_table(e, bound)[1:])


def min_nonfull_run_length(e: ExpansionOfOne, n: int) -> int:
    _reject_integer_beta(e)
    if e.alphabet_max >= 2:
        return 1
    n2 = second_nonzero_position(e)
    if n < n2:
        return n
    if e.is_finite and e.finite_length == n2 == n:
        return n2 - 1
    return 1


# --- enumerated runs ---


@dataclass(frozen=True)
class RunRecord:
    """One maximal run of consecutive equal-fullness words."""

    kind: str
    start_index: int
    length: int
    first_word: Word
    last_word: Word


@dataclass(frozen=True)
class RunSets:
    """Run-length sets with their provenance ('enumerated' or 'formula')."""

    full: tuple[int, ...]
    nonfull: tuple[int, ...]
    provenance: str


def run_sets_formula(e: ExpansionOfOne, n: int) -> RunSets:
    return RunSets(full_run_lengths_formula(e, n), nonfull_run_lengths_formula(e, n), "formula")


def run_sets_enumerated(e: ExpansionOfOne, n: int) -> RunSets:
    """Run-length sets from one streamed pass over the lex enumeration."""
    full, nonfull, _, _, _ = stitch_run_scans([scan_run_lengths(e, n)])
    return RunSets(tuple(sorted(full)), tuple(sorted(nonfull)), "enumerated")


def prefix_count(e: ExpansionOfOne, n: int) -> int:
    """Number of length-(n-1) prefixes, the shardable units of the run scan."""
    return count(e, n - 1) if n >= 2 else 1


def scan_run_lengths(e: ExpansionOfOne, n: int, prefix_start: int = 0, prefix_stop: int | None = None):
    """Stream the words with prefixes in [prefix_start, prefix_stop) and
    reduce their fullness pattern to run data.

    Words sharing a length-(n-1) prefix split as eps_j full words (digits
    below the match digit) followed by at most one non-full word (the match
    digit), where j is the prefix's automaton state; the pass walks prefixes
    with the successor step and never materializes individual words.

    Returns (full_set, nonfull_set, first_run, last_run, run_count, total)
    where the sets hold interior closed runs only and first_run/last_run are
    (is_full, length) pairs open to merging across shard boundaries.
    """
    if n < 1:
        raise ValueError("word length n must be >= 1")
    if prefix_stop is None:
        prefix_stop = prefix_count(e, n)
    remaining = prefix_stop - prefix_start
    if remaining <= 0:
        return set(), set(), (True, 0), (True, 0), 1, 0
    aut = automaton(e)
    cmp, adv, maxdig = aut.cmp, aut.adv, aut.maxdig
    full: set[int] = set()
    nonfull: set[int] = set()
    first_run: tuple[bool, int] | None = None
    closed = 0
    cur_full = True
    cur_len = 0
    total = 0
    if n == 1:
        prefix: list[int] = []
        states = [1]
    elif prefix_start == 0:
        prefix = [0] * (n - 1)
        states = [1] * n
    else:
        prefix = list(word_at(e, n - 1, prefix_start).digits)
        states = scan_states(prefix, e)
    last = n - 1
    while remaining > 0:
        remaining -= 1
        s = states[last]
        c = cmp[s]
        a = adv[s]
        if c:
            total += c
            if cur_full:
                cur_len += c
            else:
                if first_run is None:
                    first_run = (False, cur_len)
                else:
                    nonfull.add(cur_len)
                closed += 1
                cur_full = True
                cur_len = c
        if a:
            total += 1
            if cur_full:
                if cur_len:
                    if first_run is None:
                        first_run = (True, cur_len)
                    else:
                        full.add(cur_len)
                    closed += 1
                cur_full = False
                cur_len = 1
            else:
                cur_len += 1
        if remaining == 0:
            break
        for t in range(last, 0, -1):
            st = states[t - 1]
            d = prefix[t - 1]
            if d < maxdig[st]:
                nd = d + 1
                prefix[t - 1] = nd
                s2 = adv[st] if nd == cmp[st] else 1
                states[t] = s2
                for u in range(t, last):
                    prefix[u] = 0
                    s2 = adv[s2] if cmp[s2] == 0 else 1
                    states[u + 1] = s2
                break
        else:
            raise VerificationError("prefix range exceeds the enumeration")
    last_run = (cur_full, cur_len)
    if first_run is None:
        first_run = last_run
    return full, nonfull, first_run, last_run, closed + 1, total


def stitch_run_scans(chunks):
    """Merge ordered scan_run_lengths outputs; boundary runs of equal kind
    coalesce.  Returns (full_set, nonfull_set, run_count, total, last_run)
    with last_run the (is_full, length) pair of the final run, or None when
    there were no words at all."""
    full: set[int] = set()
    nonfull: set[int] = set()
    runs = 0
    total = 0
    carry: tuple[bool, int] | None = None
    for chunk in chunks:
        c_full, c_nonfull, first, last, nruns, c_total = chunk
        total += c_total
        if c_total == 0:
            continue
        if carry is not None:
            if carry[0] == first[0]:
                first = (first[0], carry[1] + first[1])
                if nruns == 1:
                    carry = first
                    continue
            else:
                (full if carry[0] else nonfull).add(carry[1])
                runs += 1
        if nruns == 1:
            carry = first
            continue
        (full if first[0] else nonfull).add(first[1])
        runs += 1
        full |= c_full
        nonfull |= c_nonfull
        runs += nruns - 2
        carry = last
    if carry is not None:
        (full if carry[0] else nonfull).add(carry[1])
        runs += 1
    return full, nonfull, runs, total, carry


def maximal_runs(e: ExpansionOfOne, n: int) -> list[RunRecord]:
    """All maximal runs in lex order, with boundary words and start indices."""
    if n < 1:
        raise ValueError("word length n must be >= 1")
    aut = automaton(e)
    cmp, adv, maxdig = aut.cmp, aut.adv, aut.maxdig
    records: list[RunRecord] = []
    cur_full = True
    cur_len = 0
    cur_start = 0
    cur_first: tuple[int, ...] = (0,) * n
    last_word: tuple[int, ...] = cur_first
    index = 0
    prefix = [0] * (n - 1)
    states = [1] * n
    last = n - 1
    while True:
        s = states[last]
        c = cmp[s]
        a = adv[s]
        base = tuple(prefix)
        if c:
            if cur_full:
                cur_len += c
            else:
                records.append(RunRecord(NONFULL, cur_start, cur_len, Word(cur_first), Word(last_word)))
                cur_full, cur_len, cur_start, cur_first = True, c, index, base + (0,)
            last_word = base + (c - 1,)
            index += c
        if a:
            if cur_full:
                if cur_len:
                    records.append(RunRecord(FULL, cur_start, cur_len, Word(cur_first), Word(last_word)))
                cur_full, cur_len, cur_start, cur_first = False, 1, index, base + (c,)
            else:
                cur_len += 1
            last_word = base + (c,)
            index += 1
        advanced = False
        for t in range(last, 0, -1):
            st = states[t - 1]
            d = prefix[t - 1]
            if d < maxdig[st]:
                nd = d + 1
                prefix[t - 1] = nd
                s2 = adv[st] if nd == cmp[st] else 1
                states[t] = s2
                for u in range(t, last):
                    prefix[u] = 0
                    s2 = adv[s2] if cmp[s2] == 0 else 1
                    states[u + 1] = s2
                advanced = True
                break
        if not advanced:
            break
    records.append(RunRecord(FULL if cur_full else NONFULL, cur_start, cur_len, Word(cur_first), Word(last_word)))
    return records


# --- predictions tied to single words ---


def matched_tail_lengths(w: Word, e: ExpansionOfOne) -> list[int]:
    """All s for which w ends with eps_1..eps_s, in increasing order.

    For finite expansions s stops at M - 1: an admissible word never ends
    with the whole expansion of 1."""
    check_alphabet(w.digits, e)
    scan_states(w.digits, e)
    n = len(w)
    s_max = n if not e.is_finite else min(e.finite_length - 1, n)
    prefix = e.digits_prefix(s_max)
    return [s for s in range(1, s_max + 1) if w.digits[n - s:] == prefix[:s]]


def tail_run_prediction(w: Word, e: ExpansionOfOne, s: int | None = None) -> int:
    """Predict and verify the non-full run ending at w.

    For w ending with eps_1..eps_s, the tau(s) consecutive words counting
    down from w (inclusive) are non-full and the next one below is full.
    Returns tau(s) after walking the predecessors to confirm; raises
    TailMismatch when w does not end with the claimed prefix.
    """
    matches = matched_tail_lengths(w, e)
    if s is None:
        if not matches:
            raise TailMismatch("word does not end with a prefix of the expansion of 1")
        s = matches[0]
    elif s not in matches:
        raise TailMismatch(f"word does not end with the first {s} expansion digits")
    if len({tau(e, m) for m in matches}) != 1:
        raise VerificationError("tail lengths disagree on the predicted run length")
    steps = tau(e, s)
    current: Word | None = w
    for _ in range(steps):
        if current is None or is_full(current, e):
            raise VerificationError("predicted non-full stretch contains a full word")
        current = predecessor(current, e)
    if current is None or not is_full(current, e):
        raise VerificationError("word below the predicted stretch is not full")
    return steps


@dataclass(frozen=True)
class LastRunClassification:
    """Shape of the run containing the maximal word eps*(1, beta)|_n."""

    kind: str
    length: int | None


def classify_last_run(e: ExpansionOfOne, n: int) -> LastRunClassification:
    """The maximal word's run is full of length eps_M exactly when the
    expansion is finite with M dividing n; otherwise it is non-full."""
    _reject_integer_beta(e)
    if n < 1:
        raise ValueError("word length n must be >= 1")
    m = e.finite_length
    if e.is_finite and n % m == 0:
        return LastRunClassification(FULL, e.digit(m))
    return LastRunClassification(NONFULL, None)
