"""Cross-verification harness: every theorem-backed identity as an executable check.

Each check recomputes a quantity along two independent routes (closed form
versus exhaustive enumeration, or one fullness criterion versus another) and
reports mismatches as human-readable failure strings.  The word-level sweep
streams the lex enumeration grouped by length-(n-1) prefixes and carries,
per prefix, the block-match state (structural criterion), a KMP match state
against the digits of eps(1, beta) (tail criterion: a word is non-full
exactly when its longest suffix that is a prefix of eps(1, beta) is
nonempty), and a certified fixed-point enclosure of the word's cylinder
left endpoint (length criterion).  Within one prefix family, consecutive
cylinders differ by exactly beta^-n, so only the last word of each family
needs a computed length; that keeps the sweep linear with tiny constants.

Sweeps shard on prefix-rank ranges for multiprocess verification; stitching
merges boundary runs and re-anchors the tail-run position counters, so the
merged result is identical to a single-shard pass.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAdmissible, TailMismatch, VerificationError
from .expansion import ExpansionOfOne, max_zero_run, nonzero_sequence
from .runs import (
    FULL,
    classify_last_run,
    full_run_lengths_formula,
    max_full_run_length,
    max_nonfull_run_length,
    min_full_run_length,
    min_nonfull_run_length,
    nonfull_run_lengths_formula,
    prefix_count,
    scan_run_lengths,
    second_nonzero_position,
    stitch_run_scans,
    tail_run_prediction,
    tau,
    tau_table,
)
from .structure import DEFAULT_TOL, cylinder_calc, decompose, is_full
from .words import Word, automaton, count, iter_words, max_word, scan_states, word_at

MAX_FAILURES = 24


def _record(failures: list[str], message: str) -> None:
    if len(failures) < MAX_FAILURES:
        failures.append(message)


def _tail_cap(e: ExpansionOfOne, n: int) -> int:
    return n if not e.is_finite else min(e.finite_length - 1, n)


# --- KMP matcher for "ends with a prefix of eps(1, beta)" ---


def _kmp_failure(pattern: tuple[int, ...]) -> list[int]:
    fail = [0] * (len(pattern) + 1)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = fail[k]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i + 1] = k
    return fail


def _kmp_transitions(pattern: tuple[int, ...], alphabet: int):
    """(fail, trans): trans[k][d] is the longest suffix-prefix match after
    appending digit d in match state k."""
    fail = _kmp_failure(pattern)
    size = len(pattern)
    trans = []
    for k in range(size + 1):
        row = []
        for d in range(alphabet + 1):
            j = fail[k] if k == size else k
            while j and pattern[j] != d:
                j = fail[j]
            row.append(j + 1 if j < size and pattern[j] == d else 0)
        trans.append(row)
    return fail, trans


def _kmp_chains(fail: list[int]) -> list[tuple[int, ...]]:
    """chains[k] = all match lengths ending here: k and its proper borders."""
    chains: list[tuple[int, ...]] = [()]
    for k in range(1, len(fail)):
        chains.append((k,) + chains[fail[k]])
    return chains


def _empty_sweep_chunk() -> dict:
    return {
        "failures": [],
        "words": 0,
        "undecided": 0,
        "sum_lo": 0,
        "sum_hi": 0,
        "deferred": [],
        "seen_full": False,
        "trailing_nonfull": 0,
    }


def sweep_shard(e: ExpansionOfOne, n: int, tol, prefix_start: int, prefix_stop: int) -> dict:
    """Check the three fullness criteria and the tail-run prediction on all
    words whose length-(n-1) prefixes have rank in [prefix_start, prefix_stop).

    Every non-last word of a prefix family has cylinder length exactly
    beta^-n by cancellation, so only family boundaries need certified
    arithmetic.  Tail-run positions of words seen before the shard's first
    full word are deferred to the stitcher, which knows the preceding
    shard's trailing run.
    """
    tol = Fraction(tol)
    chunk = _empty_sweep_chunk()
    remaining = prefix_stop - prefix_start
    if remaining <= 0:
        return chunk
    failures = chunk["failures"]
    case = e.text()
    aut = automaton(e)
    cmp_, adv_, maxdig = aut.cmp, aut.adv, aut.maxdig
    s_cap = _tail_cap(e, n)
    pattern = e.digits_prefix(s_cap)
    fail_tbl, trans = _kmp_transitions(pattern, e.alphabet_max)
    chains = _kmp_chains(fail_tbl)
    kmp_nonzero = [[d for d, k in enumerate(row) if k] for row in trans]
    taus = tau_table(e, s_cap)
    calc = cylinder_calc(e, n, tol)
    pow_lo, pow_hi = calc.pow_lo, calc.pow_hi
    one = calc.one
    xn_lo, xn_hi = pow_lo[n], pow_hi[n]
    slack = (tol.numerator * one) // tol.denominator
    pcount = prefix_count(e, n)
    words = 0
    undecided = 0
    sum_lo = sum_hi = 0
    deferred = chunk["deferred"]
    seen_full = False
    nonfull_pos = 0
    if n == 1:
        prefix: list[int] = []
        states = [1]
        kstates = [0]
        pl = [0]
        ph = [0]
    else:
        if prefix_start == 0:
            prefix = [0] * (n - 1)
            states = [1] * n
        else:
            prefix = list(word_at(e, n - 1, prefix_start).digits)
            states = scan_states(prefix, e)
        kstates = [0] * n
        pl = [0] * n
        ph = [0] * n
        for i, d in enumerate(prefix):
            kstates[i + 1] = trans[kstates[i]][d]
            pl[i + 1] = pl[i] + d * pow_lo[i + 1]
            ph[i + 1] = ph[i] + d * pow_hi[i + 1]
    last = n - 1
    while remaining > 0:
        remaining -= 1
        s = states[last]
        c = cmp_[s]
        a = adv_[s]
        kp = kstates[last]
        krow = trans[kp]
        children = c + (1 if a else 0)
        words += children
        base = tuple(prefix)
        for d in kmp_nonzero[kp]:
            if d < c:
                _record(failures, f"{case} n={n}: word {Word(base + (d,)).text()} is structurally "
                                  "full but ends with a prefix of the expansion")
        if c:
            seen_full = True
            nonfull_pos = 0
        if a:
            nonfull_pos += 1
            k_adv = krow[c]
            if k_adv == 0:
                _record(failures, f"{case} n={n}: word {Word(base + (c,)).text()} is structurally "
                                  "non-full but ends with no prefix of the expansion")
            for sv in chains[k_adv]:
                if seen_full:
                    if nonfull_pos != taus[sv]:
                        _record(failures, f"{case} n={n}: word {Word(base + (c,)).text()} ends with "
                                          f"the first {sv} digits but sits {nonfull_pos} above the "
                                          f"last full word, expected tau({sv}) = {taus[sv]}")
                else:
                    deferred.append((sv, nonfull_pos))
            last_digit = c
            last_full = False
        else:
            last_digit = c - 1
            last_full = True
        cur_lo = pl[last] + last_digit * pow_lo[n]
        cur_hi = ph[last] + last_digit * pow_hi[n]
        if remaining:
            for t in range(last, 0, -1):
                st = states[t - 1]
                d = prefix[t - 1]
                if d < maxdig[st]:
                    nd = d + 1
                    prefix[t - 1] = nd
                    states[t] = adv_[st] if nd == cmp_[st] else 1
                    kstates[t] = trans[kstates[t - 1]][nd]
                    pl[t] = pl[t - 1] + nd * pow_lo[t]
                    ph[t] = ph[t - 1] + nd * pow_hi[t]
                    s2 = states[t]
                    for u in range(t, last):
                        prefix[u] = 0
                        s2 = adv_[s2] if cmp_[s2] == 0 else 1
                        states[u + 1] = s2
                        kstates[u + 1] = trans[kstates[u]][0]
                        pl[u + 1] = pl[u]
                        ph[u + 1] = ph[u]
                    break
            else:
                raise VerificationError("prefix range exceeds the enumeration")
            next_lo, next_hi = pl[last], ph[last]
        elif prefix_stop == pcount:
            next_lo = next_hi = one
        else:
            next_lo, next_hi = calc.pi_bounds(word_at(e, n - 1, prefix_stop).digits)
        len_lo = next_lo - cur_hi
        len_hi = next_hi - cur_lo
        sum_lo += (children - 1) * pow_lo[n] + len_lo
        sum_hi += (children - 1) * pow_hi[n] + len_hi
        if len_hi - xn_lo < 0:
            length_full = False
        elif len_lo - xn_hi > 0:
            _record(failures, f"{case} n={n}: cylinder of {Word(base + (last_digit,)).text()} "
                              "certified longer than beta^-n")
            length_full = None
        elif max(xn_hi - len_lo, len_hi - xn_lo) <= slack:
            length_full = True
        else:
            undecided += 1
            length_full = None
        if length_full is not None and length_full != last_full:
            _record(failures, f"{case} n={n}: word {Word(base + (last_digit,)).text()} is "
                              f"{'full' if last_full else 'non-full'} structurally but the "
                              "cylinder-length criterion disagrees")
    chunk["words"] = words
    chunk["undecided"] = undecided
    chunk["sum_lo"] = sum_lo
    chunk["sum_hi"] = sum_hi
    chunk["seen_full"] = seen_full
    chunk["trailing_nonfull"] = nonfull_pos
    return chunk


@dataclass
class SweepResult:
    """Aggregated outcome of a full-word sweep at one (e, n)."""

    words: int
    undecided: int
    length_sum: tuple[Fraction, Fraction]
    failures: list[str]


def _shard_bounds(total: int, shards: int) -> list[tuple[int, int]]:
    shards = max(1, shards)
    return [(i * total // shards, (i + 1) * total // shards) for i in range(shards)]


def _sweep_worker(args):
    e, n, tol, start, stop = args
    return sweep_shard(e, n, tol, start, stop)


def _scan_worker(args):
    e, n, start, stop = args
    return scan_run_lengths(e, n, start, stop)


def sweep_fullness(e: ExpansionOfOne, n: int, tol=DEFAULT_TOL, shards: int = 1, executor=None) -> SweepResult:
    """Run the word sweep over the whole enumeration, optionally sharded.

    Adds the global checks that need all shards: the cylinder lengths must
    sum to 1 within n * tol, the visited-word tally must equal the counting
    recursion, and tail-run positions deferred at shard starts must match
    the greedy step counts once the preceding shard's trailing run is known.
    """
    tol = Fraction(tol)
    bounds = _shard_bounds(prefix_count(e, n), shards)
    if executor is not None and len(bounds) > 1:
        chunks = list(executor.map(_sweep_worker, [(e, n, tol, a, b) for a, b in bounds]))
    else:
        chunks = [sweep_shard(e, n, tol, a, b) for a, b in bounds]
    taus = tau_table(e, _tail_cap(e, n))
    case = e.text()
    failures: list[str] = []
    words = undecided = 0
    sum_lo = sum_hi = 0
    carry = 0
    for chunk in chunks:
        for message in chunk["failures"]:
            _record(failures, message)
        words += chunk["words"]
        undecided += chunk["undecided"]
        sum_lo += chunk["sum_lo"]
        sum_hi += chunk["sum_hi"]
        for sv, pos in chunk["deferred"]:
            if carry + pos != taus[sv]:
                _record(failures, f"{case} n={n}: word ending with the first {sv} digits sits "
                                  f"{carry + pos} above the last full word, expected tau({sv}) = {taus[sv]}")
        carry = chunk["trailing_nonfull"] if chunk["seen_full"] else carry + chunk["trailing_nonfull"]
    calc = cylinder_calc(e, n, tol)
    one = calc.one
    slack = n * ((tol.numerator * one) // tol.denominator)
    if sum_lo > sum_hi or sum_lo > one + slack or sum_hi < one - slack:
        _record(failures, f"{case} n={n}: cylinder lengths sum to "
                          f"[{sum_lo / one:.17g}, {sum_hi / one:.17g}], not 1 within {n}*tol")
    if words != count(e, n):
        _record(failures, f"{case} n={n}: sweep visited {words} words, count says {count(e, n)}")
    return SweepResult(words, undecided, (Fraction(sum_lo, one), Fraction(sum_hi, one)), failures)


# --- run-set checks: closed forms against enumeration ---


def run_sets_check(e: ExpansionOfOne, n: int, shards: int = 1, executor=None):
    """Enumerate run lengths (sharded) and compare every closed form.

    Returns (report_row, failures); the row carries both provenances and the
    match verdict.
    """
    case = e.text()
    bounds = _shard_bounds(prefix_count(e, n), shards)
    if executor is not None and len(bounds) > 1:
        chunks = list(executor.map(_scan_worker, [(e, n, a, b) for a, b in bounds]))
    else:
        chunks = [scan_run_lengths(e, n, a, b) for a, b in bounds]
    full, nonfull, _, total, last_run = stitch_run_scans(chunks)
    f_enum = sorted(full)
    n_enum = sorted(nonfull)
    f_formula = sorted(full_run_lengths_formula(e, n))
    n_formula = sorted(nonfull_run_lengths_formula(e, n))
    row = {
        "case_id": case,
        "n": n,
        "F_formula": f_formula,
        "F_enum": f_enum,
        "N_formula": n_formula,
        "N_enum": n_enum,
        "match": f_formula == f_enum and n_formula == n_enum,
    }
    failures: list[str] = []
    if not row["match"]:
        _record(failures, f"{case} n={n}: closed-form run sets F={f_formula} N={n_formula} "
                          f"differ from enumerated F={f_enum} N={n_enum}")
    if total != count(e, n):
        _record(failures, f"{case} n={n}: run lengths sum to {total}, count says {count(e, n)}")
    if max_full_run_length(e, n) != max(f_enum):
        _record(failures, f"{case} n={n}: max full-run formula {max_full_run_length(e, n)} "
                          f"!= enumerated {max(f_enum)}")
    if min_full_run_length(e, n) != min(f_enum):
        _record(failures, f"{case} n={n}: min full-run formula {min_full_run_length(e, n)} "
                          f"!= enumerated {min(f_enum)}")
    if n_enum:
        if max_nonfull_run_length(e, n) != max(n_enum):
            _record(failures, f"{case} n={n}: max non-full-run formula {max_nonfull_run_length(e, n)} "
                              f"!= enumerated {max(n_enum)}")
        if min_nonfull_run_length(e, n) != min(n_enum):
            _record(failures, f"{case} n={n}: min non-full-run formula {min_nonfull_run_length(e, n)} "
                              f"!= enumerated {min(n_enum)}")
        bound = _tail_cap(e, n)
        if max(n_enum) > bound:
            _record(failures, f"{case} n={n}: a non-full run of length {max(n_enum)} exceeds "
                              f"the guaranteed bound {bound}")
    expected = classify_last_run(e, n)
    last_kind_full = last_run is not None and last_run[0]
    if (expected.kind == FULL) != last_kind_full:
        _record(failures, f"{case} n={n}: run at the maximal word is "
                          f"{'full' if last_kind_full else 'non-full'}, classification says {expected.kind}")
    elif expected.length is not None and last_run[1] != expected.length:
        _record(failures, f"{case} n={n}: final full run has length {last_run[1]}, "
                          f"classification says {expected.length}")
    taus = tau_table(e, n)
    top = max(taus[1:])
    if set(taus[1:]) != set(range(1, top + 1)):
        _record(failures, f"{case} n={n}: greedy step counts over 1..{n} are {sorted(set(taus[1:]))}, "
                          f"not the full range 1..{top}")
    return row, failures


# --- theorem checks at their stated bounds (test-suite workload) ---


def check_tau_properties(e: ExpansionOfOne, bound: int, failures: list[str]) -> None:
    """Greedy step-count properties: 1 at nonzero positions, identity below
    the second nonzero position, never above s, and at most the longest zero
    run plus one."""
    case = e.text()
    taus = tau_table(e, bound)
    positions = set(nonzero_sequence(e, bound))
    n2 = second_nonzero_position(e)
    for s in range(1, bound + 1):
        if s in positions and taus[s] != 1:
            _record(failures, f"{case}: tau({s}) = {taus[s]} at a nonzero position, expected 1")
        if s <= n2 - 1 and taus[s] != s:
            _record(failures, f"{case}: tau({s}) = {taus[s]} below the second nonzero position, expected {s}")
        if taus[s] > s:
            _record(failures, f"{case}: tau({s}) = {taus[s]} exceeds s")
    r_bound = e.finite_length if e.is_finite else bound
    for s in range(1, min(bound, r_bound) + 1):
        if taus[s] > max_zero_run(e, s) + 1:
            _record(failures, f"{case}: tau({s}) = {taus[s]} exceeds the zero-run bound "
                              f"{max_zero_run(e, s)} + 1")


def check_truncations(e: ExpansionOfOne, k_max: int, failures: list[str]) -> None:
    """Prefixes of eps(1, beta) are admissible but never full (and stop being
    admissible at length M for a finite expansion); prefixes of eps*(1, beta)
    are full exactly at multiples of M."""
    case = e.text()
    m = e.finite_length
    for k in range(1, k_max + 1):
        digits = e.digits_prefix(k)
        if e.is_finite and k >= m:
            try:
                scan_states(digits, e)
                _record(failures, f"{case}: eps|_{k} should not be admissible")
            except NotAdmissible:
                pass
        elif is_full(Word(digits), e):
            _record(failures, f"{case}: the truncation eps|_{k} is full")
        star = max_word(e, k)
        expect_full = e.is_finite and k % m == 0
        if is_full(star, e) != expect_full:
            _record(failures, f"{case}: eps*|_{k} fullness is {not expect_full}, expected {expect_full}")


def _full_words_upto(e: ExpansionOfOne, cap: int) -> list[tuple[int, ...]]:
    fulls: list[tuple[int, ...]] = []
    for k in range(1, cap + 1):
        fulls.extend(w.digits for w in iter_words(e, k) if scan_states(w.digits, e)[-1] == 1)
    return fulls


def check_concat_closure(e: ExpansionOfOne, cap: int, failures: list[str]) -> None:
    """A full word followed by a full word is admissible and full.

    The block-match automaton restarts at state 1 after a full word, so the
    structural route makes this immediate; the pairs are therefore checked
    against the independent suffix criterion.
    """
    case = e.text()
    fulls = _full_words_upto(e, cap)
    s_top = 2 * cap if not e.is_finite else min(e.finite_length - 1, 2 * cap)
    prefix = e.digits_prefix(s_top)
    heads = [prefix[:s] for s in range(s_top + 1)]
    for u in fulls:
        for v in fulls:
            w = u + v
            top = min(s_top, len(w))
            for s in range(1, top + 1):
                if w[-s:] == heads[s]:
                    _record(failures, f"{case}: concatenation {Word(w).text()} of full words "
                                      f"ends with the first {s} digits of the expansion")
                    break
            if len(failures) >= MAX_FAILURES:
                return


def check_suffix_closure(e: ExpansionOfOne, cap: int, deep_cap: int, failures: list[str]) -> None:
    """Dropping the first digit of a full word leaves a full word.

    Checked per length-(n-1) prefix family: with j the block-match state of
    the whole prefix and js the state of the prefix minus its first digit,
    every family digit d < cmp[j] yields a full word, whose one-digit-shorter
    suffix is full exactly when d < cmp[js].  Chaining over n covers all
    suffixes; lengths up to deep_cap also get every suffix scanned directly.
    """
    case = e.text()
    aut = automaton(e)
    cmp_ = aut.cmp
    maxdig = aut.maxdig
    for n in range(2, cap + 1):
        for p in iter_words(e, n - 1):
            c = cmp_[scan_states(p.digits, e)[-1]]
            if c == 0:
                continue
            try:
                js = scan_states(p.digits[1:], e)[-1]
            except NotAdmissible:
                _record(failures, f"{case}: suffix of admissible prefix {p.text()} is not admissible")
                continue
            if c - 1 > maxdig[js]:
                _record(failures, f"{case}: suffix of full word {Word(p.digits + (c - 1,)).text()} "
                                  "is not admissible")
            elif c > cmp_[js]:
                _record(failures, f"{case}: suffix of full word {Word(p.digits + (cmp_[js],)).text()} "
                                  "is not full")
    for n in range(2, deep_cap + 1):
        for w in iter_words(e, n):
            if scan_states(w.digits, e)[-1] != 1:
                continue
            for k in range(1, n):
                if scan_states(w.digits[k:], e)[-1] != 1:
                    _record(failures, f"{case}: suffix at offset {k} of full {w.text()} is not full")


def check_decrement_closure(e: ExpansionOfOne, cap: int, failures: list[str]) -> None:
    """Lowering the nonzero last digit of an admissible word gives a full
    word; chained decrements cover every smaller final digit."""
    case = e.text()
    for n in range(1, cap + 1):
        for w in iter_words(e, n):
            d = w.digits[-1]
            if d and scan_states(w.digits[:-1] + (d - 1,), e)[-1] != 1:
                _record(failures, f"{case}: decrement of {w.text()} is not full")


def check_last_digit_bound(e: ExpansionOfOne, cap: int, failures: list[str]) -> None:
    """Full words end strictly below floor(beta)."""
    case = e.text()
    top = e.alphabet_max
    for n in range(1, cap + 1):
        for w in iter_words(e, n):
            if w.digits[-1] >= top and scan_states(w.digits, e)[-1] == 1:
                _record(failures, f"{case}: full word {w.text()} ends with digit {w.digits[-1]} "
                                  f">= floor(beta) = {top}")


def check_decompose(e: ExpansionOfOne, n_values, exhaustive_to: int, samples: int, failures: list[str]) -> None:
    """Reconstruction inverts decomposition; blocks are full; the block and
    tail lengths obey the finite-expansion caps."""
    case = e.text()
    m = e.finite_length
    for n in n_values:
        total = count(e, n)
        if n <= exhaustive_to or total <= samples:
            words = iter_words(e, n)
        else:
            step = max(1, total // samples)
            words = (word_at(e, n, i) for i in range(0, total, step))
        for w in words:
            dec = decompose(w, e)
            if dec.reconstruct(e) != w:
                _record(failures, f"{case} n={n}: decomposition of {w.text()} reconstructs "
                                  f"to {dec.reconstruct(e).text()}")
                continue
            pieces = dec.blocks + (dec.tail,)
            if sum(length for length, _ in pieces) != n:
                _record(failures, f"{case} n={n}: decomposition lengths of {w.text()} do not sum to n")
            for length, lastd in dec.blocks:
                if lastd >= e.digit(length):
                    _record(failures, f"{case} n={n}: block ({length},{lastd}) of {w.text()} "
                                      "does not end strictly below the expansion digit")
                elif scan_states(e.digits_prefix(length - 1) + (lastd,), e)[-1] != 1:
                    _record(failures, f"{case} n={n}: block ({length},{lastd}) of {w.text()} is not full")
            tail_len, tail_d = dec.tail
            if tail_d > e.digit(tail_len):
                _record(failures, f"{case} n={n}: tail of {w.text()} exceeds the expansion digit")
            if m is not None:
                if any(length > m for length, _ in pieces):
                    _record(failures, f"{case} n={n}: a decomposition piece of {w.text()} is longer than M")
                if tail_len == m and tail_d >= e.digit(m):
                    _record(failures, f"{case} n={n}: tail of {w.text()} matches all M digits")


def check_tail_walks(e: ExpansionOfOne, cap: int, failures: list[str]) -> None:
    """Walk from the canonical witnesses 0^(n-s) eps|_s down to the nearest
    full word and confirm the greedy step count; for small n do the same
    from every non-full word."""
    case = e.text()
    for n in range(1, cap + 1):
        for s in range(1, _tail_cap(e, n) + 1):
            w = Word((0,) * (n - s) + e.digits_prefix(s))
            try:
                steps = tail_run_prediction(w, e, s)
            except (TailMismatch, VerificationError) as exc:
                _record(failures, f"{case} n={n}: tail walk from {w.text()} failed: {exc}")
                continue
            if steps != tau(e, s):
                _record(failures, f"{case} n={n}: tail walk from {w.text()} returned {steps}, "
                                  f"expected tau({s}) = {tau(e, s)}")
    for n in range(1, min(cap, 6) + 1):
        for w in iter_words(e, n):
            if scan_states(w.digits, e)[-1] == 1:
                continue
            try:
                tail_run_prediction(w, e)
            except (TailMismatch, VerificationError) as exc:
                _record(failures, f"{case} n={n}: tail walk from non-full {w.text()} failed: {exc}")


def verify_theorems(e: ExpansionOfOne, max_n: int) -> list[str]:
    """Run every theorem check for one expansion at its stated bound,
    trimmed to max_n where the bound exceeds it."""
    failures: list[str] = []
    check_truncations(e, 24, failures)
    check_tau_properties(e, max(30, max_n), failures)
    check_concat_closure(e, min(6, max_n), failures)
    check_suffix_closure(e, min(12, max_n), min(9, max_n), failures)
    check_decrement_closure(e, min(10, max_n), failures)
    check_last_digit_bound(e, min(8, max_n), failures)
    check_decompose(e, range(1, max_n + 1), exhaustive_to=10, samples=300, failures=failures)
    check_tail_walks(e, min(10, max_n), failures)
    return failures[:MAX_FAILURES]


def verify_member(e: ExpansionOfOne, n_values, tol=DEFAULT_TOL, shards: int = 1, executor=None):
    """Formula-versus-enumeration rows plus criterion sweeps for one expansion.

    Returns (report_rows, failures): one row per n with the run-length sets
    from both provenances, and failure strings for anything that broke.
    """
    rows = []
    failures: list[str] = []
    for n in n_values:
        row, fails = run_sets_check(e, n, shards, executor)
        rows.append(row)
        failures.extend(fails)
        sweep = sweep_fullness(e, n, tol, shards, executor)
        failures.extend(sweep.failures)
        if sweep.undecided:
            _record(failures, f"{e.text()} n={n}: {sweep.undecided} words undecided by the "
                              f"length criterion at tol {tol}")
    return rows, failures[:MAX_FAILURES]


def verify_report(corpus, n_values, tol=DEFAULT_TOL, shards: int = 1):
    """Rows and failures for a whole corpus; shards > 1 uses a process pool.

    The rows depend only on (corpus, n_values), never on the shard count, so
    sharded and unsharded runs render byte-identical reports.
    """
    n_values = list(n_values)
    rows = []
    failures: list[str] = []
    if shards > 1:
        with ProcessPoolExecutor(max_workers=shards) as executor:
            for e in corpus:
                member_rows, member_failures = verify_member(e, n_values, tol, shards, executor)
                rows.extend(member_rows)
                failures.extend(member_failures)
    else:
        for e in corpus:
            member_rows, member_failures = verify_member(e, n_values, tol)
            rows.extend(member_rows)
            failures.extend(member_failures)
    return rows, failures


def render_report(rows) -> str:
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"
