"""Run lengths of full and non-full words: formulas against enumeration."""

import pytest

from beta_words import (
    ExpansionOfOne,
    IntegerBeta,
    RunRecord,
    Word,
    classify_last_run,
    count,
    full_run_case,
    full_run_lengths_formula,
    is_full,
    iter_words,
    max_full_run_length,
    max_nonfull_run_length,
    maximal_runs,
    min_full_run_length,
    min_nonfull_run_length,
    nonfull_run_case,
    nonfull_run_lengths_formula,
    run_sets_enumerated,
    run_sets_formula,
    second_nonzero_position,
    tail_run_prediction,
    tau,
    tau_table,
)

GOLDEN = ExpansionOfOne.parse("1,1")
PEARL = ExpansionOfOne.parse("3,0,2,0,0,0,0,1")
SPARSE = ExpansionOfOne.parse("1,0,1,0,0,0,1")
MEMBERS = ["1,1", "1,1,1", "2,1,1", "1,0,1,0,0,0,1", "3,0,2,0,0,0,0,1",
           "3,0,0,2;0,0,0,2", "1,0,0,0,0,1;0,0,0,0,0,1"]


def runs_by_hand(e, n):
    """Group the lex enumeration into maximal constant-fullness runs."""
    runs = []
    for idx, w in enumerate(iter_words(e, n)):
        kind = "full" if is_full(w, e) else "nonfull"
        if runs and runs[-1][0] == kind:
            runs[-1][2] += 1
            runs[-1][4] = w
        else:
            runs.append([kind, idx, 1, w, w])
    return [RunRecord(k, i, c, a, b) for k, i, c, a, b in runs]


def test_tau_golden():
    assert tau_table(GOLDEN, 8)[1:] == [1, 1, 2, 2, 3, 3, 4, 4]


def test_tau_sparse():
    # nonzero positions 1, 3, 7 pin tau to 1 there
    assert tau_table(SPARSE, 8)[1:] == [1, 2, 1, 2, 3, 2, 1, 2]


def test_tau_pearl():
    assert tau(PEARL, 7) == 3
    assert [tau(PEARL, s) for s in (1, 3, 8)] == [1, 1, 1]


def test_tau_counts_greedy_steps():
    # tau(s) = number of greedy subtractions of nonzero positions
    for e in (GOLDEN, PEARL, SPARSE):
        for s in range(1, 20):
            t = tau(e, s)
            assert t >= 1
            if s > 1:
                assert t <= s


def test_second_nonzero_position():
    assert second_nonzero_position(GOLDEN) == 2
    assert second_nonzero_position(SPARSE) == 3
    assert second_nonzero_position(ExpansionOfOne.parse("1,0,0,0,0,1;0,0,0,0,0,1")) == 6


def test_golden_n3_records():
    assert maximal_runs(GOLDEN, 3) == [
        RunRecord("full", 0, 1, Word((0, 0, 0)), Word((0, 0, 0))),
        RunRecord("nonfull", 1, 1, Word((0, 0, 1)), Word((0, 0, 1))),
        RunRecord("full", 2, 2, Word((0, 1, 0)), Word((1, 0, 0))),
        RunRecord("nonfull", 4, 1, Word((1, 0, 1)), Word((1, 0, 1))),
    ]


@pytest.mark.parametrize("text", MEMBERS)
@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8])
def test_records_match_hand_grouping(text, n):
    e = ExpansionOfOne.parse(text)
    assert maximal_runs(e, n) == runs_by_hand(e, n)


@pytest.mark.parametrize("text", MEMBERS)
@pytest.mark.parametrize("n", list(range(1, 11)))
def test_formula_equals_enumeration(text, n):
    e = ExpansionOfOne.parse(text)
    formula = run_sets_formula(e, n)
    enum = run_sets_enumerated(e, n)
    assert formula.full == enum.full, (text, n)
    assert formula.nonfull == enum.nonfull, (text, n)
    assert formula.provenance == "formula"
    assert enum.provenance == "enumerated"


def test_golden_n3_sets():
    rs = run_sets_formula(GOLDEN, 3)
    assert rs.full == (1, 2)
    assert rs.nonfull == (1,)


def test_sparse_max_nonfull():
    assert max_nonfull_run_length(SPARSE, 8) == 3


@pytest.mark.parametrize("text", MEMBERS)
@pytest.mark.parametrize("n", [2, 5, 9])
def test_extremes_agree_with_sets(text, n):
    e = ExpansionOfOne.parse(text)
    enum = run_sets_enumerated(e, n)
    assert max_full_run_length(e, n) == max(enum.full)
    assert min_full_run_length(e, n) == min(enum.full)
    if enum.nonfull:
        assert max_nonfull_run_length(e, n) == max(enum.nonfull)
        assert min_nonfull_run_length(e, n) == min(enum.nonfull)


def test_min_nonfull_run_length_cases():
    # M - 1 when 1 < beta < 2 finite with M = n2 = n; n below n2; else 1
    assert min_nonfull_run_length(GOLDEN, 2) == 1
    assert min_nonfull_run_length(ExpansionOfOne.parse("1,0,0,1"), 4) == 3
    assert min_nonfull_run_length(SPARSE, 2) == 2
    assert min_nonfull_run_length(PEARL, 5) == 1


def test_integer_beta_rejected():
    e = ExpansionOfOne.parse("3")
    for fn in (full_run_lengths_formula, nonfull_run_lengths_formula,
               run_sets_formula, classify_last_run):
        with pytest.raises(IntegerBeta):
            fn(e, 4)


def test_case_labels_cover_corpus():
    seen = set()
    for text in MEMBERS:
        e = ExpansionOfOne.parse(text)
        for n in range(1, 13):
            seen.add(nonfull_run_case(e, n))
    assert seen == {
        "eps1>=2 infinite",
        "eps1>=2 finite",
        "eps1=1 infinite n<n2",
        "eps1=1 infinite n>=n2",
        "eps1=1 finite n2=M n<M",
        "eps1=1 finite n2=M n=M",
        "eps1=1 finite n2=M n>M",
        "eps1=1 finite n2<M n<n2",
        "eps1=1 finite n2<M n2<=n<M",
        "eps1=1 finite n2<M n>=M",
    }


def test_full_case_labels():
    assert full_run_case(GOLDEN, 1) == "short-or-infinite"
    assert full_run_case(GOLDEN, 4) == "finite-multiple"
    assert full_run_case(GOLDEN, 5) == "finite-nonmultiple"
    assert full_run_case(ExpansionOfOne.parse("3,0,0,2;0,0,0,2"), 9) == "short-or-infinite"


@pytest.mark.parametrize("text", MEMBERS)
@pytest.mark.parametrize("n", list(range(1, 9)))
def test_classify_last_run_matches_enumeration(text, n):
    e = ExpansionOfOne.parse(text)
    rec = maximal_runs(e, n)[-1]
    got = classify_last_run(e, n)
    assert got.kind == rec.kind
    if got.length is not None:
        assert got.length == rec.length


def test_tail_run_prediction_counts_words_above_last_full():
    # a word ending with eps|_s sits tau(s) slots above the closest full word
    for n in (3, 5, 7):
        words = list(iter_words(SPARSE, n))
        flags = [is_full(w, SPARSE) for w in words]
        for idx, w in enumerate(words):
            if flags[idx]:
                continue
            back = next(k for k in range(1, idx + 1) if flags[idx - k])
            assert tail_run_prediction(w, SPARSE) == back


def test_run_count_parity():
    # runs alternate and the first word (all zeros) is always full
    for text in MEMBERS:
        e = ExpansionOfOne.parse(text)
        recs = maximal_runs(e, 6)
        assert recs[0].kind == "full"
        for a, b in zip(recs, recs[1:]):
            assert a.kind != b.kind
        assert sum(r.length for r in recs) == count(e, 6)
