"""Structural decomposition and fullness of admissible words.

Every admissible word splits uniquely into maximal blocks that each match a
prefix of eps(1, beta) and close with a strictly smaller digit, followed by
a tail that matches a prefix and ends with a digit at most equal to the next
one.  A word is full (its cylinder has maximal length beta^-n) exactly when
the tail also closes strictly; equivalently, when it does not end with any
prefix of eps(1, beta); equivalently, when |cylinder| equals beta^-n.  The
three criteria are implemented independently and cross-checked in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotAdmissible, VerificationError
from .expansion import ExpansionOfOne, solve_beta
from .words import Word, check_alphabet, scan_states, successor


class _Undecided:
    def __repr__(self) -> str:
        return "Undecided"

    def __bool__(self) -> bool:
        raise TypeError("Undecided is not a boolean; compare with UNDECIDED")


UNDECIDED = _Undecided()

DEFAULT_TOL = Fraction(1, 10**12)


def mismatch(w: Word, e: ExpansionOfOne) -> int | None:
    """First position where w drops strictly below eps(1, beta).

    None means w matches eps(1, beta) through its whole length (the drop, if
    any, lies beyond position n).
    """
    check_alphabet(w.digits, e)
    scan_states(w.digits, e)
    for k, d in enumerate(w.digits, start=1):
        c = e.digit(k)
        if d < c:
            return k
        if d > c:
            raise NotAdmissible(f"digit at position {k} exceeds the expansion digit")
    return None


@dataclass(frozen=True)
class Decomposition:
    """Blocks and tail of an admissible word.

    Each entry is (length, last_digit): a block is eps_1..eps_{k-1} followed
    by a digit strictly below eps_k; the tail allows equality at its last
    position.
    """

    blocks: tuple[tuple[int, int], ...]
    tail: tuple[int, int]

    def reconstruct(self, e: ExpansionOfOne) -> Word:
        digits: list[int] = []
        for length, last in self.blocks + (self.tail,):
            digits.extend(e.digit(i) for i in range(1, length))
            digits.append(last)
        return Word(tuple(digits))


def decompose(w: Word, e: ExpansionOfOne) -> Decomposition:
    """Split w into full blocks and a tail by repeated mismatch scanning."""
    check_alphabet(w.digits, e)
    scan_states(w.digits, e)
    segments: list[tuple[int, int]] = []
    j = 1
    for d in w.digits:
        if d < e.digit(j):
            segments.append((j, d))
            j = 1
        else:
            j += 1
    if j == 1:
        return Decomposition(tuple(segments[:-1]), segments[-1])
    return Decomposition(tuple(segments), (j - 1, w.digits[-1]))


def is_full(w: Word, e: ExpansionOfOne) -> bool:
    """Structural criterion: the tail closes with a strict drop.

    Equivalent to the block-match scan ending in state 1.
    """
    check_alphabet(w.digits, e)
    return scan_states(w.digits, e)[-1] == 1


def is_full_by_tail(w: Word, e: ExpansionOfOne) -> bool:
    """Suffix criterion: w is full iff it ends with no prefix of eps(1, beta).

    Candidate prefix lengths run to n for an infinite expansion and to
    min(M - 1, n) for a finite one.
    """
    check_alphabet(w.digits, e)
    scan_states(w.digits, e)
    n = len(w)
    s_max = n if not e.is_finite else min(e.finite_length - 1, n)
    prefix = e.digits_prefix(s_max)
    for s in range(1, s_max + 1):
        if w.digits[n - s:] == prefix[:s]:
            return False
    return True


def smallest_tail_length(w: Word, e: ExpansionOfOne) -> int | None:
    """Smallest s with w ending in eps_1..eps_s; None when w is full."""
    check_alphabet(w.digits, e)
    scan_states(w.digits, e)
    n = len(w)
    s_max = n if not e.is_finite else min(e.finite_length - 1, n)
    prefix = e.digits_prefix(s_max)
    for s in range(1, s_max + 1):
        if w.digits[n - s:] == prefix[:s]:
            return s
    return None


class CylinderCalc:
    """Certified fixed-point arithmetic for cylinder endpoints at one (e, n).

    Beta is bracketed tightly and 1/beta is scaled by 2^bits; power tables
    carry directed rounding so every word's endpoint sum [lo, hi] is a true
    enclosure.  Interval widths stay far below any practical tolerance.
    """

    def __init__(self, e: ExpansionOfOne, n: int, bits: int):
        self.e = e
        self.n = n
        self.bits = bits
        beta = solve_beta(e, Fraction(1, 2 ** (bits - 16)))
        one = 1 << bits
        self.x_lo = (beta.hi.denominator << bits) // beta.hi.numerator
        q, r = divmod(beta.lo.denominator << bits, beta.lo.numerator)
        self.x_hi = q if r == 0 else q + 1
        pow_lo, pow_hi = [one], [one]
        for _ in range(n):
            pow_lo.append((pow_lo[-1] * self.x_lo) >> bits)
            pow_hi.append(-((-pow_hi[-1] * self.x_hi) >> bits))
        self.pow_lo, self.pow_hi = pow_lo, pow_hi
        self.one = one

    def pi_bounds(self, digits) -> tuple[int, int]:
        """Scaled enclosure of sum_i w_i beta^-i."""
        lo = hi = 0
        pow_lo, pow_hi = self.pow_lo, self.pow_hi
        for i, d in enumerate(digits, start=1):
            if d:
                lo += d * pow_lo[i]
                hi += d * pow_hi[i]
        return lo, hi

    def compare_length(self, left: tuple[int, int], right: tuple[int, int], tol: Fraction):
        """Compare the cylinder length (right - left) against beta^-n."""
        length_lo = right[0] - left[1]
        length_hi = right[1] - left[0]
        diff_lo = length_lo - self.pow_hi[self.n]
        diff_hi = length_hi - self.pow_lo[self.n]
        if diff_hi < 0:
            return False
        if diff_lo > 0:
            raise VerificationError("cylinder longer than beta^-n; inconsistent input")
        if max(-diff_lo, diff_hi) <= tol * self.one:
            return True
        return UNDECIDED

    def as_fraction(self, scaled: int) -> Fraction:
        return Fraction(scaled, self.one)


def _bits_for(e: ExpansionOfOne, n: int, tol: Fraction) -> int:
    tol_bits = max(0, tol.denominator.bit_length() - tol.numerator.bit_length())
    return max(320, tol_bits + n * (e.alphabet_max + 1).bit_length() + 64)


@lru_cache(maxsize=64)
def _calc(e: ExpansionOfOne, n: int, bits: int) -> CylinderCalc:
    return CylinderCalc(e, n, bits)


def cylinder_calc(e: ExpansionOfOne, n: int, tol: Fraction | float | str = DEFAULT_TOL) -> CylinderCalc:
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return _calc(e, n, _bits_for(e, n, tol))


@dataclass(frozen=True)
class CylinderInterval:
    """The half-open interval [left, right) of reals whose expansion starts
    with a given word; endpoints are certified rational enclosures."""

    left: tuple[Fraction, Fraction]
    right: tuple[Fraction, Fraction]

    def length_bounds(self) -> tuple[Fraction, Fraction]:
        return (max(Fraction(0), self.right[0] - self.left[1]), self.right[1] - self.left[0])


def cylinder(w: Word, e: ExpansionOfOne, tol: Fraction | float | str = DEFAULT_TOL) -> CylinderInterval:
    """Certified enclosures for the cylinder endpoints of w.

    The left endpoint is sum w_i beta^-i; the right endpoint is the left
    endpoint of the successor, or 1 for the maximal word.
    """
    calc = cylinder_calc(e, len(w), tol)
    left = calc.pi_bounds(w.digits)
    nxt = successor(w, e)
    right = calc.pi_bounds(nxt.digits) if nxt is not None else (calc.one, calc.one)
    return CylinderInterval(
        (calc.as_fraction(left[0]), calc.as_fraction(left[1])),
        (calc.as_fraction(right[0]), calc.as_fraction(right[1])),
    )


def is_full_by_length(w: Word, e: ExpansionOfOne, tol: Fraction | float | str = DEFAULT_TOL):
    """Length criterion: |cylinder(w)| = beta^-n within tol, certified.

    Returns True, False, or UNDECIDED when the enclosures overlap too
    loosely for the requested tolerance.
    """
    tol = Fraction(tol)
    calc = cylinder_calc(e, len(w), tol)
    left = calc.pi_bounds(w.digits)
    nxt = successor(w, e)
    right = calc.pi_bounds(nxt.digits) if nxt is not None else (calc.one, calc.one)
    return calc.compare_length(left, right, tol)
