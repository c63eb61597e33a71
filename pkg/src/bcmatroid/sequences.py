"""Shape predicates on integer sequences.

Each ``*_violation`` function returns the first offending index, or ``None``
when the predicate holds; the ``is_*`` wrappers turn that into a boolean.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import EmptySequence, NotStartingAtOne


def _nonempty(a: Sequence[int]) -> list[int]:
    a = list(a)
    if not a:
        raise EmptySequence("predicate needs a nonempty sequence")
    return a


def unimodal_violation(a):
    a = _nonempty(a)
    i = 1
    while i < len(a) and a[i - 1] <= a[i]:
        i += 1
    while i < len(a) and a[i - 1] >= a[i]:
        i += 1
    return None if i == len(a) else i


def symmetric_violation(a):
    a = _nonempty(a)
    s = len(a) - 1
    for i in range(s // 2 + 1):
        if a[i] != a[s - i]:
            return i
    return None


def flawless_violation(a):
    a = _nonempty(a)
    s = len(a) - 1
    for i in range(s // 2 + 1):
        if a[i] > a[s - i]:
            return i
    return None


def strongly_flawless_violation(a):
    """First ``i`` breaking ``a_i <= a_j`` for some ``i <= j <= s - i``."""
    a = _nonempty(a)
    s = len(a) - 1
    half = s // 2
    for i in range(half + 1):
        if a[i] > a[s - i] or (i < half and a[i] > a[i + 1]):
            return i
    return None


def log_concave_violation(a):
    a = _nonempty(a)
    for j in range(1, len(a) - 1):
        if a[j] * a[j] < a[j - 1] * a[j + 1]:
            return j
    return None


def strongly_log_concave_violation(a):
    """Log-concavity of ``h_i / C(h_1 + i - 1, i)`` in exact arithmetic."""
    a = _nonempty(a)
    if len(a) == 1:
        return None
    if a[1] <= 0:
        raise ValueError("strong log-concavity needs h_1 > 0")
    scaled = [Fraction(x, comb(a[1] + i - 1, i)) for i, x in enumerate(a)]
    return log_concave_violation(scaled)


def is_unimodal(a) -> bool:
    return unimodal_violation(a) is None


def is_symmetric(a) -> bool:
    return symmetric_violation(a) is None


def is_flawless(a) -> bool:
    return flawless_violation(a) is None


def is_strongly_flawless(a) -> bool:
    return strongly_flawless_violation(a) is None


def is_log_concave(a) -> bool:
    return log_concave_violation(a) is None


def is_strongly_log_concave(a) -> bool:
    return strongly_log_concave_violation(a) is None


# -- Macaulay ---------------------------------------------------------------

def binomial_representation(a: int, i: int) -> list[tuple[int, int]]:
    """The ``i``-binomial (Macaulay) representation of ``a``.

    Returns ``[(k_i, i), (k_{i-1}, i-1), ..., (k_j, j)]`` with
    ``k_i > k_{i-1} > ... > k_j >= j >= 1`` and ``a = sum C(k, d)``.
    """
    if a < 0 or i < 1:
        raise ValueError("need a >= 0 and i >= 1")
    out = []
    d = i
    while a > 0 and d >= 1:
        k = d
        while comb(k + 1, d) <= a:
            k += 1
        out.append((k, d))
        a -= comb(k, d)
        d -= 1
    return out


def pseudo_power(a: int, i: int) -> int:
    """Macaulay's ``a^<i>``: raise every term ``C(k, d)`` to ``C(k+1, d+1)``."""
    return sum(comb(k + 1, d + 1) for k, d in binomial_representation(a, i))


def o_sequence_violation(a):
    """First index ``i+1`` with ``a_{i+1} > a_i^<i>``, or ``None``.

    Negative entries fail at their own index.
    """
    a = _nonempty(a)
    if a[0] != 1:
        raise NotStartingAtOne(f"O-sequences start with 1, got {a[0]}")
    for i, x in enumerate(a):
        if x < 0:
            return i
    for i in range(1, len(a) - 1):
        if a[i + 1] > pseudo_power(a[i], i):
            return i + 1
    return None


def is_o_sequence(a) -> bool:
    return o_sequence_violation(a) is None


PREDICATES = {
    "unimodal": unimodal_violation,
    "flawless": flawless_violation,
    "strongly-flawless": strongly_flawless_violation,
    "symmetric": symmetric_violation,
    "log-concave": log_concave_violation,
    "strongly-log-concave": strongly_log_concave_violation,
}
