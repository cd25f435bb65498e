"""Permutations of n letters in word form, with Bruhat-order comparison.

A permutation w is the tuple ``(w(0), ..., w(n-1))`` acting on 0-based
positions.  Simple reflections are addressed by the 1-based index used
throughout the rest of the library: ``simple(n, i)`` swaps i and i+1.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def simple(n: int, i: int) -> tuple[int, ...]:
    """The adjacent transposition of 1-based positions i and i+1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple reflection index {i} out of range for n={n}")
    return transposition(n, i, i + 1)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    """The transposition of 1-based positions i and j."""
    word = list(range(n))
    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
    return tuple(word)


def compose(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """(u v)(x) = u(v(x)): apply v first, then u."""
    if len(u) != len(v):
        raise ValueError("cannot compose permutations of different sizes")
    return tuple(u[x] for x in v)


def inverse(w: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x] = i
    return tuple(out)


def coxeter_length(w: Sequence[int]) -> int:
    """Number of inversions; 0 exactly for the identity."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def apply_to_tuple(w: Sequence[int], values: Sequence) -> tuple:
    """Move the entry at position k to position w(k)."""
    out = [None] * len(values)
    for k, x in enumerate(values):
        out[w[k]] = x
    return tuple(out)


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(n))


def descending_chain(n: int, i: int) -> tuple[int, ...]:
    """The product s_i s_{i+1} ... s_{n-1} of 1-based simple reflections,
    leftmost factor applied last.  For i = n this is the empty product.
    """
    w = identity(n)
    for k in range(i, n):
        w = compose(w, simple(n, k))
    return w


def _rank_table(w: Sequence[int]) -> list[list[int]]:
    # table[i][j] = #{a <= i : w(a) >= j} over 0-based i, j
    n = len(w)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[i][j] = (table[i - 1][j] if i else 0) + (1 if w[i] >= j else 0)
    return table


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat comparison u <= v by the rank-matrix criterion.

    u <= v holds iff, for every prefix of positions and every threshold,
    u places at most as many large values early as v does.
    """
    if len(u) != len(v):
        raise ValueError("cannot compare permutations of different sizes")
    tu = _rank_table(u)
    tv = _rank_table(v)
    for ru, rv in zip(tu, tv):
        for a, b in zip(ru, rv):
            if a > b:
                return False
    return True
