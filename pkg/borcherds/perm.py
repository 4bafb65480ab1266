"""Permutations of strand positions, canonical reduced words and braid move plans.

Positions are 0-based and ``s_k`` swaps positions ``k`` and ``k + 1``. A word
``(k_1, ..., k_r)`` stands for the product ``s_{k_1} ... s_{k_r}``, applied to
a sequence right to left. A permutation is stored as the tuple ``perm`` with
``target[p] = source[perm[p]]``.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

__all__ = (
    'Word',
    'Move',
    'perm_of_word',
    'apply_word',
    'inversions',
    'length',
    'is_reduced',
    'canonical_word',
    'crossing_pairs',
    'apply_move',
    'moves_to_end',
    'moves_to_front',
    'permutations_between',
    'shuffle_splits',
)


Word = tuple[int, ...]


class Move(NamedTuple):
    kind: str  # 'commute' or 'braid'
    pos: int


def perm_of_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    cur = list(range(n))
    for k in reversed(word):
        cur[k], cur[k + 1] = cur[k + 1], cur[k]
    return tuple(cur)

def apply_word(word: Sequence[int], seq: Sequence) -> tuple:
    """The label ``s_{k_1} ... s_{k_r}(seq)``."""
    cur = list(seq)
    for k in reversed(word):
        cur[k], cur[k + 1] = cur[k + 1], cur[k]
    return tuple(cur)

def inversions(perm: Sequence[int]) -> int:
    return sum(1 for p, q in itertools.combinations(range(len(perm)), 2) if perm[p] > perm[q])

def length(word: Sequence[int], n: int) -> int:
    return inversions(perm_of_word(word, n))

def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(word, n) == len(word)

def canonical_word(perm: Sequence[int]) -> Word:
    """Staircase reduced word u_1 u_2 ... u_{n-1} with u_k = s_k s_{k-1} ... s_{m_k}.

    For the longest element this is s_1 (s_2 s_1) ... (s_{n-1} ... s_1)."""
    n = len(perm)
    cur = list(range(n))
    blocks = []
    for top in reversed(range(1, n)):
        token = perm[top]
        m = cur.index(token)
        blocks.append(tuple(range(top - 1, m - 1, -1)))
        cur.insert(top, cur.pop(m))
    return tuple(k for block in reversed(blocks) for k in block)

def crossing_pairs(perm: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Source positions (a, b), a < b, of strands that cross."""
    for p, q in itertools.combinations(range(len(perm)), 2):
        if perm[p] > perm[q]:
            yield perm[q], perm[p]


## Braid move plans

def apply_move(word: Sequence[int], move: Move) -> Word:
    word = list(word)
    pos = move.pos
    if move.kind == 'commute':
        a, b = word[pos], word[pos + 1]
        if abs(a - b) < 2:
            raise ValueError(f"cannot commute s_{a} and s_{b}")
        word[pos], word[pos + 1] = b, a
    elif move.kind == 'braid':
        a, b, c = word[pos:pos + 3]
        if a != c or abs(a - b) != 1:
            raise ValueError(f"no braid move at {pos} in {tuple(word)}")
        word[pos:pos + 3] = [b, a, b]
    else:
        raise ValueError(f"unknown move kind {move.kind!r}")
    return tuple(word)

def moves_to_end(word: Sequence[int], t: int) -> list[Move]:
    """Moves that turn a reduced word into one ending with ``s_t``.

    ``s_t`` must be a right descent of the word's permutation."""
    word = tuple(word)
    if not word:
        raise ValueError(f"s_{t} is not a right descent of the empty word")
    a = word[-1]
    if a == t:
        return []
    last = len(word) - 1
    if abs(a - t) > 1:
        moves = moves_to_end(word[:-1], t)
        return moves + [Move('commute', last - 1)]
    moves = moves_to_end(word[:-1], t)
    prefix = word[:-1]
    for move in moves:
        prefix = apply_move(prefix, move)
    inner = moves_to_end(prefix[:-1], a)
    return moves + inner + [Move('braid', last - 2)]

def moves_to_front(word: Sequence[int], t: int) -> list[Move]:
    """Mirror of :func:`moves_to_end` for a left descent ``s_t``."""
    size = len(word)
    mirrored = moves_to_end(tuple(reversed(word)), t)
    result = []
    for move in mirrored:
        if move.kind == 'commute':
            result.append(Move('commute', size - 2 - move.pos))
        else:
            result.append(Move('braid', size - 3 - move.pos))
    return result


## Enumeration

def permutations_between(source: Sequence, target: Sequence) -> Iterator[tuple[int, ...]]:
    """Every ``perm`` with ``target[p] = source[perm[p]]``."""
    n = len(source)
    if len(target) != n:
        return

    def extend(prefix: list[int], used: set[int]) -> Iterator[tuple[int, ...]]:
        p = len(prefix)
        if p == n:
            yield tuple(prefix)
            return
        for s in range(n):
            if s not in used and source[s] == target[p]:
                prefix.append(s)
                used.add(s)
                yield from extend(prefix, used)
                used.discard(s)
                prefix.pop()

    yield from extend([], set())

def shuffle_splits(seq: Sequence, weight: Sequence[int], size: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Position sets (S, complement) of ``seq`` where ``seq`` restricted to S has multiplicities ``weight``."""
    n = len(seq)
    k = sum(weight)
    for positions in itertools.combinations(range(n), k):
        counts = [0]*size
        for p in positions:
            counts[seq[p]] += 1
        if counts == list(weight):
            rest = tuple(p for p in range(n) if p not in positions)
            yield positions, rest
