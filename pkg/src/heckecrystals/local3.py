"""A local crystal on all decreasing factorizations over the alphabet {1, 2}.

Every block is one of ``()``, ``(1)``, ``(2)``, ``(21)``.  Operators act
on two adjacent blocks, with two transition chains whose branch is
selected by the parity of the pair count of the strictly earlier blocks.

The pair count comes from a recursive pairing pass over blocks 1, 2, ...
(rightmost first).  A full ``(21)`` block pairs internally.  A single 2
acts only when the pair count so far is even, a single 1 only when it is
odd; the acting letter then consults the leftmost unpaired letter among
the earlier blocks and pairs with it when the letters and the parity of
the pair count of the blocks strictly between them line up: a 2 catches
a 1 over an even gap, a 2 catches a 2 over an odd gap, a 1 catches a 2
over an even gap, and a 1 catches a 1 over an odd gap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .factorization import DecreasingFactorization, weight
from .graphs import ColoredDigraph, build_component

__all__ = ["PairCounter", "pairing3", "f3", "e3", "phi3", "epsilon3",
           "crystal_graph_local3", "all_factorizations3"]

_EMPTY: tuple[int, ...] = ()
_ONE = (1,)
_TWO = (2,)
_BOTH = (2, 1)
_BLOCKS = (_EMPTY, _ONE, _TWO, _BOTH)

Letter = tuple[int, int]   # (block index, letter value)


@dataclass(frozen=True)
class PairCounter:
    """Prefix pair counts: ``prefix[k]`` counts the pairs among blocks
    ``1..k`` (so ``prefix[0] == 0``), plus the pairing itself."""

    prefix: tuple[int, ...]
    pairs: tuple[tuple[Letter, Letter], ...]
    unpaired: tuple[Letter, ...]

    def count(self, j: int, k: int) -> int:
        """Pairs among blocks ``j..k``; empty ranges count zero."""
        if j > k:
            return 0
        return self.prefix[k] - self.prefix[j - 1]


def _check_blocks(f: DecreasingFactorization) -> None:
    for k in range(1, f.m + 1):
        if f.factor(k) not in _BLOCKS:
            raise ValidationError(
                f"block {f.factor(k)} is not over the alphabet {{1, 2}}")


def pairing3(f: DecreasingFactorization) -> PairCounter:
    _check_blocks(f)
    m = f.m
    prefix = [0] * (m + 1)
    paired: set[Letter] = set()
    pairs: list[tuple[Letter, Letter]] = []

    def leftmost_unpaired(k: int) -> Letter | None:
        for j in range(k - 1, 0, -1):
            for b in f.factor(j):
                if (j, b) not in paired:
                    return (j, b)
        return None

    for k in range(1, m + 1):
        blk = f.factor(k)
        prefix[k] = prefix[k - 1]
        if blk == _BOTH:
            paired.update({(k, 2), (k, 1)})
            pairs.append(((k, 2), (k, 1)))
            prefix[k] += 1
            continue
        if blk == _EMPTY:
            continue
        a = blk[0]
        if prefix[k - 1] % 2 != (0 if a == 2 else 1):
            continue
        partner = leftmost_unpaired(k)
        if partner is None:
            continue
        j, b = partner
        gap = prefix[k - 1] - prefix[j]
        hit = (
            (a == 2 and b == 1 and gap % 2 == 0)
            or (a == 2 and b == 2 and gap % 2 == 1)
            or (a == 1 and b == 2 and gap % 2 == 0)
            or (a == 1 and b == 1 and gap % 2 == 1)
        )
        if hit:
            paired.update({(k, a), (j, b)})
            pairs.append(((k, a), (j, b)))
            prefix[k] += 1

    unpaired = tuple((j, b) for j in range(1, m + 1) for b in f.factor(j)
                     if (j, b) not in paired)
    return PairCounter(tuple(prefix), tuple(pairs), unpaired)


def _two_block_lower(upper: tuple[int, ...], lower: tuple[int, ...],
                     even: bool) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    if upper == _BOTH or lower == _EMPTY:
        return None
    if upper == lower:
        return None
    if upper == _ONE and lower == _BOTH:
        return _BOTH, _TWO
    if upper == _TWO and lower == _BOTH:
        return _BOTH, _ONE
    if upper == _EMPTY and lower in (_ONE, _TWO):
        return lower, _EMPTY
    if upper == _EMPTY and lower == _BOTH:
        return (_TWO, _ONE) if even else (_ONE, _TWO)
    if upper == _TWO and lower == _ONE:
        return (_BOTH, _EMPTY) if even else None
    if upper == _ONE and lower == _TWO:
        return None if even else (_BOTH, _EMPTY)
    raise AssertionError(f"unhandled blocks {upper} {lower}")


def _two_block_raise(upper: tuple[int, ...], lower: tuple[int, ...],
                     even: bool) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    if lower == _BOTH or upper == _EMPTY:
        return None
    if upper == lower:
        return None
    if upper == _BOTH and lower == _TWO:
        return _ONE, _BOTH
    if upper == _BOTH and lower == _ONE:
        return _TWO, _BOTH
    if lower == _EMPTY and upper in (_ONE, _TWO):
        return _EMPTY, upper
    if upper == _BOTH and lower == _EMPTY:
        return (_TWO, _ONE) if even else (_ONE, _TWO)
    if upper == _TWO and lower == _ONE:
        return (_EMPTY, _BOTH) if even else None
    if upper == _ONE and lower == _TWO:
        return None if even else (_EMPTY, _BOTH)
    raise AssertionError(f"unhandled blocks {upper} {lower}")


def f3(f: DecreasingFactorization, i: int) -> DecreasingFactorization | None:
    """Lowering operator on blocks ``i`` and ``i+1``."""
    if not 1 <= i < f.m:
        raise ValidationError(f"operator index {i} outside [1, {f.m - 1}]")
    even = pairing3(f).count(1, i - 1) % 2 == 0
    moved = _two_block_lower(f.factor(i + 1), f.factor(i), even)
    if moved is None:
        return None
    upper, lower = moved
    return f.replace_factor(i + 1, upper).replace_factor(i, lower)


def e3(f: DecreasingFactorization, i: int) -> DecreasingFactorization | None:
    """Raising operator, the partial inverse of :func:`f3`."""
    if not 1 <= i < f.m:
        raise ValidationError(f"operator index {i} outside [1, {f.m - 1}]")
    even = pairing3(f).count(1, i - 1) % 2 == 0
    moved = _two_block_raise(f.factor(i + 1), f.factor(i), even)
    if moved is None:
        return None
    upper, lower = moved
    return f.replace_factor(i + 1, upper).replace_factor(i, lower)


def phi3(f: DecreasingFactorization, i: int) -> int:
    k, cur = 0, f
    while (nxt := f3(cur, i)) is not None:
        cur = nxt
        k += 1
    return k


def epsilon3(f: DecreasingFactorization, i: int) -> int:
    k, cur = 0, f
    while (nxt := e3(cur, i)) is not None:
        cur = nxt
        k += 1
    return k


def crystal_graph_local3(seed: DecreasingFactorization) -> ColoredDigraph:
    _check_blocks(seed)
    return build_component([seed], tuple(range(1, seed.m)),
                           lower=f3, raise_=e3, weight=weight)


def all_factorizations3(m: int, max_letters: int) -> list[DecreasingFactorization]:
    """Every block sequence over the alphabet {1, 2} with ``m`` blocks
    and at most ``max_letters`` letters."""
    out: list[DecreasingFactorization] = []

    def rec(pos: int, acc: list[tuple[int, ...]], used: int) -> None:
        if pos == m:
            out.append(DecreasingFactorization(tuple(acc), 3))
            return
        for blk in _BLOCKS:
            if used + len(blk) <= max_letters:
                acc.append(blk)
                rec(pos + 1, acc, used + len(blk))
                acc.pop()

    rec(0, [], 0)
    return out
