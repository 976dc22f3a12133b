"""Decreasing factorizations in the 0-Hecke monoid and Hecke biwords.

A decreasing factorization splits a 0-Hecke word into ``m`` blocks of
strictly decreasing letters, written leftmost block first.  Internally
``factors[0]`` is the *leftmost* block; the customary superscript ``i``
(counting blocks from the right, so block 1 is rightmost) is translated
by :meth:`DecreasingFactorization.factor`, which is the only indexing
API the rest of the package uses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import ValidationError
from .hecke import HeckeElement, HeckeWord, demazure_apply, eval_word, identity

__all__ = [
    "DecreasingFactorization",
    "HeckeBiword",
    "weight",
    "excess",
    "to_biword",
    "from_biword",
    "enumerate_factorizations",
]


@dataclass(frozen=True)
class DecreasingFactorization:
    """``m`` strictly decreasing (possibly empty) blocks of letters."""

    factors: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        for f in self.factors:
            if any(not 1 <= a <= self.n - 1 for a in f):
                raise ValidationError(f"factor {f} has letters outside [1, {self.n - 1}]")
            if any(f[k] <= f[k + 1] for k in range(len(f) - 1)):
                raise ValidationError(f"factor {f} is not strictly decreasing")

    @property
    def m(self) -> int:
        return len(self.factors)

    def factor(self, i: int) -> tuple[int, ...]:
        """The ``i``-th block counting from the right (block 1 is rightmost)."""
        if not 1 <= i <= self.m:
            raise ValidationError(f"factor index {i} outside [1, {self.m}]")
        return self.factors[self.m - i]

    def replace_factor(self, i: int, letters: tuple[int, ...]) -> "DecreasingFactorization":
        fs = list(self.factors)
        fs[self.m - i] = letters
        return DecreasingFactorization(tuple(fs), self.n)

    def flatten(self) -> HeckeWord:
        return HeckeWord(tuple(a for f in self.factors for a in f), self.n)

    def eval(self) -> HeckeElement:
        return eval_word(self.flatten())

    def num_letters(self) -> int:
        return sum(len(f) for f in self.factors)

    def __str__(self) -> str:
        def block(f: tuple[int, ...]) -> str:
            if any(a > 9 for a in f):
                return "(" + " ".join(str(a) for a in f) + ")"
            return "(" + "".join(str(a) for a in f) + ")"

        return "".join(block(f) for f in self.factors)


@dataclass(frozen=True)
class HeckeBiword:
    """Two-row array: block indices on top (weakly decreasing), letters on
    the bottom (strictly decreasing within a block)."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]
    n: int
    m: int = field(default=0)

    def __post_init__(self) -> None:
        if len(self.top) != len(self.bottom):
            raise ValidationError("biword rows differ in length")
        if any(self.top[k] < self.top[k + 1] for k in range(len(self.top) - 1)):
            raise ValidationError("biword top row is not weakly decreasing")
        for k in range(len(self.top) - 1):
            if self.top[k] == self.top[k + 1] and self.bottom[k] <= self.bottom[k + 1]:
                raise ValidationError(
                    "biword bottom row is not strictly decreasing within a block"
                )
        if any(not 1 <= a <= self.n - 1 for a in self.bottom):
            raise ValidationError(f"biword letters outside [1, {self.n - 1}]")
        if self.m == 0 and self.top:
            object.__setattr__(self, "m", self.top[0])
        if self.top and self.top[0] > self.m:
            raise ValidationError("biword block index exceeds block count")

    def __len__(self) -> int:
        return len(self.top)

    def eval(self) -> HeckeElement:
        return eval_word(HeckeWord(self.bottom, self.n))

    def __str__(self) -> str:
        return (
            " ".join(str(k) for k in self.top)
            + " / "
            + " ".join(str(a) for a in self.bottom)
        )


def weight(f: DecreasingFactorization) -> tuple[int, ...]:
    """Block lengths, rightmost block first: ``(len h^1, ..., len h^m)``."""
    return tuple(len(f.factor(i)) for i in range(1, f.m + 1))


def excess(f: DecreasingFactorization) -> int:
    """Number of letters beyond the length of the evaluated element."""
    return f.num_letters() - f.eval().length()


def to_biword(f: DecreasingFactorization) -> HeckeBiword:
    top: list[int] = []
    bottom: list[int] = []
    for pos, block in enumerate(f.factors):
        top.extend([f.m - pos] * len(block))
        bottom.extend(block)
    return HeckeBiword(tuple(top), tuple(bottom), f.n, f.m)


def from_biword(b: HeckeBiword, m: int | None = None) -> DecreasingFactorization:
    m = b.m if m is None else m
    if b.top and b.top[0] > m:
        raise ValidationError("block count smaller than largest block index")
    blocks: list[list[int]] = [[] for _ in range(m)]
    for k, a in zip(b.top, b.bottom):
        blocks[m - k].append(a)
    return DecreasingFactorization(tuple(tuple(bl) for bl in blocks), b.n)


def _decreasing_blocks(letters: tuple[int, ...], max_len: int) -> list[tuple[int, ...]]:
    """All strictly decreasing sequences over ``letters`` of length <= max_len,
    the empty block included."""
    out: list[tuple[int, ...]] = [()]
    desc = tuple(sorted(letters, reverse=True))

    def extend(prefix: tuple[int, ...], start: int) -> None:
        for k in range(start, len(desc)):
            blk = prefix + (desc[k],)
            out.append(blk)
            if len(blk) < max_len:
                extend(blk, k + 1)

    if max_len > 0:
        extend((), 0)
    return out


def enumerate_factorizations(
    w: HeckeElement, m: int, max_excess: int
) -> Iterator[DecreasingFactorization]:
    """All decreasing factorizations of ``w`` into ``m`` blocks with at most
    ``max_excess`` surplus letters, without duplicates.

    Blocks are chosen left to right with two prunes: the running Demazure
    prefix must still be able to reach ``w``, and the letter budget
    ``length(w) + max_excess`` must cover the letters still required.
    """
    if m < 1 or max_excess < 0:
        raise ValidationError("need m >= 1 and max_excess >= 0")
    n = w.n
    target_len = w.length()
    budget = target_len + max_excess
    letters = tuple(range(1, n))
    blocks = _decreasing_blocks(letters, n - 1)

    reach_memo: dict[HeckeElement, bool] = {}

    def can_reach(e: HeckeElement) -> bool:
        """Demazure-reachability of ``w`` from ``e``."""
        cached = reach_memo.get(e)
        if cached is not None:
            return cached
        if e == w:
            reach_memo[e] = True
            return True
        if e.length() >= target_len:
            reach_memo[e] = False
            return False
        ok = any(
            (e2 := demazure_apply(e, i)) != e and can_reach(e2) for i in range(1, n)
        )
        reach_memo[e] = ok
        return ok

    def rec(
        pos: int, e: HeckeElement, used: int
    ) -> Iterator[tuple[tuple[int, ...], ...]]:
        if pos == m:
            if e == w:
                yield ()
            return
        for blk in blocks:
            used2 = used + len(blk)
            if used2 > budget:
                continue
            e2 = e
            for a in blk:
                e2 = demazure_apply(e2, a)
            if used2 + target_len - e2.length() > budget:
                continue
            if not can_reach(e2):
                continue
            for rest in rec(pos + 1, e2, used2):
                yield (blk,) + rest

    for fs in rec(0, identity(n), 0):
        yield DecreasingFactorization(fs, n)
