"""Integer partitions as plain tuples of positive parts, weakly decreasing.

Parts past the length read as 0 (see :func:`part`).  Tuples compare
lexicographically, which gives deterministic map ordering.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from functools import cache
from itertools import accumulate, pairwise, zip_longest

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in pairwise(parts)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return tuple(p for p in parts if p > 0)


def parse_partition(text: str) -> Partition:
    """CLI literal: '3,1,1'; '' or '0' is the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    return make_partition(int(s) for s in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def part(lam: Partition, i: int) -> int:
    """lambda_i with 1-based i; 0 beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def size(lam: Partition) -> int:
    return sum(lam)


def nstat(lam: Partition) -> int:
    return sum(i * p for i, p in enumerate(lam))


def stats(lam: Partition) -> tuple[int, int, int]:
    """(|lambda|, length, n(lambda))."""
    return sum(lam), len(lam), nstat(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """mu subset lam as diagrams."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """mu <= lam in dominance order; both must have the same size."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance compares equal sizes, got {mu} and {lam}")
    return all(a <= b for a, b in zip_longest(accumulate(mu), accumulate(lam), fillvalue=sum(lam)))


def is_horizontal_strip(lam: Partition, mu: Partition, r: int) -> bool:
    if not contains(lam, mu) or sum(lam) - sum(mu) != r:
        return False
    lc, mc = conjugate(lam), conjugate(mu)
    return all(a - b <= 1 for a, b in zip_longest(lc, mc, fillvalue=0))


def horizontal_strips(mu: Partition, r: int) -> list[Partition]:
    """All lam with lam/mu a horizontal r-strip (interlacing lam_1 >= mu_1 >= lam_2 >= ...)."""
    out: list[Partition] = []
    m = list(mu) + [0]

    def rec(i, left, acc):
        if i == len(m):
            if left == 0:
                out.append(make_partition(acc))
            return
        hi = left if i == 0 else min(left, m[i - 1] - m[i])
        for extra in range(hi, -1, -1):
            rec(i + 1, left - extra, acc + [m[i] + extra])

    rec(0, r, [])
    return sorted(out, reverse=True)


@cache
def partitions_of(n: int, maxpart: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n, in decreasing lexicographic order."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(maxsize: int, maxlen: int | None = None, maxpart: int | None = None) -> Iterator[Partition]:
    """Every partition with size <= maxsize, length <= maxlen, parts <= maxpart."""
    if maxsize < 0 or (maxlen is not None and maxlen < 0) or (maxpart is not None and maxpart < 0):
        raise ValueError("bounds must be nonnegative")
    for n in range(maxsize + 1):
        for lam in partitions_of(n):
            if maxlen is not None and len(lam) > maxlen:
                continue
            if maxpart is not None and lam and lam[0] > maxpart:
                continue
            yield lam


def multiplicities(lam: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def sub_partitions(lam: Partition) -> list[Partition]:
    """All mu contained in lam."""
    out: list[Partition] = []

    def rec(i, acc):
        if i == len(lam):
            out.append(make_partition(acc))
            return
        hi = lam[i] if i == 0 else min(lam[i], acc[-1])
        for v in range(hi + 1):
            rec(i + 1, acc + [v])

    rec(0, [])
    return sorted(set(out))
