"""Test-side oracles, implemented independently of the package under test."""

from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod


def partition_count_dp(n_max):
    """p(0..n_max) by the coin-counting DP over part sizes."""
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for part in range(1, n_max + 1):
        for total in range(part, n_max + 1):
            counts[total] += counts[total - part]
    return counts


def elementary_by_subsets(values, r):
    """e_r as the literal sum of r-fold products over index subsets."""
    values = list(values)
    if r == 0:
        return 1
    return sum(prod(chosen) for chosen in combinations(values, r))


@lru_cache(maxsize=None)
def stirling_triangular(n, k):
    """Stirling numbers of the second kind by the triangular recurrence."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return k * stirling_triangular(n - 1, k) + stirling_triangular(n - 1, k - 1)


def set_partitions(elements):
    """All set partitions of a list, as tuples of blocks."""
    if not elements:
        yield ()
        return
    head, rest = elements[0], elements[1:]
    for blocks in set_partitions(rest):
        yield ((head,),) + blocks
        for i in range(len(blocks)):
            yield blocks[:i] + ((head,) + blocks[i],) + blocks[i + 1:]


def count_set_partitions_of_type(n, parts):
    """Number of set partitions of {1..n} whose block sizes match *parts*."""
    wanted = tuple(sorted(parts, reverse=True))
    count = 0
    for blocks in set_partitions(list(range(n))):
        sizes = tuple(sorted((len(b) for b in blocks), reverse=True))
        if sizes == wanted:
            count += 1
    return count


def shifted_subpartition_sum(lam, s, r):
    """e_r of the truncated falling-factorial image, summed over shifted-down
    sub-partitions mu (m_i(mu) <= m_{i+s}(lam)) with factorial-ratio weights."""
    items = [(i, m) for i, m in lam.items() if i > s]

    def descend(idx, remaining):
        if remaining == 0:
            return 1
        if idx == len(items):
            return 0
        i, m = items[idx]
        weight = factorial(i) // factorial(i - s)
        total = 0
        for chosen in range(min(m, remaining) + 1):
            total += comb(m, chosen) * weight**chosen * descend(idx + 1, remaining - chosen)
        return total

    return descend(0, r)
