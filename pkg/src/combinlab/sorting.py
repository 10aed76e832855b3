"""Comparison sorting and merging with closed-form worst-case counts.

* binary_insert      exactly ceil(log2 k) comparisons into k slots
* insertion_sort     exactly A(n) = n*ceil(log2 n) - 2**ceil(log2 n) + 1
* merge_runs         at most m + n - 1 comparisons
* merge_sort_grouped worst case B(n): repeatedly merge the two shortest runs
* merge_insertion_sort  at most F(n) = sum_{k=2..n} ceil(log2 3k/4)

The counting comparator deliberately spends the full ceil(log2 k) budget on
every binary insertion (fixed decision-tree shape), which is what makes the
A(n) and F(n) bookkeeping input-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmath import (
    ceil_log2,
    ceil_log2_factorial,
    ceil_log2_ratio,
    insertion_batch_bound,
)
from .oracles import CountingComparator, counting_comparator


@dataclass(frozen=True)
class SortBudget:
    """Exact worst-case comparison counts for sorting n keys."""

    n: int
    info_lower: int  # ceil(log2 n!)
    a_n: int  # binary insertion sort
    b_n: int  # grouped merge sort
    f_n: int  # merge insertion sort


def _default_cmp(items) -> tuple[list[int], CountingComparator]:
    cmp = counting_comparator(items)
    return list(range(len(items))), cmp


def binary_insert(run: list, x, cmp) -> list:
    """Insert x into the sorted run, spending exactly ceil(log2 k)
    comparisons where k = len(run) + 1 is the number of slots.

    Elements are whatever handles `cmp.less` understands.  Searches that
    finish early re-spend the leftover budget on already-decided
    comparisons so the count is the same on every path.
    """
    k = len(run) + 1
    budget = ceil_log2(k)
    lo, hi = 0, len(run)
    used = 0
    while lo < hi:
        mid = (lo + hi) // 2
        used += 1
        if cmp.less(x, run[mid]):
            hi = mid
        else:
            lo = mid + 1
    for _ in range(budget - used):
        cmp.less(x, run[0])
    return run[:lo] + [x] + run[lo:]


def insertion_sort(items, cmp=None) -> list:
    """Sort by successive binary insertion; exactly A(n) comparisons on
    every input of size n."""
    if cmp is None:
        handles, cmp = _default_cmp(items)
    else:
        handles = list(range(len(items)))
    run: list[int] = []
    for h in handles:
        run = binary_insert(run, h, cmp)
    return [items[h] for h in run]


def merge_runs(x: list, y: list, cmp=None) -> list:
    """Merge two sorted runs with at most len(x) + len(y) - 1 comparisons.

    With the default comparator, x and y are value runs; a caller-provided
    oracle (for instance the merge adversary) sees the run elements as-is.
    """
    if cmp is None:
        items = list(x) + list(y)
        cmp = counting_comparator(items)
        xs = list(range(len(x)))
        ys = list(range(len(x), len(x) + len(y)))
        merged = _merge(xs, ys, cmp)
        return [items[h] for h in merged]
    return _merge(list(x), list(y), cmp)


def _merge(xs: list, ys: list, cmp) -> list:
    out = []
    i = j = 0
    while i < len(xs) and j < len(ys):
        if cmp.less(xs[i], ys[j]):
            out.append(xs[i])
            i += 1
        else:
            out.append(ys[j])
            j += 1
    out.extend(xs[i:])
    out.extend(ys[j:])
    return out


def merge_lower_bound(m: int, n: int) -> int:
    """Information lower bound for merging runs of sizes m and n:
    ceil(log2 C(m+n, n)).  At m = 1 this equals ceil(log2(n+1)), which a
    linear merge does not reach."""
    from math import comb

    return ceil_log2(comb(m + n, n))


def merge_schedule(n: int) -> list[tuple[int, int]]:
    """Deterministic merge plan: repeatedly merge the two shortest runs.

    Runs are numbered 0..n-1 (singletons) and each merge appends a new run
    id; the returned pairs list the run ids merged at each step.  Ties are
    broken toward the earliest-created run.
    """
    sizes = {i: 1 for i in range(n)}
    plan: list[tuple[int, int]] = []
    next_id = n
    while len(sizes) > 1:
        a, b = sorted(sizes, key=lambda r: (sizes[r], r))[:2]
        plan.append((a, b))
        sizes[next_id] = sizes.pop(a) + sizes.pop(b)
        next_id += 1
    return plan


def merge_sort_grouped(items, cmp=None) -> list:
    """Mergesort whose phases repeatedly merge the two shortest runs.

    On power-of-two sizes this is the classic pairwise scheme with worst
    case k*2**k - 2**k + 1; in general the worst case B(n) is the sum of
    (len1 + len2 - 1) over the fixed merge schedule.
    """
    if cmp is None:
        handles, cmp = _default_cmp(items)
    else:
        handles = list(range(len(items)))
    n = len(handles)
    if n == 0:
        return []
    runs: dict[int, list] = {i: [handles[i]] for i in range(n)}
    next_id = n
    for a, b in merge_schedule(n):
        runs[next_id] = _merge(runs.pop(a), runs.pop(b), cmp)
        next_id += 1
    (final,) = runs.values()
    return [items[h] for h in final]


def grouped_merge_budget(n: int) -> int:
    """Worst-case comparisons of merge_sort_grouped: every scheduled merge
    of runs sized p and q costs p + q - 1."""
    if n <= 1:
        return 0
    sizes = {i: 1 for i in range(n)}
    next_id = n
    total = 0
    for a, b in merge_schedule(n):
        merged = sizes.pop(a) + sizes.pop(b)
        total += merged - 1
        sizes[next_id] = merged
        next_id += 1
    return total


def merge_insertion_sort(items, cmp=None) -> list:
    """Merge-insertion sort: pair, recursively sort pair winners, then
    batch-insert the pending elements at the batch boundaries
    t(k) = (2**(k+1) + (-1)**k) / 3, each batch in descending index order.

    Spends at most F(n) comparisons on every input.
    """
    if cmp is None:
        handles, cmp = _default_cmp(items)
    else:
        handles = list(range(len(items)))
    order = _merge_insertion(handles, cmp)
    return [items[h] for h in order]


def _merge_insertion(handles: list, cmp) -> list:
    n = len(handles)
    if n <= 1:
        return list(handles)
    winners = []
    loser_of = {}
    for i in range(0, n - 1, 2):
        a, b = handles[i], handles[i + 1]
        if cmp.less(a, b):
            a, b = b, a
        winners.append(a)
        loser_of[a] = b
    straggler = handles[-1] if n % 2 else None

    ordered_winners = _merge_insertion(winners, cmp)
    # Main chain starts as b1 < a1 < a2 < ... ; pending holds b2, b3, ...
    # (and, at odd n, the unpaired element labelled b_{floor(n/2)+1}).
    chain = [loser_of[ordered_winners[0]]] + ordered_winners
    pending = [loser_of[a] for a in ordered_winners[1:]]
    if straggler is not None:
        pending.append(straggler)
    # ceiling[i] is the chain element the pending element must stay below;
    # the straggler has no ceiling and searches the whole chain.
    ceiling = {b: a for a, b in loser_of.items()}

    total = len(pending)  # pending[i] is b_{i+2}
    k = 2
    low = 1  # t(k-1), boundary of the previous batch
    while low < total + 1:
        high = insertion_batch_bound(k)
        for idx in range(min(high, total + 1), low, -1):
            b = pending[idx - 2]
            cap = ceiling.get(b)
            zone = chain if cap is None else chain[: chain.index(cap)]
            inserted = binary_insert(zone, b, cmp)
            chain = inserted + chain[len(zone):]
        low = high
        k += 1
    return chain


def sort_budgets(n: int) -> SortBudget:
    """Exact values of ceil(log2 n!), A(n), B(n) and F(n)."""
    if not (1 <= n <= 10**4):
        raise ValueError("needs 1 <= n <= 10**4")
    if n == 1:
        return SortBudget(1, 0, 0, 0, 0)
    info = ceil_log2_factorial(n)
    c = ceil_log2(n)
    a_n = n * c - 2**c + 1
    f_n = sum(ceil_log2_ratio(3 * k, 4) for k in range(2, n + 1))
    return SortBudget(n, info, a_n, grouped_merge_budget(n), f_n)
