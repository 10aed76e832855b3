"""Selection by comparisons with exact budgets.

* tournament_max        exactly n - 1 comparisons
* max_and_min           at most ceil(3n/2) - 2
* top_two               at most n - 2 + ceil(log2 n)
* top_three             at most n + 2*ceil(log2 n) - 3
* select_t_tournament   at most n - t + (t-1)*ceil(log2(n+2-t))
* select_t_linear       at most 15n - 163 for n > 32 (groups of 7)

All functions speak to a counting comparator over item positions; byes in
knockout rounds go to the last entrant of an odd round so the counts are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .intmath import ceil_log2
from .oracles import counting_comparator
from .sorting import merge_insertion_sort


@dataclass
class KnockoutTree:
    """Complete pairwise-elimination bracket over item positions."""

    champion: int
    rounds: list[list[int]]  # entrants per round, champion last
    victims: dict[int, list[int]]  # winner -> entrants it beat, by round

    @property
    def matches(self) -> int:
        return sum(len(v) for v in self.victims.values())


def _knockout(entrants: list[int], cmp) -> KnockoutTree:
    rounds = [list(entrants)]
    victims: dict[int, list[int]] = {e: [] for e in entrants}
    current = list(entrants)
    while len(current) > 1:
        nxt = []
        for i in range(0, len(current) - 1, 2):
            a, b = current[i], current[i + 1]
            if cmp.less(a, b):
                a, b = b, a
            victims[a].append(b)
            nxt.append(a)
        if len(current) % 2:
            nxt.append(current[-1])  # bye for the last entrant
        current = nxt
        rounds.append(list(current))
    return KnockoutTree(current[0], rounds, victims)


def _serial_max(entrants: list[int], cmp) -> int:
    best = entrants[0]
    for e in entrants[1:]:
        if cmp.less(best, e):
            best = e
    return best


def tournament_max(items, cmp=None) -> tuple[int, KnockoutTree]:
    """Position of the maximum via a cup tournament; exactly n - 1
    comparisons.  Returns (argmax, bracket)."""
    if cmp is None:
        cmp = counting_comparator(items)
    n = len(items)
    if n < 1:
        raise ValueError("needs n >= 1")
    tree = _knockout(list(range(n)), cmp)
    return tree.champion, tree


def max_and_min(items, cmp=None) -> tuple[int, int]:
    """Positions of maximum and minimum with <= ceil(3n/2) - 2
    comparisons: pair up, then scan winners for the max and losers for the
    min; at odd n the unpaired entrant joins both scans."""
    if cmp is None:
        cmp = counting_comparator(items)
    n = len(items)
    if n < 2:
        raise ValueError("needs n >= 2")
    winners, losers = [], []
    for i in range(0, n - 1, 2):
        a, b = i, i + 1
        if cmp.less(a, b):
            a, b = b, a
        winners.append(a)
        losers.append(b)
    if n % 2:
        winners.append(n - 1)
        losers.append(n - 1)
    best = _serial_max(winners, cmp)
    worst = losers[0]
    for e in losers[1:]:
        if cmp.less(e, worst):
            worst = e
    return best, worst


def top_two(items, cmp=None) -> tuple[int, int]:
    """First and second place with <= n - 2 + ceil(log2 n) comparisons.
    The runner-up is the best among the champion's victims."""
    if cmp is None:
        cmp = counting_comparator(items)
    n = len(items)
    if n < 2:
        raise ValueError("needs n >= 2")
    champion, tree = tournament_max(items, cmp)
    second = _serial_max(tree.victims[champion], cmp)
    return champion, second


def top_three(items, cmp=None) -> tuple[int, int, int]:
    """First, second and third places with <= n + 2*ceil(log2 n) - 3
    comparisons.

    Second place is decided by a serial mini-tournament over the
    champion's victims taken in the order they lost (so the winner's
    total victory count stays <= ceil(log2 n)); third place is the best
    among the runner-up's victims.
    """
    if cmp is None:
        cmp = counting_comparator(items)
    n = len(items)
    if n < 3:
        raise ValueError("needs n >= 3")
    champion, tree = tournament_max(items, cmp)
    contenders = tree.victims[champion]  # already in round order
    mini_victims: dict[int, list[int]] = {c: [] for c in contenders}
    second = contenders[0]
    for c in contenders[1:]:
        if cmp.less(second, c):
            mini_victims[c].append(second)
            second = c
        else:
            mini_victims[second].append(c)
    third_candidates = tree.victims[second] + mini_victims[second]
    third = _serial_max(third_candidates, cmp)
    return champion, second, third


class _Bracket:
    """Complete binary bracket supporting leaf replacement with partial
    replay; empty leaves act as byes."""

    def __init__(self, entrants: list[int], cmp):
        self.cmp = cmp
        size = 1
        while size < len(entrants):
            size *= 2
        self.size = size
        self.slots: list = list(entrants) + [None] * (size - len(entrants))
        self.node: list = [None] * (2 * size)
        for i, e in enumerate(self.slots):
            self.node[size + i] = e
        for v in range(size - 1, 0, -1):
            self.node[v] = self._play(self.node[2 * v], self.node[2 * v + 1])
        self.leaf_of = {e: size + i for i, e in enumerate(self.slots) if e is not None}

    def _play(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        return b if self.cmp.less(a, b) else a

    @property
    def winner(self):
        return self.node[1]

    def replace(self, old, new) -> None:
        v = self.leaf_of.pop(old)
        self.node[v] = new
        if new is not None:
            self.leaf_of[new] = v
        v //= 2
        while v >= 1:
            self.node[v] = self._play(self.node[2 * v], self.node[2 * v + 1])
            v //= 2


def select_t_tournament(items, t: int, cmp=None) -> int:
    """Position of the t-th largest via a replacement tournament.

    Runs a knockout over the first n - t + 2 entrants, then t - 2 times
    replaces the current winner with a fresh entrant and replays its
    path, and finally retires the last winner without replacement; the
    surviving winner is the t-th largest.  Comparisons stay within
    n - t + (t-1)*ceil(log2(n+2-t)).
    """
    if cmp is None:
        cmp = counting_comparator(items)
    n = len(items)
    if not 1 <= t <= n:
        raise ValueError("t out of range")
    if t == 1:
        return tournament_max(items, cmp)[0]
    m = n - t + 2
    bracket = _Bracket(list(range(m)), cmp)
    for fresh in range(m, n):
        bracket.replace(bracket.winner, fresh)
    bracket.replace(bracket.winner, None)
    return bracket.winner


# select_t_linear: groups of 7, median of medians, base case by sorting.

_BASE_CASE = 1 << 10


class _PadComparator:
    """Comparator that treats pad handles as strictly below all items and
    never charges for comparisons it can resolve itself."""

    def __init__(self, cmp):
        self.cmp = cmp

    @staticmethod
    def _is_pad(h) -> bool:
        return isinstance(h, tuple) and h and h[0] == "pad"

    def less(self, a, b) -> bool:
        pa, pb = self._is_pad(a), self._is_pad(b)
        if pa and pb:
            return a[1] < b[1]
        if pa:
            return True
        if pb:
            return False
        return self.cmp.less(a, b)


def select_t_linear(items, t: int, cmp=None) -> int:
    """Position of the t-th largest in worst-case linear time.

    Sizes up to 1024 are sorted outright with merge-insertion sort; larger
    inputs are padded with bottom sentinels to 7*(2q+1) elements, split
    into groups of 7, partitioned around the median of the group medians,
    and recursed.  For n > 32 the comparison count stays <= 15n - 163.
    """
    if cmp is None:
        cmp = counting_comparator(items)
    n = len(items)
    if not 1 <= t <= n:
        raise ValueError("t out of range")
    x, _, _ = _select_partition(list(range(n)), t, _PadComparator(cmp))
    return x


def _select_partition(handles: list, t: int, cmp) -> tuple:
    """Return (t-th largest, handles greater than it, handles less)."""
    n = len(handles)
    if n <= _BASE_CASE:
        asc = _sort_handles(handles, cmp)
        x = asc[n - t]
        return x, asc[n - t + 1 :], asc[: n - t]

    padded = list(handles)
    pad_id = 0
    while len(padded) % 7 or (len(padded) // 7) % 2 == 0:
        padded.append(("pad", pad_id))
        pad_id += 1
    groups = [_sort_desc(padded[i : i + 7], cmp) for i in range(0, len(padded), 7)]
    medians = [g[3] for g in groups]
    q = (len(medians) - 1) // 2
    x, med_above, med_below = _select_partition(medians, q + 1, cmp)
    above = set(med_above)
    greater: list = []
    smaller: list = []
    for g in groups:
        median = g[3]
        if median == x:
            greater.extend(g[:3])
            smaller.extend(g[4:])
        elif median in above:
            greater.extend(g[:4])
            u, v, w = g[4], g[5], g[6]
            if cmp.less(x, v):
                greater.extend([u, v])
                (greater if cmp.less(x, w) else smaller).append(w)
            else:
                smaller.extend([v, w])
                (greater if cmp.less(x, u) else smaller).append(u)
        else:
            smaller.extend(g[3:])
            u, v, w = g[0], g[1], g[2]
            if cmp.less(v, x):
                smaller.extend([v, w])
                (greater if cmp.less(x, u) else smaller).append(u)
            else:
                greater.extend([u, v])
                (greater if cmp.less(x, w) else smaller).append(w)
    r = len(greater)
    if t == r + 1:
        return x, greater, smaller
    if t < r + 1:
        y, g2, s2 = _select_partition(greater, t, cmp)
        return y, g2, s2 + [x] + smaller
    y, g2, s2 = _select_partition(smaller, t - 1 - r, cmp)
    return y, g2 + [x] + greater, s2


def _sort_handles(handles: list, cmp) -> list:
    """Ascending merge-insertion sort over arbitrary handles."""
    if len(handles) <= 1:
        return list(handles)
    order = _mi_sort(handles, cmp)
    return order


def _mi_sort(handles: list, cmp) -> list:
    # merge_insertion_sort over positional items needs value handles; wrap
    # the handle list through an index comparator adapter.
    class _Adapter:
        def __init__(self, inner):
            self.inner = inner

        def less(self, i, j):
            return self.inner.less(handles[i], handles[j])

    idx_order = merge_insertion_sort(list(range(len(handles))), _Adapter(cmp))
    return [handles[i] for i in idx_order]


def _sort_desc(handles: list, cmp) -> list:
    return list(reversed(_sort_handles(handles, cmp)))
