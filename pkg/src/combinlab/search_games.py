"""Query-optimal solvers for the classic search puzzles.

Each solver talks to a caller-supplied oracle and meets an exact worst-case
query bound:

* find_radioactive:  ceil(log2 n) group tests
* find_counterfeit:  ceil(log3 (2n+1)) weighings
* bitonic_max:       k probes where fib(k) <= n < fib(k+1)
* sets_equal:        n(n+1)/2 equality probes
* classify_group:    ceil(3(n-1)/2) questions
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmath import ceil_div, coin_pool_size, fib, fib_upto
from .oracles import EQUAL, LEFT, RIGHT, CostedOracle


def bitonic_probe_capacity(k: int) -> int:
    """Longest bitonic sequence whose peak k probes can always pin down:
    fib(k+1) - 1 under the fib(0) = fib(1) = 1 convention."""
    return fib(k + 1) - 1


class InconsistentBalanceError(ValueError):
    """Balance answers ruled out every single-counterfeit world."""


class NotBitonicError(ValueError):
    """Probed values cannot belong to any strictly bitonic sequence."""


HEAVIER = "Heavier"
LIGHTER = "Lighter"


@dataclass(frozen=True)
class CoinVerdict:
    """Either all coins genuine, or coin `index` with the given bias."""

    index: int | None
    bias: str | None

    @property
    def all_genuine(self) -> bool:
        return self.index is None


ALL_GENUINE = CoinVerdict(None, None)


def find_radioactive(n: int, tester) -> int:
    """Locate the single radioactive ball among 1..n.

    tester(subset) answers whether the radioactive ball lies in the subset.
    Uses at most ceil(log2 n) tests by halving into parts of sizes
    ceil(|I|/2) and floor(|I|/2).  A tester inconsistent with the
    one-positive model makes the returned index arbitrary.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    candidates = list(range(1, n + 1))
    while len(candidates) > 1:
        half = ceil_div(len(candidates), 2)
        first = candidates[:half]
        if tester(frozenset(first)):
            candidates = first
        else:
            candidates = candidates[half:]
    return candidates[0]


class BalanceOracle(CostedOracle):
    """Truthful scale for a fixed world; coin 0 is the known-genuine coin."""

    def __init__(self, n: int, verdict: CoinVerdict):
        super().__init__()
        self.n = n
        self.verdict = verdict

    def _weight(self, coin: int) -> int:
        if self.verdict.all_genuine or coin != self.verdict.index:
            return 0
        return 1 if self.verdict.bias == HEAVIER else -1

    def weigh(self, left, right) -> str:
        left, right = list(left), list(right)
        if len(left) != len(right):
            raise ValueError("pans must hold equally many coins")
        if set(left) & set(right):
            raise ValueError("a coin cannot sit on both pans")
        self.counter.tick()
        d = sum(self._weight(c) for c in left) - sum(self._weight(c) for c in right)
        return LEFT if d > 0 else RIGHT if d < 0 else EQUAL


GENUINE = 0  # index of the known-genuine coin available to the scheme


def find_counterfeit(n: int, balance) -> CoinVerdict:
    """Identify the at-most-one counterfeit among suspects 1..n.

    balance(left, right) compares two equal-sized groups of coin indices
    (0 is the extra known-genuine coin) and answers Left/Right/Equal.
    Uses at most ceil(log3 (2n+1)) weighings over the 2n+1 possible worlds.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    levels = 0
    while coin_pool_size(levels) < n:
        levels += 1
    return _solve_pool(list(range(1, n + 1)), levels, balance)


def _solve_pool(suspects: list[int], k: int, balance) -> CoinVerdict:
    """At most one counterfeit among `suspects` (any bias); budget k."""
    if not suspects:
        return ALL_GENUINE
    reserve = coin_pool_size(k - 1)
    m = len(suspects) - reserve
    if m <= 0:
        return _solve_pool(suspects, k - 1, balance)
    half = m // 2
    if m % 2 == 0:
        left = suspects[:half]
        right = suspects[half:m]
    else:
        left = suspects[: half + 1]
        right = suspects[half + 1 : m] + [GENUINE]
    rest = suspects[m:]
    outcome = balance(left, right)
    if outcome == EQUAL:
        return _solve_pool(rest, k - 1, balance)
    pans = [c for c in left if c != GENUINE], [c for c in right if c != GENUINE]
    if outcome == LEFT:
        heavies, lights = pans
    else:
        lights, heavies = pans
    return _solve_signed(lights, heavies, k - 1, balance)


def _solve_signed(lights: list[int], heavies: list[int], k: int, balance) -> CoinVerdict:
    """Exactly one counterfeit: light if among `lights`, heavy if among
    `heavies`; requires len(lights) + len(heavies) <= 3**k."""
    m = len(lights) + len(heavies)
    if m == 0:
        raise InconsistentBalanceError("inconsistent balance")
    if m == 1:
        if lights:
            return CoinVerdict(lights[0], LIGHTER)
        return CoinVerdict(heavies[0], HEAVIER)
    assert k >= 1 and m <= 3 ** k
    third = 3 ** (k - 1)
    lo = max(1, ceil_div(m - third, 2))
    x2, y2 = len(lights) // 2, len(heavies) // 2
    if x2 + y2 >= lo:
        # Symmetric weighing: each pan gets x' lights and y' heavies.
        xp = min(x2, third)
        yp = min(y2, third - xp)
        left = lights[:xp] + heavies[:yp]
        right = lights[xp : 2 * xp] + heavies[yp : 2 * yp]
        outcome = balance(left, right)
        if outcome == EQUAL:
            return _solve_signed(lights[2 * xp :], heavies[2 * yp :], k - 1, balance)
        if outcome == LEFT:
            return _solve_signed(
                lights[xp : 2 * xp], heavies[:yp], k - 1, balance
            )
        return _solve_signed(lights[:xp], heavies[yp : 2 * yp], k - 1, balance)
    # Only reachable with one light and one heavy suspect: borrow the
    # known-genuine coin to test the light suspect alone.
    outcome = balance([lights[0]], [GENUINE])
    if outcome == RIGHT:
        return CoinVerdict(lights[0], LIGHTER)
    if outcome == EQUAL:
        return _solve_signed([], heavies, k - 1, balance)
    raise InconsistentBalanceError("inconsistent balance")


def bitonic_max(n: int, probe) -> tuple[int, object]:
    """Peak of a strictly bitonic sequence x_1..x_n via value probes.

    probe(i) returns x_i.  Probed values are memoized (no index is probed
    twice) and, for n >= 3, at most k probes are spent where
    fib(k) <= n < fib(k+1).  Values that cannot belong to any bitonic
    sequence raise NotBitonicError.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    memo: dict[int, object] = {}

    def value(i: int):
        # Indices beyond n are virtual padding, strictly below all real
        # values and strictly decreasing; they never touch the oracle.
        if i > n:
            return (0, -i)
        if i not in memo:
            memo[i] = (1, probe(i))
            _check_bitonic_consistency(memo)
        return memo[i]

    if n == 1:
        return 1, value(1)[1]
    if n == 2:
        v1, v2 = value(1), value(2)
        return (1, v1[1]) if v1 > v2 else (2, v2[1])

    fibs = fib_upto(n + 1)
    k = max(i for i in range(len(fibs)) if fibs[i] <= n)
    while len(fibs) <= k + 1:
        fibs.append(fibs[-1] + fibs[-2])
    total = fibs[k + 1] - 1  # virtual padded length

    def real_index(start: int, step: int, pos: int) -> int:
        return start + step * (pos - 1)

    v1 = value(fibs[k - 1])
    v2 = value(fibs[k])
    if v1 > v2:
        start, step, known_pos, known_val, param = 1, 1, fibs[k - 1], v1, k
    else:
        start, step, known_pos, known_val, param = total, -1, fibs[k - 1], v2, k

    while param > 3:
        q = fibs[param - 2]
        vq = value(real_index(start, step, q))
        if vq > known_val:
            known_pos, known_val, param = q, vq, param - 1
        else:
            # Reverse the window tail; the known element lands at the
            # position required one level down.
            end = real_index(start, step, fibs[param] - 1)
            start, step = end, -step
            known_pos, param = fibs[param - 2], param - 1
    # param == 3: two positions, the second one known.
    vfirst = value(real_index(start, step, 1))
    best_pos = 1 if vfirst > known_val else 2
    best_val = vfirst if vfirst > known_val else known_val
    idx = real_index(start, step, best_pos)
    if best_val[0] == 0:
        raise NotBitonicError("not bitonic")
    return idx, best_val[1]


def _check_bitonic_consistency(memo: dict[int, object]) -> None:
    pairs = sorted(memo.items())
    vals = [v for _, v in pairs]
    m = len(vals)
    for cut in range(m + 1):
        head = vals[:cut]
        tail = vals[cut:]
        if all(head[t] < head[t + 1] for t in range(len(head) - 1)) and all(
            tail[t] > tail[t + 1] for t in range(len(tail) - 1)
        ):
            return
    raise NotBitonicError("not bitonic")


def sets_equal(n: int, probe) -> bool:
    """Decide A = B for two n-element sets via probes "a_i == b_j?".

    Scans each a_i against the not-yet-matched elements of B in index
    order, removing matches; spends at most n(n+1)/2 probes.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    remaining = list(range(1, n + 1))
    for i in range(1, n + 1):
        hit = None
        for j in remaining:
            if probe(i, j):
                hit = j
                break
        if hit is None:
            return False
        remaining.remove(hit)
    return True


def classify_group(n: int, ask) -> dict[int, bool]:
    """Label every member of a group with an honest strict majority.

    ask(i, j) poses "is member j honest?" to member i; honest members
    answer truthfully, dishonest ones arbitrarily.  Returns a complete
    member -> honest? map using at most ceil(3(n-1)/2) questions.
    """
    if n < 3:
        raise ValueError("needs n >= 3")
    labels = _classify(list(range(1, n + 1)), ask)
    return {v: labels[v] for v in range(1, n + 1)}


def _classify(group: list[int], ask) -> dict[int, bool]:
    m = len(group)
    if m == 1:
        return {group[0]: True}
    if m == 2:
        return {group[0]: True, group[1]: True}
    chosen = group[0]
    yes_limit = (m - 1) // 2
    yes_sayers: list[int] = []
    no_sayers: list[int] = []
    for asker in group[1:]:
        if ask(asker, chosen):
            yes_sayers.append(asker)
        else:
            no_sayers.append(asker)
        if len(no_sayers) > len(yes_sayers) or len(yes_sayers) == yes_limit:
            break

    labels: dict[int, bool] = {}
    if len(yes_sayers) == yes_limit and len(no_sayers) <= len(yes_sayers):
        # The chosen member is necessarily honest; its answers settle
        # everyone not already exposed as a liar.
        labels[chosen] = True
        for v in no_sayers:
            labels[v] = False
        for v in group[1:]:
            if v not in labels:
                labels[v] = ask(chosen, v)
        return labels

    # Stopped with one more "no" than "yes": among the asked members plus
    # the chosen one, at least j+1 are dishonest, so the rest of the group
    # keeps its honest majority.
    j = len(yes_sayers)
    asked = set(yes_sayers) | set(no_sayers) | {chosen}
    remaining = [v for v in group if v not in asked]
    if j == (m - 1) // 2 - 1:
        for v in remaining:
            labels[v] = True
    else:
        labels.update(_classify(remaining, ask))
    helper = min(v for v in remaining if labels[v])
    chosen_honest = ask(helper, chosen)
    labels[chosen] = chosen_honest
    if chosen_honest:
        for v in no_sayers:
            labels[v] = False
        for v in yes_sayers:
            labels[v] = ask(helper, v)
    else:
        for v in yes_sayers:
            labels[v] = False
        for v in no_sayers:
            labels[v] = ask(helper, v)
    return labels
