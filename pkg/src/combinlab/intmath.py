"""Exact integer arithmetic helpers shared across the package.

Every bound asserted by the test suite is an exact integer, so all
logarithm-style quantities are computed with integer comparisons and big
integers, never floating point.
"""

from __future__ import annotations

from fractions import Fraction


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for integers, b > 0."""
    return -((-a) // b)


def ceil_log2(n: int) -> int:
    """Smallest c >= 0 with 2**c >= n, for n >= 1."""
    if n < 1:
        raise ValueError("ceil_log2 needs n >= 1")
    return (n - 1).bit_length()


def floor_log2(n: int) -> int:
    """Largest c >= 0 with 2**c <= n, for n >= 1."""
    if n < 1:
        raise ValueError("floor_log2 needs n >= 1")
    return n.bit_length() - 1


def ceil_log2_ratio(p: int, q: int) -> int:
    """Smallest c >= 0 with 2**c >= p/q, for p, q >= 1."""
    if p < 1 or q < 1:
        raise ValueError("ceil_log2_ratio needs positive integers")
    c = 0
    while (q << c) < p:
        c += 1
    return c


def ceil_log3(n: int) -> int:
    """Smallest c >= 0 with 3**c >= n, for n >= 1."""
    if n < 1:
        raise ValueError("ceil_log3 needs n >= 1")
    c = 0
    power = 1
    while power < n:
        power *= 3
        c += 1
    return c


def factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def ceil_log2_factorial(n: int) -> int:
    """ceil(log2 n!) computed on the exact big integer."""
    if n < 1:
        raise ValueError("needs n >= 1")
    return ceil_log2(factorial(n))


def fib_upto(limit: int) -> list[int]:
    """Fibonacci numbers F[0] = F[1] = 1, F[k] = F[k-1] + F[k-2],
    extended until the last entry is >= limit."""
    fib = [1, 1]
    while fib[-1] < limit:
        fib.append(fib[-1] + fib[-2])
    return fib


def fib(k: int) -> int:
    """k-th Fibonacci number under the F[0] = F[1] = 1 convention."""
    if k < 0:
        raise ValueError("needs k >= 0")
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def coin_pool_size(levels: int) -> int:
    """Largest suspect-coin pool resolvable with the given number of
    weighings: (3**levels - 1) // 2."""
    return (3 ** levels - 1) // 2


def insertion_batch_bound(k: int) -> int:
    """Boundary of the k-th batched-insertion group: (2**(k+1) + (-1)**k) // 3.

    The boundaries pair up as t(k) + t(k-1) = 2**k with t(0) = t(1) = 1.
    """
    if k < 0:
        raise ValueError("needs k >= 0")
    return (2 ** (k + 1) + (-1) ** k) // 3


def harmonic(n: int) -> Fraction:
    """Exact harmonic number H(n) = 1 + 1/2 + ... + 1/n."""
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k)
    return total
