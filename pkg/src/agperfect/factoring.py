"""Integer factorization, exponent signatures and proper-divisor enumeration.

Everything downstream depends only on the exponent signature of ``n``, so a
:class:`Signature` can stand in for a :class:`Factorization` wherever a graph
is built; it is realized with the first ``k`` primes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cache
from math import gcd, isqrt, prod
from typing import Iterable, Union

MAX_N = 2**64 - 1
TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses; sufficient for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

ExponentVector = tuple[int, ...]


@cache
def _small_primes(limit: int = TRIAL_LIMIT) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return tuple(itertools.compress(range(limit + 1), sieve))


def first_primes(k: int) -> tuple[int, ...]:
    """The first ``k`` primes, in increasing order."""
    ps = _small_primes()
    if k > len(ps):
        raise ValueError(f"at most {len(ps)} synthetic primes are available")
    return ps[:k]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n`` (Brent's variant)."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Signature:
    """Exponent multiset of ``n``, sorted non-increasing."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise ValueError("a signature needs at least one exponent")
        if any(e < 1 for e in exps):
            raise ValueError(f"exponents must be >= 1, got {exps}")
        object.__setattr__(self, "exponents", tuple(sorted(exps, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse a comma-separated exponent list such as ``"2,1,1"``."""
        try:
            exps = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
        except ValueError:
            raise ValueError(f"not an exponent list: {text!r}") from None
        return cls(exps)

    @property
    def k(self) -> int:
        return len(self.exponents)

    @property
    def vertex_count(self) -> int:
        return prod(e + 1 for e in self.exponents) - 2

    def synthetic(self) -> "Factorization":
        """Realize the signature with the first ``k`` primes."""
        return Factorization(tuple(zip(first_primes(self.k), self.exponents)))

    def __str__(self) -> str:
        return ",".join(map(str, self.exponents))


@dataclass(frozen=True)
class Factorization:
    """``n`` as ordered ``(prime, exponent)`` parts with increasing primes."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        parts = tuple((int(p), int(e)) for p, e in self.parts)
        if not parts:
            raise ValueError("a factorization needs at least one part")
        primes = [p for p, _ in parts]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError(f"primes must be strictly increasing: {primes}")
        for p, e in parts:
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Factorization":
        """Build from unordered pairs; primes are sorted for you."""
        return cls(tuple(sorted(pairs)))

    @property
    def n(self) -> int:
        return prod(p**e for p, e in self.parts)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.parts)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def divisor(self, e: ExponentVector) -> int:
        return prod(p**x for p, x in zip(self.primes, e))

    def __str__(self) -> str:
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.parts)


FactorSource = Union[int, Factorization, Signature]


def factor(n: int, seed: int = 0) -> Factorization:
    """Factor ``2 <= n < 2**64``.

    Trial division by the primes below one million, then Brent-Pollard rho on
    whatever cofactor is left. The rho stage draws from ``random.Random(seed)``
    so the output never depends on global state.

    >>> factor(180).parts
    ((2, 2), (3, 2), (5, 1))
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > MAX_N:
        raise ValueError(f"n must fit in 64 bits, got {n}")
    counts: dict[int, int] = {}
    m = n
    for p in _small_primes():
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    if m > 1:
        rng = random.Random(seed)
        stack = [m]
        while stack:
            x = stack.pop()
            if is_prime(x):
                counts[x] = counts.get(x, 0) + 1
            else:
                d = _brent_rho(x, rng)
                stack.extend((d, x // d))
    return Factorization(tuple(sorted(counts.items())))


def signature(f: Factorization | Signature) -> Signature:
    if isinstance(f, Signature):
        return f
    return Signature(f.exponents)


def as_factorization(source: FactorSource) -> Factorization:
    if isinstance(source, Factorization):
        return source
    if isinstance(source, Signature):
        return source.synthetic()
    return factor(source)


def proper_divisor_vectors(f: Factorization | Signature) -> list[ExponentVector]:
    """Exponent vectors of the divisors ``1 < m < n``, in lexicographic order.

    Indices follow the parts of ``f``; a bare Signature uses its own
    (non-increasing) exponent order.
    """
    alpha = f.exponents
    top = tuple(alpha)
    return [
        e
        for e in itertools.product(*(range(a + 1) for a in alpha))
        if any(e) and e != top
    ]
