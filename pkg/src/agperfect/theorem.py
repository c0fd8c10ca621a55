"""Closed-form perfectness classification and explicit 5-hole constructions.

AG(Z_n) is perfect exactly when n is ``p^a``, ``p^a q^b``, ``p^a q r`` or
``p q r s``. For every other n an induced 5-cycle can be written down
directly from the prime powers of n; :func:`lemma_witness` does so and
re-checks it before returning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .aggraph import AGGraph, build
from .factoring import FactorSource, Factorization, Signature, as_factorization, factor
from .holes import BergeVerdict, HoleWitness, is_berge, verify_witness


class FormKind(enum.Enum):
    PRIME_POWER = "PrimePower"
    TWO_PRIME_POWERS = "TwoPrimePowers"
    PRIME_POWER_TIMES_TWO_PRIMES = "PrimePowerTimesTwoPrimes"
    FOUR_DISTINCT_PRIMES = "FourDistinctPrimes"
    IMPERFECT = "Imperfect"


class ImperfectReason(enum.Enum):
    FIVE_OR_MORE_PRIMES = "FiveOrMorePrimes"
    FOUR_PRIMES_WITH_SQUARE = "FourPrimesWithSquare"
    THREE_PRIMES_TWO_SQUARES = "ThreePrimesTwoSquares"


@dataclass(frozen=True)
class Form:
    kind: FormKind
    reason: ImperfectReason | None = None

    @property
    def perfect(self) -> bool:
        return self.kind is not FormKind.IMPERFECT

    def __str__(self) -> str:
        if self.reason is None:
            return self.kind.value
        return f"{self.kind.value}/{self.reason.value}"


class NotImperfectError(ValueError):
    """Raised when a witness is requested for a perfect signature."""


class LemmaCycleError(AssertionError):
    """A constructed 5-cycle failed verification; this should never happen."""


def classify(s: FactorSource) -> Form:
    if isinstance(s, int):
        s = factor(s)
    s = s if isinstance(s, Signature) else Signature(s.exponents)
    k = s.k
    big = sum(1 for e in s.exponents if e > 1)
    if k == 1:
        return Form(FormKind.PRIME_POWER)
    if k == 2:
        return Form(FormKind.TWO_PRIME_POWERS)
    if k == 3:
        if big <= 1:
            return Form(FormKind.PRIME_POWER_TIMES_TWO_PRIMES)
        return Form(FormKind.IMPERFECT, ImperfectReason.THREE_PRIMES_TWO_SQUARES)
    if k == 4:
        if big == 0:
            return Form(FormKind.FOUR_DISTINCT_PRIMES)
        return Form(FormKind.IMPERFECT, ImperfectReason.FOUR_PRIMES_WITH_SQUARE)
    return Form(FormKind.IMPERFECT, ImperfectReason.FIVE_OR_MORE_PRIMES)


def is_perfect_theorem(s: FactorSource) -> bool:
    return classify(s).perfect


def _cycle_exponents(a: list[int]) -> list[list[int]]:
    """The five cycle vertices as exponent lists over the reordered primes."""
    k = len(a)

    def vec(powers: dict[int, int]) -> list[int]:
        e = [0] * k
        for i, x in powers.items():
            e[i] = x
        return e

    if k >= 5:
        # primes beyond the fifth ride along at full exponent in every vertex
        rest = {i: a[i] for i in range(5, k)}
        picks = [(0, 1, 3), (2, 3, 4), (0, 1, 2), (1, 3, 4), (0, 2, 4)]
        return [vec({**{i: a[i] for i in idx}, **rest}) for idx in picks]
    if k == 4:
        return [
            vec({0: a[0], 3: a[3]}),
            vec({1: a[1], 2: a[2], 3: a[3]}),
            vec({0: a[0], 1: a[1]}),
            vec({0: 1, 2: a[2], 3: a[3]}),
            vec({0: a[0] - 1, 1: a[1], 2: a[2]}),
        ]
    if k == 3:
        return [
            vec({1: a[1], 2: a[2]}),
            vec({0: a[0], 1: 1}),
            vec({0: 1, 1: a[1] - 1, 2: a[2]}),
            vec({0: a[0] - 1, 1: a[1]}),
            vec({0: a[0], 2: a[2]}),
        ]
    raise NotImperfectError("no 5-hole construction for fewer than three primes")


def lemma_witness(source: FactorSource, g: AGGraph | None = None) -> HoleWitness:
    """Build the explicit induced 5-cycle for an imperfect ``n``.

    With three or four primes, those with exponent > 1 are stably moved to
    the front, which is the labelling the constructions assume; with five or
    more the natural prime order is used and primes past the fifth join the
    common multiplier at full exponent. The result is mapped back onto the
    graph's own vertex encoding and verified edge by edge.

    >>> g = build(180)
    >>> [g.label(v) for v in lemma_witness(180, g).cycle]
    [45, 12, 30, 18, 20]
    """
    f = as_factorization(source)
    form = classify(f)
    if form.perfect:
        raise NotImperfectError(f"signature {Signature(f.exponents)} is perfect ({form})")
    if g is None:
        g = build(source)
    # the 3- and 4-prime constructions want the squared primes first
    ordered = list(f.parts) if f.k >= 5 else sorted(f.parts, key=lambda pe: pe[1] == 1)
    primes = [p for p, _ in ordered]
    at = {p: i for i, p in enumerate(g.primes)}
    cycle = []
    for exps in _cycle_exponents([e for _, e in ordered]):
        v = [0] * len(g.primes)
        for p, e in zip(primes, exps):
            v[at[p]] = e
        cycle.append(tuple(v))
    w = HoleWitness(tuple(cycle), in_complement=False)
    if not verify_witness(g, w):
        raise LemmaCycleError(f"constructed cycle {w.labels(g)} is not an induced 5-hole")
    return w


@dataclass(frozen=True)
class Verdict:
    signature: Signature
    form: Form
    perfect: bool | None
    method: str
    witness: HoleWitness | None = None
    n: int | None = None
    search_exhaustive: bool = True

    def to_dict(self, g: AGGraph) -> dict:
        out = {}
        if self.n is not None:
            out["n"] = self.n
        out.update(
            signature=list(self.signature.exponents),
            form=str(self.form),
            perfect=self.perfect,
            method=self.method,
        )
        if self.witness is not None:
            out["witness"] = self.witness.to_dict(g)
        if not self.search_exhaustive:
            out["search_exhaustive"] = False
        return out


def decide(
    source: FactorSource,
    method: str = "spgt",
    max_length: int | None = None,
    deadline: float | None = None,
) -> tuple[Verdict, AGGraph]:
    """Decide perfectness of AG(Z_n) by ``"theorem"`` or by ``"spgt"`` search."""
    g = build(source)
    form = classify(g.signature)
    n = g.n
    if method == "theorem":
        w = None if form.perfect else lemma_witness(source, g)
        return Verdict(g.signature, form, form.perfect, method, w, n), g
    if method != "spgt":
        raise ValueError(f"unknown method {method!r}")
    bv: BergeVerdict = is_berge(g, max_length=max_length, deadline=deadline)
    verdict = Verdict(
        g.signature, form, bv.is_berge, method, bv.witness, n, bv.search_exhaustive
    )
    return verdict, g
