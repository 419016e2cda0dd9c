"""Symmetric Grothendieck polynomials, two independent ways, plus the greedy
box-adding partition chain and the majorization checks built on it.

The Schur-basis route expands G through signed counts of flagged strictly
increasing skew tableaux; the set-valued route sums signed monomials over
set-valued semistandard tableaux. The two must agree exactly, which is the
suite's strongest oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import (
    Partition,
    RationalVector,
    convex_combination,
    dominance_leq,
    majorizes,
    sort_decreasing,
)
from .polynomials import SparsePolynomial
from .tableaux import (
    Tableau,
    content,
    enumerate_lenart_tableaux,
    enumerate_set_valued,
    enumerate_ssyt,
    is_valid_lenart,
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a verification run; falsy results carry a witness message."""

    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SchurExpansion:
    """Schur coefficients of a symmetric Grothendieck polynomial.

    Stored as (shape, coefficient) pairs sorted by (size, parts); every
    coefficient is nonzero and carries the sign (-1)^(extra boxes).
    """

    lam: Partition
    n: int
    terms: tuple[tuple[Partition, int], ...]

    def __post_init__(self) -> None:
        base = self.lam.size()
        for mu, coeff in self.terms:
            if coeff == 0:
                raise ValueError("expansion must not store zero coefficients")
            if len(mu) > self.n or not mu.contains(self.lam):
                raise ValueError(f"shape {mu.parts} outside the admissible range")
            if any(mu.part(i) > self.lam.part(i) + i - 1 for i in range(1, len(mu) + 1)):
                raise ValueError(f"shape {mu.parts} violates the row growth bound")
            if coeff * (-1) ** (mu.size() - base) <= 0:
                raise ValueError(f"coefficient sign broken at {mu.parts}")
        if self.coefficient(self.lam) != 1:
            raise ValueError("leading coefficient must be 1")

    def coefficient(self, mu: Partition) -> int:
        for shape, coeff in self.terms:
            if shape == mu:
                return coeff
        return 0

    def coeffs(self) -> dict[Partition, int]:
        return dict(self.terms)

    def shapes_of_size(self, size: int) -> list[Partition]:
        return [mu for mu, _ in self.terms if mu.size() == size]

    def max_size(self) -> int:
        return max(mu.size() for mu, _ in self.terms)

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "n": self.n,
            "terms": [
                {"mu": list(mu.parts), "coeff": coeff} for mu, coeff in self.terms
            ],
        }


@dataclass(frozen=True)
class MuChain:
    """The greedy chain of partitions obtained by repeatedly adding one box.

    Step k adds a box to the northmost row r (within 1..n) whose surplus over
    the base shape is still below r-1 and where the result stays a Young
    diagram; the chain stops when no row qualifies. rows[k-1] records the row
    receiving box k (1-based).
    """

    lam: Partition
    n: int
    mus: tuple[Partition, ...]
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.lam) > self.n:
            raise ValueError("base shape has more rows than the ambient allows")
        if len(self.mus) != len(self.rows) + 1 or self.mus[0] != self.lam:
            raise ValueError("chain must start at the base shape")
        for k, r in enumerate(self.rows, start=1):
            prev = self.mus[k - 1]
            if not (1 <= r <= self.n):
                raise ValueError(f"step {k} adds outside rows 1..{self.n}")
            if prev.part(r) - self.lam.part(r) >= r - 1:
                raise ValueError(f"step {k} exceeds the surplus budget of row {r}")
            if self.mus[k] != prev.add_box(r):
                raise ValueError(f"step {k} is not a single added box in row {r}")
            if any(
                prev.part(s) - self.lam.part(s) < s - 1 and prev.can_add_box(s)
                for s in range(1, r)
            ):
                raise ValueError(f"step {k} skipped a qualifying northern row")
        last = self.mus[-1]
        if any(
            last.part(r) - self.lam.part(r) < r - 1 and last.can_add_box(r)
            for r in range(1, self.n + 1)
        ):
            raise ValueError("chain stopped while a row still qualifies")

    @property
    def length(self) -> int:
        """N, the number of boxes added on top of the base shape."""
        return len(self.rows)

    def extra_boxes(self) -> tuple[int, ...]:
        """Per-row surplus of the final shape over the base, rows 1..n."""
        final = self.mus[-1]
        return tuple(final.part(r) - self.lam.part(r) for r in range(1, self.n + 1))

    def to_json_dict(self) -> dict:
        return {
            "mus": [list(mu.padded(self.n)) for mu in self.mus],
            "rows": list(self.rows),
        }


# -- expansion through flagged skew tableaux ---------------------------------


def lenart_coefficient(lam: Partition, mu: Partition, n: int) -> int:
    """Signed count of flagged strictly increasing skew fillings of mu/lam."""
    if not mu.contains(lam) or len(mu) > n:
        return 0
    count = sum(1 for _ in enumerate_lenart_tableaux(lam, mu, n))
    return (-1) ** (mu.size() - lam.size()) * count


def _candidate_shapes(lam: Partition, n: int) -> Iterator[Partition]:
    """Partitions mu with lam <= mu rowwise and mu_i <= lam_i + i - 1, <= n rows."""

    def rec(i: int, prev: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if i > n:
            yield Partition(prefix)
            return
        lo = lam.part(i)
        hi = min(lam.part(i) + i - 1, prev)
        for p in range(lo, hi + 1):
            yield from rec(i + 1, p, prefix + (p,))

    yield from rec(1, lam.part(1), ())


@lru_cache(maxsize=None)
def schur_expansion(lam: Partition, n: int) -> SchurExpansion:
    """Expand the Grothendieck polynomial of lam over the Schur basis."""
    if len(lam) > n:
        raise ValueError(f"shape {lam.parts} has more rows than variables ({n})")
    terms = []
    for mu in _candidate_shapes(lam, n):
        coeff = lenart_coefficient(lam, mu, n)
        if coeff != 0:
            terms.append((mu, coeff))
    terms.sort(key=lambda item: (item[0].size(), item[0].parts))
    return SchurExpansion(lam=lam, n=n, terms=tuple(terms))


@lru_cache(maxsize=None)
def schur_polynomial(mu: Partition, n: int) -> SparsePolynomial:
    """Monomial expansion of the Schur polynomial: sum over SSYT contents."""
    acc: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(mu, n):
        w = content(t, n)
        acc[w] = acc.get(w, 0) + 1
    return SparsePolynomial(n, acc)


@lru_cache(maxsize=None)
def grothendieck_lenart(lam: Partition, n: int) -> SparsePolynomial:
    """Grothendieck polynomial assembled from its Schur expansion."""
    result = SparsePolynomial.zero(n)
    for mu, coeff in schur_expansion(lam, n).terms:
        result = result + coeff * schur_polynomial(mu, n)
    return result


def grothendieck_setvalued(lam: Partition, n: int) -> SparsePolynomial:
    """Grothendieck polynomial as the signed series over set-valued tableaux.

    A tableau with m labels in total contributes (-1)^(m - |lam|) times its
    content monomial.
    """
    if len(lam) > n:
        raise ValueError(f"shape {lam.parts} has more rows than variables ({n})")
    base = lam.size()
    acc: dict[tuple[int, ...], int] = {}
    for t in enumerate_set_valued(lam, n):
        w = content(t, n)
        acc[w] = acc.get(w, 0) + (-1) ** (t.label_count() - base)
    return SparsePolynomial(n, acc)


# -- the greedy chain ---------------------------------------------------------


@lru_cache(maxsize=None)
def mu_chain(lam: Partition, n: int) -> MuChain:
    """Greedy chain of box additions, northmost qualifying row first.

    The loop stops only when no row in 1..n qualifies; the resulting top
    shape exhausts the degree range of the Grothendieck polynomial.
    """
    if len(lam) > n:
        raise ValueError(f"shape {lam.parts} has more rows than variables ({n})")
    mus = [lam]
    rows: list[int] = []
    while True:
        current = mus[-1]
        step_row = next(
            (
                r
                for r in range(1, n + 1)
                if current.part(r) - lam.part(r) < r - 1 and current.can_add_box(r)
            ),
            None,
        )
        if step_row is None:
            break
        mus.append(current.add_box(step_row))
        rows.append(step_row)
    return MuChain(lam=lam, n=n, mus=tuple(mus), rows=tuple(rows))


def witness_tableau(lam: Partition, n: int, k: int) -> Tableau:
    """A flagged skew filling of mu^(k)/lam certifying its nonzero coefficient.

    Boxes are labelled in chain order with the least label keeping rows and
    columns strict; the result is re-validated before being returned.
    """
    chain = mu_chain(lam, n)
    if not 0 <= k <= chain.length:
        raise ValueError(f"k must lie in 0..{chain.length}, got {k}")
    labels: dict[tuple[int, int], int] = {}
    for step in range(1, k + 1):
        r = chain.rows[step - 1]
        c = chain.mus[step - 1].part(r)  # 0-based column of the new box
        lo = 1
        if (r - 1, c - 1) in labels:
            lo = max(lo, labels[(r - 1, c - 1)] + 1)
        if (r - 2, c) in labels:
            lo = max(lo, labels[(r - 2, c)] + 1)
        labels[(r - 1, c)] = lo
    mu = chain.mus[k]
    entries = tuple(
        tuple(
            (labels[(r, c)],)
            for c in range(lam.part(r + 1), mu.part(r + 1))
        )
        for r in range(len(mu))
    )
    t = Tableau(outer=mu, inner=lam, entries=entries)
    if not is_valid_lenart(t, lam, mu, n):
        raise RuntimeError(f"witness construction failed for {lam.parts}, k={k}")
    return t


# -- dominance and majorization checks ----------------------------------------


def check_claim_a(lam: Partition, n: int) -> CheckResult:
    """Each chain shape dominates every same-size shape in the expansion,
    carries a nonzero coefficient itself, and nothing lives beyond the chain.
    """
    expansion = schur_expansion(lam, n)
    chain = mu_chain(lam, n)
    base = lam.size()
    for mu, _ in expansion.terms:
        k = mu.size() - base
        if k > chain.length:
            return CheckResult(False, f"coefficient at {mu.parts} beyond top degree")
        if not dominance_leq(mu, chain.mus[k]):
            return CheckResult(
                False, f"{mu.parts} not dominated by {chain.mus[k].parts} at k={k}"
            )
    for k, mu in enumerate(chain.mus):
        if expansion.coefficient(mu) == 0:
            return CheckResult(False, f"chain shape {mu.parts} missing at k={k}")
    return CheckResult(True)


def _random_convex_weights(rng: random.Random, count: int) -> tuple[Fraction, ...]:
    """Convex weights with denominator at most 10**4, never all zero."""
    scale = max(1, 10**4 // max(count, 1))
    raws = [rng.randint(0, scale) for _ in range(count)]
    if sum(raws) == 0:
        raws[rng.randrange(count)] = 1
    total = sum(raws)
    return tuple(Fraction(a, total) for a in raws)


def _random_point_in_permutahedron(
    rng: random.Random, weight: tuple[int, ...]
) -> RationalVector:
    """Exact rational point sampled as a convex mix of coordinate permutations."""
    spots = []
    for _ in range(rng.randint(1, 3)):
        shuffled = list(weight)
        rng.shuffle(shuffled)
        spots.append(tuple(shuffled))
    return convex_combination(_random_convex_weights(rng, len(spots)), spots)


def _weights_with_integer_moment(
    rng: random.Random, top: int
) -> tuple[tuple[Fraction, ...], int]:
    """Convex weights c_0..c_top whose index-average sum(k*c_k) is an integer.

    Random weights are drawn first; surplus fractional moment is then shed by
    shifting mass from high indices to index 0, which preserves convexity.
    """
    if top == 0:
        return (Fraction(1),), 0
    c = list(_random_convex_weights(rng, top + 1))
    moment = sum(k * c[k] for k in range(top + 1))
    target = int(moment)  # floor: moment is nonnegative
    excess = moment - target
    j = top
    while excess > 0:
        while c[j] == 0:
            j -= 1
        shift = min(c[j], excess / j)
        c[j] -= shift
        c[0] += shift
        excess -= shift * j
    return tuple(c), target


def check_claim_b(chain: MuChain, trials: int, seed: int) -> CheckResult:
    """Convex mixes of points drawn from the chain's permutahedra are majorized
    by the matching mix of the chain shapes themselves.
    """
    rng = random.Random(seed)
    padded = [mu.padded(chain.n) for mu in chain.mus]
    for trial in range(trials):
        points = [_random_point_in_permutahedron(rng, w) for w in padded]
        weights = _random_convex_weights(rng, chain.length + 1)
        mixed_point = convex_combination(weights, points)
        mixed_shape = convex_combination(weights, padded)
        if not majorizes(mixed_shape, mixed_point):
            return CheckResult(
                False,
                f"trial {trial}: point {mixed_point} escapes bound {mixed_shape}",
            )
    return CheckResult(True)


def check_claim_c(chain: MuChain, trials: int, seed: int) -> CheckResult:
    """A convex mix of chain shapes with integer surplus K is majorized by the
    K-th chain shape.
    """
    rng = random.Random(seed)
    padded = [mu.padded(chain.n) for mu in chain.mus]
    for trial in range(trials):
        weights, surplus = _weights_with_integer_moment(rng, chain.length)
        mixed_shape = convex_combination(weights, padded)
        if not majorizes(padded[surplus], mixed_shape):
            return CheckResult(
                False,
                f"trial {trial}: mix {mixed_shape} escapes chain shape at K={surplus}",
            )
    return CheckResult(True)


def check_lemmas_random(chain: MuChain, trials: int, seed: int) -> CheckResult:
    """Run the prefix-sum identities against seeded random convex weights."""
    rng = random.Random(seed)
    for trial in range(trials):
        weights = _random_convex_weights(rng, chain.length + 1)
        res = check_lemma_prefix_sums(chain, weights)
        if not res:
            return CheckResult(False, f"trial {trial}: {res.detail}")
    return CheckResult(True)


def check_lemma_prefix_sums(chain: MuChain, weights: Sequence) -> CheckResult:
    """Closed forms for prefix sums along the chain.

    First identity: for each row r, the weighted mix of chain shapes has
    prefix sum base + sum_k min(k, l)*c_k where l is the index of the last
    box placed in rows 1..r (the steps landing there form a prefix of the
    chain because the receiving rows weakly increase). Second identity: for
    r strictly north of the row receiving box k, the k-th shape's prefix sum
    is base + (b_1+...+b_r) with b_i the final surplus of row i.
    """
    coeffs = tuple(Fraction(w) for w in weights)
    if len(coeffs) != chain.length + 1:
        raise ValueError("one weight per chain shape required")
    if any(w < 0 for w in coeffs) or sum(coeffs) != 1:
        raise ValueError("weights must be convex")
    n = chain.n
    padded = [mu.padded(n) for mu in chain.mus]
    mixed = convex_combination(coeffs, padded)
    base_prefix = [0] * (n + 1)
    for r in range(1, n + 1):
        base_prefix[r] = base_prefix[r - 1] + chain.lam.part(r)
    surplus = chain.extra_boxes()
    for r in range(1, n + 1):
        last = max((i for i, row in enumerate(chain.rows, start=1) if row <= r), default=0)
        closed = base_prefix[r] + sum(
            min(k, last) * coeffs[k] for k in range(1, chain.length + 1)
        )
        direct = sum(mixed[:r], Fraction(0))
        if direct != closed:
            return CheckResult(
                False, f"mixed prefix sum at row {r}: {direct} != {closed}"
            )
    for k in range(1, chain.length + 1):
        for r in range(1, chain.rows[k - 1]):
            direct = sum(padded[k][:r])
            closed = base_prefix[r] + sum(surplus[:r])
            if direct != closed:
                return CheckResult(
                    False, f"chain prefix sum at k={k}, row {r}: {direct} != {closed}"
                )
    return CheckResult(True)
