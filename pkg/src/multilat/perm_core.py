"""Permutations under the weak Bruhat order, via inversion-set calculus.

A permutation on {1..k} is ordered by containment of its inversion set.
The inversion sets that occur are exactly the *clopen* subsets of the
k(k-1)/2 possible pairs, and joins/meets are computed by a closure
(resp. interior) operator on these sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import MultilatError

Pair = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..k} in one-line notation: images[i-1] = sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.images)
        if sorted(self.images) != list(range(1, k + 1)):
            raise MultilatError(f"not a permutation of 1..{k}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(i) = self(other(i))."""
        if self.size != other.size:
            raise MultilatError("size mismatch in composition")
        return Permutation(tuple(self(other(i)) for i in range(1, self.size + 1)))

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.images)


def identity(k: int) -> Permutation:
    return Permutation(tuple(range(1, k + 1)))


def adjacent_transposition(i: int, k: int) -> Permutation:
    """The exchange (i, i+1) on {1..k}."""
    images = list(range(1, k + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def parse_perm(text: str) -> Permutation:
    try:
        images = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise MultilatError(f"cannot parse permutation {text!r}") from exc
    return Permutation(images)


@dataclass(frozen=True)
class InversionSet:
    """A set of pairs a\\b with 1 <= a < b <= size."""

    size: int
    pairs: frozenset[Pair]

    def __post_init__(self) -> None:
        for a, b in self.pairs:
            if not 1 <= a < b <= self.size:
                raise MultilatError(f"bad inversion pair {a}\\{b} for size {self.size}")

    def complement(self) -> "InversionSet":
        return InversionSet(self.size, frozenset(all_pairs(self.size)) - self.pairs)

    def __le__(self, other: "InversionSet") -> bool:
        return self.pairs <= other.pairs

    def __str__(self) -> str:
        if not self.pairs:
            return "-"
        return ";".join(f"{a}\\{b}" for a, b in sorted(self.pairs))


def all_pairs(k: int) -> list[Pair]:
    return list(combinations(range(1, k + 1), 2))


def inv_set(k: int, pairs) -> InversionSet:
    return InversionSet(k, frozenset(pairs))


def full_inversions(k: int) -> InversionSet:
    return inv_set(k, all_pairs(k))


def parse_inv_set(k: int, text: str) -> InversionSet:
    if text == "-":
        return inv_set(k, ())
    pairs = []
    for chunk in text.split(";"):
        a, _, b = chunk.partition("\\")
        try:
            pairs.append((int(a), int(b)))
        except ValueError as exc:
            raise MultilatError(f"cannot parse inversion {chunk!r}") from exc
    return inv_set(k, pairs)


def inversions(sigma: Permutation) -> InversionSet:
    """The disagreements of sigma: pairs a < b with sigma^-1(a) > sigma^-1(b)."""
    inv = sigma.inverse()
    return inv_set(sigma.size, ((a, b) for a, b in all_pairs(sigma.size) if inv(a) > inv(b)))


def agreements(sigma: Permutation) -> InversionSet:
    return inversions(sigma).complement()


def closure(x: InversionSet) -> InversionSet:
    """Least superset closed under a\\b, b\\c => a\\c (fixpoint of one-step extension)."""
    pairs = set(x.pairs)
    while True:
        new = {
            (a, c)
            for (a, b) in pairs
            for (b2, c) in pairs
            if b == b2 and (a, c) not in pairs
        }
        if not new:
            return inv_set(x.size, pairs)
        pairs |= new


def interior(x: InversionSet) -> InversionSet:
    """Greatest open subset: the complement of the closure of the complement."""
    return closure(x.complement()).complement()


def is_closed(x: InversionSet) -> bool:
    return closure(x) == x


def is_open(x: InversionSet) -> bool:
    pairs = x.pairs
    for a, c in pairs:
        for b in range(a + 1, c):
            if (a, b) not in pairs and (b, c) not in pairs:
                return False
    return True


def is_clopen(x: InversionSet) -> bool:
    return is_open(x) and is_closed(x)


def clopen_to_perm(x: InversionSet) -> Permutation:
    """The unique permutation whose inversion set is the given clopen set.

    Peels off an adjacent inversion i\\i+1 (smallest i, for determinism),
    conjugates the rest by the exchange (i,i+1), and recurses.
    """
    if not is_clopen(x):
        raise MultilatError(f"not clopen: {x}")
    k = x.size
    exchanges: list[Permutation] = []
    pairs = set(x.pairs)
    while pairs:
        i = min(a for a, b in pairs if b == a + 1)
        sig = adjacent_transposition(i, k)
        pairs.discard((i, i + 1))
        pairs = {tuple(sorted((sig(a), sig(b)))) for a, b in pairs}
        exchanges.append(sig)
    sigma = identity(k)
    for sig in reversed(exchanges):
        sigma = sig.compose(sigma)
    return sigma


def _check_clopen_args(x: InversionSet, y: InversionSet) -> None:
    if x.size != y.size:
        raise MultilatError(f"size mismatch: {x.size} vs {y.size}")
    if not is_clopen(x) or not is_clopen(y):
        raise MultilatError("join/meet arguments must be clopen")


def perm_join(x: InversionSet, y: InversionSet) -> InversionSet:
    """Join in the weak Bruhat order: the closure of the union."""
    _check_clopen_args(x, y)
    return closure(inv_set(x.size, x.pairs | y.pairs))


def perm_meet(x: InversionSet, y: InversionSet) -> InversionSet:
    """Meet in the weak Bruhat order: the interior of the intersection."""
    _check_clopen_args(x, y)
    return interior(inv_set(x.size, x.pairs & y.pairs))


def all_perms(k: int):
    """All permutations of {1..k} in lexicographic one-line order."""
    for images in permutations(range(1, k + 1)):
        yield Permutation(images)
