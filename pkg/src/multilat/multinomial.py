"""Multinomial lattices: words with prescribed letter multiplicities.

Elements of L(v) are words over {1..n} in which letter i occurs v[i]
times, ordered by the rewrite a_i a_j -> a_j a_i for i < j.  Joins and
meets are computed through the order embedding into the permutations
of {1..k} (k = sum of multiplicities) and the clopen-set calculus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from . import perm_core
from .errors import CapExceeded, MultilatError
from .perm_core import InversionSet, Permutation

DEFAULT_K_CAP = 10
DEFAULT_SIZE_CAP = 5000

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class MultVector:
    """The multiplicity vector v defining L(v)."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise MultilatError("multiplicity vector must be non-empty")
        if any(e < 0 for e in self.entries):
            raise MultilatError(f"negative multiplicity in {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def k(self) -> int:
        return sum(self.entries)

    @property
    def dimension(self) -> int:
        return sum(1 for e in self.entries if e > 0)

    def support(self) -> tuple[int, ...]:
        """Letters with positive multiplicity, ascending."""
        return tuple(i for i, e in enumerate(self.entries, start=1) if e > 0)

    def size(self) -> int:
        """Number of elements of L(v): the multinomial coefficient."""
        return math.factorial(self.k) // reduce(
            lambda acc, e: acc * math.factorial(e), self.entries, 1
        )

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)


def parse_vector(text: str) -> MultVector:
    try:
        return MultVector(tuple(int(part) for part in text.split(",")))
    except ValueError as exc:
        raise MultilatError(f"cannot parse multiplicity vector {text!r}") from exc


@dataclass(frozen=True)
class PathWord:
    """A word in L(v): letters over {1..n} with the letter counts of v."""

    parent: MultVector
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = [0] * self.parent.n
        for letter in self.letters:
            if not 1 <= letter <= self.parent.n:
                raise MultilatError(f"letter {letter} out of range for v={self.parent}")
            counts[letter - 1] += 1
        if tuple(counts) != self.parent.entries:
            raise MultilatError(
                f"letter counts {tuple(counts)} do not match v={self.parent}"
            )

    def __str__(self) -> str:
        return word_str(self)

    def __lt__(self, other: "PathWord") -> bool:
        return self.letters < other.letters


def word_str(w: PathWord) -> str:
    if w.parent.n <= 26:
        return "".join(_ALPHABET[letter - 1] for letter in w.letters)
    return " ".join(str(letter) for letter in w.letters)


def parse_word(v: MultVector, text: str) -> PathWord:
    if v.n <= 26:
        letters = []
        for ch in text:
            idx = _ALPHABET.find(ch)
            if idx < 0:
                raise MultilatError(f"bad letter {ch!r} in word {text!r}")
            letters.append(idx + 1)
    else:
        try:
            letters = [int(part) for part in text.split()]
        except ValueError as exc:
            raise MultilatError(f"cannot parse word {text!r}") from exc
    return PathWord(v, tuple(letters))


def bottom(v: MultVector) -> PathWord:
    return PathWord(v, tuple(i for i in range(1, v.n + 1) for _ in range(v.entries[i - 1])))


def top(v: MultVector) -> PathWord:
    return PathWord(v, tuple(i for i in range(v.n, 0, -1) for _ in range(v.entries[i - 1])))


def enumerate_words(v: MultVector, cap: int = DEFAULT_K_CAP):
    """All words of L(v) in lexicographic order."""
    if v.k > cap:
        raise CapExceeded(f"k={v.k} exceeds enumeration cap {cap}")

    def rec(remaining: list[int], prefix: list[int]):
        if not any(remaining):
            yield PathWord(v, tuple(prefix))
            return
        for letter in range(1, v.n + 1):
            if remaining[letter - 1] > 0:
                remaining[letter - 1] -= 1
                prefix.append(letter)
                yield from rec(remaining, prefix)
                prefix.pop()
                remaining[letter - 1] += 1

    yield from rec(list(v.entries), [])


def pi(w: PathWord, l: int, m: int) -> PathWord:
    """Project onto letters l < m, relabelled to the 2-letter alphabet."""
    v = w.parent
    if not 1 <= l < m <= v.n:
        raise MultilatError(f"bad projection indices ({l},{m}) for n={v.n}")
    sub = MultVector((v.entries[l - 1], v.entries[m - 1]))
    return PathWord(sub, tuple(1 if c == l else 2 for c in w.letters if c in (l, m)))


def _leq2(w: PathWord, u: PathWord) -> bool:
    """Pointwise path comparison in a 2-letter lattice."""
    cw = cu = 0
    for lw, lu in zip(w.letters, u.letters):
        cw += lw == 2
        cu += lu == 2
        if cw > cu:
            return False
    return True


def leq(w: PathWord, u: PathWord) -> bool:
    """w <= u iff every 2-letter projection of w is below that of u."""
    if w.parent != u.parent:
        raise MultilatError("cannot compare words with different parents")
    n = w.parent.n
    return all(_leq2(pi(w, l, m), pi(u, l, m)) for l in range(1, n) for m in range(l + 1, n + 1))


def covers(w: PathWord) -> list[PathWord]:
    """Upper covers: one swap of adjacent letters a_i a_j with i < j."""
    out = []
    letters = list(w.letters)
    for p in range(len(letters) - 1):
        if letters[p] < letters[p + 1]:
            swapped = letters[:]
            swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
            out.append(PathWord(w.parent, tuple(swapped)))
    return out


def mu_star(v: MultVector) -> tuple[int, ...]:
    """The non-decreasing word of L(v), as a function {1..k} -> {1..n}."""
    return bottom(v).letters


def iota(w: PathWord) -> Permutation:
    """The unique permutation with w = mu_star o sigma, increasing on each fiber."""
    v = w.parent
    offsets = [0] * (v.n + 1)
    for i in range(1, v.n):
        offsets[i + 1] = offsets[i] + v.entries[i - 1]
    seen = [0] * (v.n + 1)
    images = []
    for letter in w.letters:
        seen[letter] += 1
        images.append(offsets[letter] + seen[letter])
    return Permutation(tuple(images))


def iota_inv(v: MultVector, sigma: Permutation) -> PathWord:
    """Left inverse of iota; rejects permutations outside the embedded ideal."""
    if sigma.size != v.k:
        raise MultilatError(f"permutation size {sigma.size} != k={v.k}")
    mu = mu_star(v)
    letters = tuple(mu[sigma(j) - 1] for j in range(1, v.k + 1))
    w = PathWord(v, letters)
    if iota(w) != sigma:
        raise MultilatError(f"permutation {sigma} is not in the image of L({v})")
    return w


def word_inversions(w: PathWord) -> InversionSet:
    return perm_core.inversions(iota(w))


def _check_same_parent(w: PathWord, u: PathWord) -> None:
    if w.parent != u.parent:
        raise MultilatError("mismatched parents")


def mjoin(w: PathWord, u: PathWord) -> PathWord:
    _check_same_parent(w, u)
    x = perm_core.perm_join(word_inversions(w), word_inversions(u))
    return iota_inv(w.parent, perm_core.clopen_to_perm(x))


def mmeet(w: PathWord, u: PathWord) -> PathWord:
    _check_same_parent(w, u)
    x = perm_core.perm_meet(word_inversions(w), word_inversions(u))
    return iota_inv(w.parent, perm_core.clopen_to_perm(x))


def to_finite_lattice(v: MultVector, cap: int = DEFAULT_SIZE_CAP):
    """Materialize L(v) as an explicit lattice with join/meet tables."""
    from .finite_lattice import FiniteLattice

    size = v.size()
    if size > cap:
        raise CapExceeded(f"|L({v})| = {size} exceeds materialization cap {cap}")
    words = list(enumerate_words(v, cap=v.k))
    index = {w: i for i, w in enumerate(words)}
    cover_pairs = [
        (index[w], index[u]) for w in words for u in covers(w)
    ]
    return FiniteLattice.from_covers(cover_pairs, labels=[word_str(w) for w in words])
