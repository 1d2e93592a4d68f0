"""Explicit finite lattices: tables, irreducibles, congruences, pentagons,
and the SD_n(meet) equation machinery.

Elements are integer indices into a label list.  The order relation and
the join/meet tables are dense numpy arrays, which keeps exhaustive
triple scans fast enough at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InternalInconsistency, MultilatError, NotALattice

Quotient = tuple[int, int]  # (upper, lower) with lower <= upper


class FiniteLattice:
    """A finite lattice given by its cover relation.

    Construct through :meth:`from_covers`, which validates that the
    transitive closure of the covers is a lattice order.
    """

    def __init__(self, labels, leq, join, meet):
        self.labels: list[str] = list(labels)
        self.leq_table: np.ndarray = leq      # leq_table[i, j] == (i <= j)
        self.join_table: np.ndarray = join
        self.meet_table: np.ndarray = meet
        self._lower_covers = None
        self._upper_covers = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_covers(cls, covers, labels=None) -> "FiniteLattice":
        """Build and validate a lattice from (lower, upper) cover pairs.

        Pairs may use integer indices (with explicit ``labels``) or label
        strings, in which case the element set is inferred and sorted.
        """
        covers = list(covers)
        if labels is None:
            names = sorted({x for pair in covers for x in pair})
            index = {name: i for i, name in enumerate(names)}
            edges = [(index[lo], index[hi]) for lo, hi in covers]
            labels = [str(name) for name in names]
        else:
            edges = [(int(lo), int(hi)) for lo, hi in covers]
        n = len(labels)
        if n == 0:
            raise NotALattice("empty element set")

        leq = np.eye(n, dtype=bool)
        for lo, hi in edges:
            leq[lo, hi] = True
        while True:
            closed = leq @ leq
            if (closed <= leq).all():
                break
            leq |= closed
        asym = leq & leq.T & ~np.eye(n, dtype=bool)
        if asym.any():
            i, j = map(int, np.argwhere(asym)[0])
            raise NotALattice(f"cycle through {labels[i]} and {labels[j]}")

        bottoms = [i for i in range(n) if leq[:, i].sum() == 1]
        tops = [i for i in range(n) if leq[i, :].sum() == 1]
        if len(bottoms) != 1:
            raise NotALattice(f"{len(bottoms)} minimal elements: "
                              + ", ".join(labels[i] for i in bottoms))
        if len(tops) != 1:
            raise NotALattice(f"{len(tops)} maximal elements: "
                              + ", ".join(labels[i] for i in tops))

        # Any linear extension: fewer elements below comes first.
        topo = sorted(range(n), key=lambda i: (int(leq[:, i].sum()), i))
        rank = np.empty(n, dtype=np.int64)
        rank[topo] = np.arange(n)

        join = cls._bound_table(leq, rank, labels, upper=True)
        meet = cls._bound_table(leq, rank, labels, upper=False)
        return cls(labels, leq, join, meet)

    @staticmethod
    def _bound_table(leq, rank, labels, upper: bool) -> np.ndarray:
        n = len(labels)
        ge = leq if upper else leq.T  # ge[i] = candidates above (below) i
        order = rank if upper else (n - 1 - rank)
        table = np.empty((n, n), dtype=np.int64)
        big = n + 1
        for i in range(n):
            bounds = ge[i][None, :] & ge  # row j: common bounds of {i, j}
            keyed = np.where(bounds, order[None, :], big)
            cand = np.argmin(keyed, axis=1)
            ok = (bounds & ~ge[cand]).sum(axis=1) == 0
            if not ok.all():
                j = int(np.argmin(ok))
                kind = "least upper" if upper else "greatest lower"
                raise NotALattice(f"no {kind} bound for {labels[i]}, {labels[j]}")
            table[i] = cand
        return table

    # -- basic structure ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(self.n)

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq_table[i, j])

    def join(self, i: int, j: int) -> int:
        return int(self.join_table[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    @property
    def bottom(self) -> int:
        return int(np.argmax(self.leq_table.sum(axis=0) == 1))

    @property
    def top(self) -> int:
        return int(np.argmax(self.leq_table.sum(axis=1) == 1))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise MultilatError(f"unknown element {label!r}") from exc

    def _compute_covers(self) -> None:
        lt = self.leq_table & ~np.eye(self.n, dtype=bool)
        strict2 = lt @ lt
        cov = lt & ~strict2
        self._lower_covers = [list(map(int, np.flatnonzero(cov[:, j]))) for j in range(self.n)]
        self._upper_covers = [list(map(int, np.flatnonzero(cov[i, :]))) for i in range(self.n)]

    def lower_covers(self, i: int) -> list[int]:
        if self._lower_covers is None:
            self._compute_covers()
        return self._lower_covers[i]

    def upper_covers(self, i: int) -> list[int]:
        if self._upper_covers is None:
            self._compute_covers()
        return self._upper_covers[i]

    def cover_pairs(self) -> list[tuple[int, int]]:
        """(lower, upper) cover pairs, lexicographic by index."""
        return [(i, j) for i in self.elements() for j in self.upper_covers(i)]

    def dual(self) -> "FiniteLattice":
        """The order dual, sharing labels."""
        return FiniteLattice(self.labels, self.leq_table.T.copy(),
                             self.meet_table.copy(), self.join_table.copy())

    # -- irreducibles and arrow relations ----------------------------------

    def join_irreducibles(self) -> list[int]:
        return [i for i in self.elements() if len(self.lower_covers(i)) == 1]

    def meet_irreducibles(self) -> list[int]:
        return [i for i in self.elements() if len(self.upper_covers(i)) == 1]

    def j_star(self, j: int) -> int:
        (lower,) = self.lower_covers(j)
        return lower

    def m_star(self, m: int) -> int:
        (upper,) = self.upper_covers(m)
        return upper

    def arrow_up(self, j: int, m: int) -> bool:
        """j not below m, but below the unique upper cover of m."""
        return not self.le(j, m) and self.le(j, self.m_star(m))

    def arrow_down(self, m: int, j: int) -> bool:
        """j not below m, but its unique lower cover is."""
        return not self.le(j, m) and self.le(self.j_star(j), m)

    def bruteforce_ji(self) -> list[int]:
        return self.join_irreducibles()

    def bruteforce_mi(self) -> list[int]:
        return self.meet_irreducibles()

    def bruteforce_D(self) -> set[tuple[int, int]]:
        """Join dependency: j D j' iff j != j' and j up-arrow m down-arrow j'."""
        jis = self.join_irreducibles()
        mis = self.meet_irreducibles()
        rel = set()
        for j in jis:
            ups = [m for m in mis if self.arrow_up(j, m)]
            for j2 in jis:
                if j2 != j and any(self.arrow_down(m, j2) for m in ups):
                    rel.add((j, j2))
        return rel

    def bruteforce_D_dual(self) -> set[tuple[int, int]]:
        return self.dual().bruteforce_D()

    def kappa_of(self, j: int) -> int | None:
        """The unique m with j up-arrow m down-arrow j, if it exists."""
        found = [m for m in self.meet_irreducibles()
                 if self.arrow_up(j, m) and self.arrow_down(m, j)]
        return found[0] if len(found) == 1 else None

    def is_meet_semidistributive(self) -> bool:
        for j in self.join_irreducibles():
            hits = [m for m in self.meet_irreducibles()
                    if self.arrow_up(j, m) and self.arrow_down(m, j)]
            if len(hits) != 1:
                return False
        return True

    def is_join_semidistributive(self) -> bool:
        return self.dual().is_meet_semidistributive()

    def is_semidistributive(self) -> bool:
        return self.is_meet_semidistributive() and self.is_join_semidistributive()

    def is_bounded(self) -> bool:
        """Semidistributive with an acyclic join dependency relation."""
        if not self.is_semidistributive():
            return False
        return _is_acyclic(self.join_irreducibles(), self.bruteforce_D())

    def is_distributive(self) -> bool:
        """The distributive law on all triples, vectorized per x."""
        J, M = self.join_table, self.meet_table
        for x in self.elements():
            a = M[x]
            if not np.array_equal(a[J], J[a[:, None], a[None, :]]):
                return False
        return True

    # -- congruences --------------------------------------------------------

    def principal_congruence(self, u: int, w: int) -> tuple[frozenset[int], ...]:
        """Smallest congruence collapsing u and w.

        Closure of the generating pair under the translations t -> t v s,
        t -> t ^ s and transitivity, via union-find with a worklist.
        """
        parent = list(self.elements())

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a: int, b: int) -> bool:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[max(ra, rb)] = min(ra, rb)
            return True

        work = [(u, w)]
        union(u, w)
        while work:
            a, b = work.pop()
            for t in self.elements():
                for x, y in ((self.join(a, t), self.join(b, t)),
                             (self.meet(a, t), self.meet(b, t))):
                    if union(x, y):
                        work.append((x, y))
        return partition_from_find(self.n, find)

    def congruences(self) -> set[tuple[frozenset[int], ...]]:
        """All congruences: closure of the principal ones under join."""
        principals = {self.principal_congruence(u, w)
                      for u in self.elements() for w in self.elements() if u < w}
        equality = tuple(frozenset([i]) for i in self.elements())
        found = {equality} | principals
        frontier = set(principals)
        while frontier:
            new = set()
            for theta in frontier:
                for pc in principals:
                    joined = join_partitions(self.n, theta, pc)
                    if joined not in found:
                        found.add(joined)
                        new.add(joined)
            frontier = new
        return found

    def congruence_classes(self, theta: tuple[frozenset[int], ...]) -> int:
        return len(theta)

    def quotient_to_ji(self, x: int, y: int) -> int:
        """For a prime quotient y -< x, the minimal j with j v y = x.

        The result is join irreducible and j/j* transposes to x/y.
        """
        if y not in self.lower_covers(x):
            raise MultilatError(f"{self.labels[y]} -< {self.labels[x]} is not a prime quotient")
        cands = [z for z in self.elements() if self.join(z, y) == x]
        minimal = [z for z in cands
                   if not any(z2 != z and self.le(z2, z) for z2 in cands)]
        j = min(minimal)
        if len(self.lower_covers(j)) != 1:
            raise InternalInconsistency("minimal complement is not join irreducible")
        return j

    # -- pentagons -----------------------------------------------------------

    def pentagon_search(self, nondegenerate_only: bool = True) -> list["Pentagon"]:
        out = []
        for a in self.elements():
            for b in self.elements():
                if not self.le(b, a) or (nondegenerate_only and a == b):
                    continue
                for c in self.elements():
                    if self.join(a, c) == self.join(b, c) and \
                       self.meet(a, c) == self.meet(b, c):
                        out.append(Pentagon(self, a, b, c))
        return out

    def pentagon_descend(self, pent: "Pentagon", a1: int, b1: int) -> Quotient:
        """A prime quotient u/w in [0_N, b_N] whose congruence collapses (a1, b1)."""
        if not (self.le(pent.b, b1) and self.le(a1, pent.a)
                and b1 in self.lower_covers(a1)):
            raise MultilatError("need a prime quotient inside the central quotient")
        return self._prime_quotient_collapsing((a1, b1), pent.zero, pent.b)

    def _prime_quotient_collapsing(self, target: tuple[int, int],
                                   lo: int, hi: int) -> Quotient:
        """Lex-least prime quotient u/w with lo <= w -< u <= hi collapsing target."""
        a1, b1 = target
        for w in self.elements():
            if not (self.le(lo, w) and self.le(w, hi)):
                continue
            for u in self.upper_covers(w):
                if not self.le(u, hi):
                    continue
                theta = self.principal_congruence(u, w)
                if _same_block(theta, a1, b1):
                    return (u, w)
        raise InternalInconsistency(
            f"no prime quotient in [{self.labels[lo]}, {self.labels[hi]}] "
            f"collapses ({self.labels[a1]}, {self.labels[b1]})")

    # -- SD_n machinery ------------------------------------------------------

    def sd_eval(self, x: int, y: int, z: int, n: int) -> "SdTrace":
        """The y/z sequences up to index n for one triple, with the verdict."""
        if n < 0:
            raise MultilatError("n must be >= 0")
        y_seq, z_seq = [y], [z]
        mu = None
        k = 0
        while True:
            y_next = self.join(y, self.meet(x, z_seq[k]))
            z_next = self.join(z, self.meet(x, y_seq[k]))
            if mu is None and y_next == y_seq[k] and z_next == z_seq[k]:
                mu = k + 1
            y_seq.append(y_next)
            z_seq.append(z_next)
            k += 1
            if k >= n and mu is not None:
                break
        x_seq = [self.join(self.meet(x, y_seq[k - 1]), self.meet(x, z_seq[k - 1]))
                 for k in range(1, n + 1)]
        holds = self.meet(x, y_seq[n]) == self.meet(x, self.join(y, z))
        return SdTrace(self, x, y, z, tuple(y_seq[: n + 1]), tuple(z_seq[: n + 1]),
                       tuple(x_seq), mu, holds)

    def sd_holds(self, n: int):
        """True if SD_n(meet) holds for all triples, else the first failing triple.

        Iterates x in index order; within an x-slice the least (y, z) is
        reported, so the witness is deterministic.
        """
        J, M = self.join_table, self.meet_table
        for x in self.elements():
            yk = np.arange(self.n)[:, None] * np.ones(self.n, dtype=np.int64)[None, :]
            zk = np.arange(self.n)[None, :] * np.ones(self.n, dtype=np.int64)[:, None]
            y0, z0 = yk.copy(), zk.copy()
            for _ in range(n):
                yk, zk = J[y0, M[x, zk]], J[z0, M[x, yk]]
            rhs = M[x, J[y0, z0]]
            bad = M[x, yk] != rhs
            if bad.any():
                ys, zs = np.argwhere(bad)[0]
                return (x, int(ys), int(zs))
        return True

    def sd_mu(self) -> int:
        """max over triples of the least n with y_{n-1} = y_n and z_{n-1} = z_n."""
        J, M = self.join_table, self.meet_table
        worst = 1
        for x in self.elements():
            y0 = np.arange(self.n)[:, None] * np.ones(self.n, dtype=np.int64)[None, :]
            z0 = y0.T.copy()
            yk, zk = y0, z0
            k = 0
            unstable = np.ones((self.n, self.n), dtype=bool)
            while unstable.any():
                yn, zn = J[y0, M[x, zk]], J[z0, M[x, yk]]
                k += 1
                unstable = (yn != yk) | (zn != zk)
                if unstable.any():
                    worst = max(worst, k + 1)
                yk, zk = yn, zn
        return worst

    def dpath_from_sd_failure(self, x: int, y: int, z: int, n: int) -> list[int]:
        """Extract a simple D-path of length n from an SD_n(meet) failure.

        Walks the chain of (possibly swapped) pentagons built from the y/z
        sequences, descending through prime quotients, and converts each
        quotient to a join irreducible.  Returns the irreducibles from the
        top of the chain down, so consecutive entries are D-related.
        """
        if not self.is_meet_semidistributive():
            raise MultilatError("lattice is not meet semidistributive")
        trace = self.sd_eval(x, y, z, n)
        if trace.holds:
            raise MultilatError(f"triple is not an SD_{n} failure")

        seqs = {"y": trace.y_seq, "z": trace.z_seq}
        xk = (None,) + trace.x_seq  # xk[k] defined for k >= 1

        def central(side: str, k: int) -> tuple[int, int]:
            return (self.meet(x, seqs[side][k]), xk[k])  # (top, bottom)

        side = "y"
        if central("y", n)[0] == central("y", n)[1]:
            side = "z"
            if central("z", n)[0] == central("z", n)[1]:
                raise InternalInconsistency("both terminal pentagons degenerate")

        quots: dict[int, Quotient] = {}
        hi, lo = central(side, n)
        quots[n] = self._first_prime_quotient(lo, hi)
        for k in range(n, 0, -1):
            other = "z" if side == "y" else "y"
            # descend inside pentagon P_k to the interval [x ^ s_{k-1}, x_k]
            u, w = quots[k]
            lo_k = self.meet(x, seqs[side][k - 1])
            u1, w1 = self._prime_quotient_collapsing((u, w), lo_k, xk[k])
            if k == 1:
                quots[0] = (u1, w1)
            else:
                hi2, lo2 = central(other, k - 1)
                quots[k - 1] = self._prime_quotient_collapsing((u1, w1), lo2, hi2)
            side = other

        path = [self.quotient_to_ji(u, w) for u, w in
                (quots[i] for i in range(n, -1, -1))]
        if len(set(path)) != len(path):
            raise InternalInconsistency("extracted D-path is not simple")
        return path

    def _first_prime_quotient(self, lo: int, hi: int) -> Quotient:
        for w in self.elements():
            if not (self.le(lo, w) and self.le(w, hi)):
                continue
            for u in self.upper_covers(w):
                if self.le(u, hi):
                    return (u, w)
        raise InternalInconsistency(
            f"interval [{self.labels[lo]}, {self.labels[hi]}] has no prime quotient")

    # -- export --------------------------------------------------------------

    def to_dot(self, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i in self.elements():
            lines.append(f'  "{self.labels[i]}";')
        for lo, hi in self.cover_pairs():
            lines.append(f'  "{self.labels[lo]}" -> "{self.labels[hi]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_cover_file(self) -> str:
        return "".join(f"{self.labels[lo]}<{self.labels[hi]}\n"
                       for lo, hi in self.cover_pairs())


@dataclass(frozen=True)
class Pentagon:
    """Elements b <= a and c with a v c = b v c and a ^ c = b ^ c."""

    lattice: FiniteLattice = field(repr=False)
    a: int
    b: int
    c: int

    @property
    def one(self) -> int:
        return self.lattice.join(self.a, self.c)

    @property
    def zero(self) -> int:
        return self.lattice.meet(self.a, self.c)

    @property
    def nondegenerate(self) -> bool:
        return self.a != self.b


@dataclass(frozen=True)
class SdTrace:
    """The sequences behind one SD_n(meet) evaluation."""

    lattice: FiniteLattice = field(repr=False)
    x: int
    y: int
    z: int
    y_seq: tuple[int, ...]
    z_seq: tuple[int, ...]
    x_seq: tuple[int, ...]
    mu: int
    holds: bool


def partition_from_find(n: int, find) -> tuple[frozenset[int], ...]:
    blocks: dict[int, set[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), set()).add(i)
    return tuple(sorted((frozenset(b) for b in blocks.values()), key=min))


def join_partitions(n: int, p1, p2) -> tuple[frozenset[int], ...]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for part in (p1, p2):
        for block in part:
            items = sorted(block)
            for a, b in zip(items, items[1:]):
                parent[find(a)] = find(b)
    return partition_from_find(n, find)


def _same_block(theta, a: int, b: int) -> bool:
    return any(a in block and b in block for block in theta)


def _is_acyclic(nodes, edges) -> bool:
    succ: dict[int, list[int]] = {v: [] for v in nodes}
    for a, b in edges:
        succ[a].append(b)
    color = {v: 0 for v in nodes}

    def visit(v: int) -> bool:
        color[v] = 1
        for w in succ[v]:
            if color[w] == 1 or (color[w] == 0 and not visit(w)):
                return False
        color[v] = 2
        return True

    for v in nodes:
        if color[v] == 0 and not visit(v):
            return False
    return True


# -- fixtures ----------------------------------------------------------------

def chain(n: int) -> FiniteLattice:
    """The n-element chain c0 < c1 < ... (n >= 1)."""
    if n < 1:
        raise MultilatError("chain needs at least one element")
    width = len(str(n - 1))
    labels = [f"c{i:0{width}d}" for i in range(n)]
    return FiniteLattice.from_covers(
        [(i, i + 1) for i in range(n - 1)], labels=labels)


def boolean_lattice(n: int) -> FiniteLattice:
    """The Boolean lattice of subsets of {0..n-1}."""
    labels = [format(s, f"0{max(n, 1)}b") for s in range(1 << n)]
    covers = [(s, s | (1 << b))
              for s in range(1 << n) for b in range(n) if not s & (1 << b)]
    return FiniteLattice.from_covers(covers, labels=labels)


def m3() -> FiniteLattice:
    return FiniteLattice.from_covers(
        [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")])


def n5() -> FiniteLattice:
    return FiniteLattice.from_covers(
        [("0", "b"), ("b", "a"), ("a", "1"), ("0", "c"), ("c", "1")])


def benzene() -> FiniteLattice:
    """The hexagon: the permutations of {1,2,3} under the weak Bruhat order."""
    return FiniteLattice.from_covers(
        [("123", "213"), ("123", "132"), ("213", "231"),
         ("132", "312"), ("231", "321"), ("312", "321")])


FIXTURES = {
    "n5": n5,
    "m3": m3,
    "benzene": benzene,
}


def parse_cover_file(text: str) -> FiniteLattice:
    """Cover-list format: one 'lower<upper' per line, '#' starts a comment."""
    covers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lo, sep, hi = line.partition("<")
        if not sep or not lo or not hi:
            raise MultilatError(f"line {lineno}: expected 'lower<upper', got {raw!r}")
        covers.append((lo.strip(), hi.strip()))
    return FiniteLattice.from_covers(covers)
