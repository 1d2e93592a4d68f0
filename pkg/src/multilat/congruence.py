"""Congruences of L(v) via D-closed sets of join irreducibles.

A congruence is described by the set S of join irreducibles it does not
collapse; S must be closed under following join-dependency edges.  Two
words are equivalent exactly when they dominate the same members of S.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import irreducibles, multinomial
from .errors import CapExceeded, MultilatError
from .finite_lattice import FiniteLattice
from .irreducibles import IrrVector, d_graph, ji_word
from .multinomial import MultVector, PathWord, leq, mjoin, mmeet, word_str


@dataclass(frozen=True)
class JiSet:
    """A D-closed set of join irreducibles of L(v)."""

    parent: MultVector
    members: frozenset[IrrVector]

    def __post_init__(self) -> None:
        for j in self.members:
            if j.parent != self.parent or j.kind != irreducibles.JOIN:
                raise MultilatError("JiSet members must be join irreducibles of the parent")
            if j.degenerate:
                raise MultilatError("JiSet members must be non-degenerate")

    def is_d_closed(self) -> bool:
        return all(
            k in self.members
            for j in self.members
            for k in irreducibles.enumerate_ji(self.parent)
            if irreducibles.d_rel(j, k)
        )

    def __str__(self) -> str:
        return ";".join(str(j) for j in sorted(self.members, key=lambda j: j.x))


def parse_ji_set(v: MultVector, text: str) -> JiSet:
    if text == "-" or not text:
        return JiSet(v, frozenset())
    members = frozenset(
        irreducibles.parse_irr_vector(v, chunk) for chunk in text.split(";"))
    return JiSet(v, members)


@dataclass(frozen=True)
class Partition:
    """A partition of the words of L(v) into blocks."""

    parent: MultVector
    blocks: tuple[frozenset[PathWord], ...]

    def block_of(self, w: PathWord) -> frozenset[PathWord]:
        for block in self.blocks:
            if w in block:
                return block
        raise MultilatError(f"word {word_str(w)} not covered by the partition")

    def to_json(self) -> str:
        return json.dumps(
            {"v": list(self.parent.entries),
             "blocks": [sorted(word_str(w) for w in block) for block in self.blocks]},
            indent=2)


DEFAULT_JI_CAP = 24


def d_closed_sets(v: MultVector, cap: int = DEFAULT_JI_CAP) -> list[JiSet]:
    """All D-closed sets of join irreducibles, i.e. all congruences.

    Enumerated as forward-closed vertex sets of the (acyclic) D-graph:
    nodes are taken in reverse topological order and a node may join a
    set only once all of its direct successors are present.
    """
    graph = d_graph(v)
    m = len(graph.nodes)
    if m > cap:
        raise CapExceeded(f"{m} join irreducibles exceed cap {cap}")
    succ: dict[int, set[int]] = {i: set() for i in range(m)}
    for s, t, _ in graph.edges:
        succ[s].add(t)
    order: list[int] = []
    seen: set[int] = set()

    def visit(i: int) -> None:
        if i in seen:
            return
        seen.add(i)
        for t in sorted(succ[i]):
            visit(t)
        order.append(i)  # successors first

    for i in range(m):
        visit(i)
    sets: list[frozenset[int]] = [frozenset()]
    for node in order:
        sets.extend([s | {node} for s in sets if succ[node] <= s])
    return [JiSet(v, frozenset(graph.nodes[i] for i in s)) for s in sets]


def congruence_from_S(v: MultVector, s: JiSet, verify: bool = True) -> Partition:
    """Partition of L(v) where words agree on their dominated members of S."""
    if s.parent != v:
        raise MultilatError("JiSet parent mismatch")
    if not s.is_d_closed():
        raise MultilatError(f"set {{{s}}} is not closed under the join dependency")
    words = list(multinomial.enumerate_words(v))
    member_words = {j: ji_word(j) for j in s.members}
    keyed: dict[frozenset, list[PathWord]] = {}
    for w in words:
        key = frozenset(j for j, jw in member_words.items() if leq(jw, w))
        keyed.setdefault(key, []).append(w)
    partition = Partition(
        v, tuple(sorted((frozenset(b) for b in keyed.values()),
                        key=lambda b: min(b).letters)))
    if verify:
        _verify_congruence(partition, words)
    return partition


def _verify_congruence(p: Partition, words: list[PathWord]) -> None:
    block_id = {w: i for i, block in enumerate(p.blocks) for w in block}
    for block in p.blocks:
        rep, *rest = sorted(block)
        for other in rest:
            for t in words:
                if block_id[mjoin(rep, t)] != block_id[mjoin(other, t)] or \
                   block_id[mmeet(rep, t)] != block_id[mmeet(other, t)]:
                    raise MultilatError(
                        f"relation is not compatible: blocks of {word_str(rep)} and "
                        f"{word_str(other)} split under {word_str(t)}")


def quotient(v: MultVector, s: JiSet) -> FiniteLattice:
    """The quotient lattice on the blocks of congruence_from_S."""
    p = congruence_from_S(v, s)
    block_id = {w: i for i, block in enumerate(p.blocks) for w in block}
    labels = ["{" + ",".join(sorted(word_str(w) for w in block)) + "}"
              for block in p.blocks]
    nblocks = len(p.blocks)
    below = [[False] * nblocks for _ in range(nblocks)]
    for i in range(nblocks):
        below[i][i] = True
    for w in block_id:
        for u in multinomial.covers(w):
            below[block_id[w]][block_id[u]] = True
    # transitive closure, then strip to covers
    for mid in range(nblocks):
        for i in range(nblocks):
            if below[i][mid]:
                for j in range(nblocks):
                    if below[mid][j]:
                        below[i][j] = True
    covers = []
    for i in range(nblocks):
        for j in range(nblocks):
            if i != j and below[i][j] and not any(
                    mid != i and mid != j and below[i][mid] and below[mid][j]
                    for mid in range(nblocks)):
                covers.append((i, j))
    return FiniteLattice.from_covers(covers, labels=labels)


def check_parikh_connectivity(p: Partition) -> bool:
    """Every block connected under single adjacent-transposition steps."""
    for block in p.blocks:
        if len(block) == 1:
            continue
        words = set(block)
        start = next(iter(sorted(words)))
        frontier = [start]
        reached = {start}
        while frontier:
            w = frontier.pop()
            for u in _adjacent_swaps(w):
                if u in words and u not in reached:
                    reached.add(u)
                    frontier.append(u)
        if reached != words:
            return False
    return True


def _adjacent_swaps(w: PathWord) -> list[PathWord]:
    out = []
    letters = list(w.letters)
    for p in range(len(letters) - 1):
        if letters[p] != letters[p + 1]:
            swapped = letters[:]
            swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
            out.append(PathWord(w.parent, tuple(swapped)))
    return out


def ji_set_to_json(s: JiSet) -> str:
    return json.dumps({"v": list(s.parent.entries),
                       "S": sorted(list(j.x) for j in s.members)})
