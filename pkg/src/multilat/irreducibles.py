"""Join/meet irreducible elements of L(v) and the explicit join dependency.

A join irreducible of L(v) is a word with a single descent, encoded by
the vector of letter counts before the descent.  The join dependency
relation between two such vectors reduces to a local comparison on
their principal plans, which makes the whole D-graph cheap to build.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from math import prod

from .errors import MultilatError
from .multinomial import MultVector, PathWord, bottom, top, word_str

JOIN = "join"
MEET = "meet"


@dataclass(frozen=True)
class IrrVector:
    """Vector encoding of a join irreducible <x> or meet irreducible [x]."""

    parent: MultVector
    x: tuple[int, ...]
    kind: str = JOIN

    def __post_init__(self) -> None:
        if self.kind not in (JOIN, MEET):
            raise MultilatError(f"bad kind {self.kind!r}")
        if len(self.x) != self.parent.n:
            raise MultilatError(f"vector length {len(self.x)} != n={self.parent.n}")
        if any(not 0 <= xi <= vi for xi, vi in zip(self.x, self.parent.entries)):
            raise MultilatError(f"vector {self.x} outside [0, {self.parent}]")

    @property
    def degenerate(self) -> bool:
        lo, hi = _plan_or_none(self)
        return lo is None or hi is None or not lo < hi

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.x)


def parse_irr_vector(v: MultVector, text: str, kind: str = JOIN) -> IrrVector:
    try:
        return IrrVector(v, tuple(int(part) for part in text.split(",")), kind)
    except ValueError as exc:
        raise MultilatError(f"cannot parse irreducible vector {text!r}") from exc


def _plan_or_none(j: IrrVector):
    v = j.parent.entries
    if j.kind == JOIN:
        lows = [i for i in range(1, j.parent.n + 1) if j.x[i - 1] < v[i - 1]]
        highs = [i for i in range(1, j.parent.n + 1) if j.x[i - 1] > 0]
    else:
        lows = [i for i in range(1, j.parent.n + 1) if j.x[i - 1] > 0]
        highs = [i for i in range(1, j.parent.n + 1) if j.x[i - 1] < v[i - 1]]
    return (min(lows) if lows else None, max(highs) if highs else None)


def principal_plan(j: IrrVector) -> tuple[int, int]:
    lo, hi = _plan_or_none(j)
    if lo is None or hi is None or not lo < hi:
        raise MultilatError(f"degenerate vector {j.x} has no principal plan")
    return (lo, hi)


def enumerate_ji(v: MultVector) -> list[IrrVector]:
    """All join irreducibles of L(v), lexicographic on the vector."""
    out = []
    for x in product(*(range(e + 1) for e in v.entries)):
        cand = IrrVector(v, x, JOIN)
        if not cand.degenerate:
            out.append(cand)
    return out


def enumerate_mi(v: MultVector) -> list[IrrVector]:
    out = []
    for x in product(*(range(e + 1) for e in v.entries)):
        cand = IrrVector(v, x, MEET)
        if not cand.degenerate:
            out.append(cand)
    return out


def count_ji(v: MultVector) -> int:
    """Closed formula: prod(v_i + 1) - (1 + sum(v_i))."""
    return prod(e + 1 for e in v.entries) - (1 + v.k)


def ji_word(j: IrrVector) -> PathWord:
    """The single-descent word a1^x1..an^xn a1^(v1-x1)..an^(vn-xn)."""
    if j.kind != JOIN:
        raise MultilatError("ji_word expects a join-kind vector")
    if j.degenerate:
        return bottom(j.parent)
    letters = []
    for i in range(1, j.parent.n + 1):
        letters.extend([i] * j.x[i - 1])
    for i in range(1, j.parent.n + 1):
        letters.extend([i] * (j.parent.entries[i - 1] - j.x[i - 1]))
    return PathWord(j.parent, tuple(letters))


def mi_word(j: IrrVector) -> PathWord:
    """The single-ascent word an^xn..a1^x1 an^(vn-xn)..a1^(v1-x1)."""
    if j.kind != MEET:
        raise MultilatError("mi_word expects a meet-kind vector")
    if j.degenerate:
        return top(j.parent)
    letters = []
    for i in range(j.parent.n, 0, -1):
        letters.extend([i] * j.x[i - 1])
    for i in range(j.parent.n, 0, -1):
        letters.extend([i] * (j.parent.entries[i - 1] - j.x[i - 1]))
    return PathWord(j.parent, tuple(letters))


def parse_ji_word(w: PathWord) -> IrrVector:
    """Recover the vector from a word with exactly one descent."""
    descents = [p for p in range(len(w.letters) - 1) if w.letters[p] > w.letters[p + 1]]
    if len(descents) != 1:
        raise MultilatError(f"word {word_str(w)} has {len(descents)} descents, expected 1")
    prefix = w.letters[: descents[0] + 1]
    x = [0] * w.parent.n
    for letter in prefix:
        x[letter - 1] += 1
    return IrrVector(w.parent, tuple(x), JOIN)


def parse_mi_word(w: PathWord) -> IrrVector:
    ascents = [p for p in range(len(w.letters) - 1) if w.letters[p] < w.letters[p + 1]]
    if len(ascents) != 1:
        raise MultilatError(f"word {word_str(w)} has {len(ascents)} ascents, expected 1")
    prefix = w.letters[: ascents[0] + 1]
    x = [0] * w.parent.n
    for letter in prefix:
        x[letter - 1] += 1
    return IrrVector(w.parent, tuple(x), MEET)


def _check_pair(a: IrrVector, b: IrrVector) -> None:
    if a.parent != b.parent:
        raise MultilatError("mismatched parents")


def arrow_up(j: IrrVector, m: IrrVector) -> bool:
    """<x> up-arrow [y]: local comparison on the plan (c,d) of [y]."""
    _check_pair(j, m)
    if j.kind != JOIN or m.kind != MEET:
        raise MultilatError("arrow_up expects (join, meet)")
    c, d = principal_plan(m)
    x, y = j.x, m.x
    return (y[c - 1] == x[c - 1] + 1 and y[d - 1] == x[d - 1] - 1
            and all(x[i - 1] == y[i - 1] for i in range(c + 1, d)))


def arrow_down(m: IrrVector, j: IrrVector) -> bool:
    """[y] down-arrow <x>: local comparison on the plan (a,b) of <x>."""
    _check_pair(m, j)
    if j.kind != JOIN or m.kind != MEET:
        raise MultilatError("arrow_down expects (meet, join)")
    a, b = principal_plan(j)
    x, y = j.x, m.x
    return (x[a - 1] == y[a - 1] - 1 and x[b - 1] == y[b - 1] + 1
            and all(x[i - 1] == y[i - 1] for i in range(a + 1, b)))


def kappa(j: IrrVector) -> IrrVector:
    """The unique [y] with <x> up-arrow [y] down-arrow <x>."""
    a, b = principal_plan(j)
    v = j.parent.entries
    y = list(j.x)
    y[a - 1] += 1
    y[b - 1] -= 1
    for i in range(1, a):
        y[i - 1] = 0
    for i in range(b + 1, j.parent.n + 1):
        y[i - 1] = v[i - 1]
    return IrrVector(j.parent, tuple(y), MEET)


def kappa_d(m: IrrVector) -> IrrVector:
    """The unique <x> with [y] down-arrow <x> up-arrow [y]."""
    c, d = principal_plan(m)
    v = m.parent.entries
    x = list(m.x)
    x[c - 1] -= 1
    x[d - 1] += 1
    for i in range(1, c):
        x[i - 1] = v[i - 1]
    for i in range(d + 1, m.parent.n + 1):
        x[i - 1] = 0
    return IrrVector(m.parent, tuple(x), JOIN)


def dbullet(j: IrrVector, k: IrrVector) -> bool:
    """The explicit reflexive-transitive join dependency between <x> and <z>."""
    _check_pair(j, k)
    if j.kind != JOIN or k.kind != JOIN:
        raise MultilatError("dbullet expects join-kind vectors")
    a, b = principal_plan(j)
    e, f = principal_plan(k)
    if not (a <= e and f <= b):
        return False
    x, z = j.x, k.x
    if any(x[i - 1] != z[i - 1] for i in range(e + 1, f)):
        return False
    d_e = x[e - 1] - z[e - 1]
    d_f = z[f - 1] - x[f - 1]
    if d_e not in (0, 1) or d_f not in (0, 1):
        return False
    if e == a and d_e != 0:
        return False
    if f == b and d_f != 0:
        return False
    return True


def d_rel(j: IrrVector, k: IrrVector) -> bool:
    """Join dependency proper: dbullet plus distinctness."""
    return j.x != k.x and dbullet(j, k)


def unlhd(j: IrrVector, k: IrrVector) -> bool:
    """Reflexive-transitive closure of the join dependency (= dbullet)."""
    return dbullet(j, k)


def witness_m(j: IrrVector, k: IrrVector) -> IrrVector:
    """A meet irreducible [y] with <x> up-arrow [y] down-arrow <z>.

    The plan (c,d) of [y] is picked by a four-way case split on which
    endpoints of the plans moved.
    """
    if not dbullet(j, k):
        raise MultilatError("witness requires the dependency relation to hold")
    a, b = principal_plan(j)
    e, f = principal_plan(k)
    x, z = j.x, k.x
    d_e = x[e - 1] - z[e - 1]
    d_f = z[f - 1] - x[f - 1]
    if d_e == 0 and d_f == 0:
        c, d = e, f
    elif d_e == 1 and d_f == 0:
        c, d = a, f
    elif d_e == 0 and d_f == 1:
        c, d = e, b
    else:
        c, d = a, b
    v = j.parent.entries
    y = list(x)
    y[c - 1] += 1
    y[d - 1] -= 1
    for i in range(1, c):
        y[i - 1] = 0
    for i in range(d + 1, j.parent.n + 1):
        y[i - 1] = v[i - 1]
    m = IrrVector(j.parent, tuple(y), MEET)
    if not (arrow_up(j, m) and arrow_down(m, k)):
        raise MultilatError("constructed witness fails the arrow relations")
    return m


COVER_TAGS = ("LA", "LB", "RA", "RB", "other")


def cover_type(j: IrrVector, k: IrrVector) -> str:
    """Classify a D-pair as a left/right move of type A or B, or "other".

    Left/right is decided by the shared plan endpoint; A means
    <x> up-arrow kappa(<z>), B means kappa(<x>) down-arrow <z>.  Pairs
    sharing no endpoint do not fit the taxonomy and map to "other".
    """
    if not d_rel(j, k):
        raise MultilatError("cover_type requires a D-pair")
    a, b = principal_plan(j)
    e, f = principal_plan(k)
    if f == b and e > a:
        side = "L"
    elif e == a and f < b:
        side = "R"
    else:
        return "other"
    if arrow_up(j, kappa(k)):
        return side + "A"
    if arrow_down(kappa(j), k):
        return side + "B"
    return "other"


def left_move_factor(j: IrrVector, k: IrrVector) -> IrrVector:
    """Factor a left move of width gap >= 2 through a plan one step narrower."""
    if not d_rel(j, k):
        raise MultilatError("factorization requires a D-pair")
    a, b = principal_plan(j)
    e, f = principal_plan(k)
    if f != b:
        raise MultilatError("not a left move: plans do not share the right endpoint")
    if e - a < 2:
        raise MultilatError("nothing to factor: plan widths differ by 1")
    v = j.parent.entries
    y = list(j.x)
    if y[a] == v[a]:  # index a is position a+1 (0-based a)
        y[a] -= 1
    for i in range(1, a + 1):
        y[i - 1] = v[i - 1]
    mid = IrrVector(j.parent, tuple(y), JOIN)
    if principal_plan(mid) != (a + 1, b) or not (d_rel(j, mid) and d_rel(mid, k)):
        raise MultilatError("factorization step failed")
    return mid


def perm_ji_triple(j: IrrVector) -> tuple[int, int, frozenset[int]]:
    """Triple form (a, b, D_a) of a join irreducible of the permutohedron."""
    if any(e != 1 for e in j.parent.entries):
        raise MultilatError("triple form requires v = (1,..,1)")
    a, b = principal_plan(j)
    return (a, b, frozenset(i for i in range(a + 1, b) if j.x[i - 1] == 1))


@dataclass(frozen=True)
class DGraph:
    """The join dependency graph of L(v), with tagged edges."""

    parent: MultVector
    nodes: tuple[IrrVector, ...]
    edges: tuple[tuple[int, int, str], ...]  # (source, target, tag), node indices

    def to_dot(self) -> str:
        lines = ["digraph D {"]
        for node in self.nodes:
            lines.append(f'  "({node})";')
        for src, dst, tag in self.edges:
            lines.append(f'  "({self.nodes[src]})" -> "({self.nodes[dst]})" '
                         f'[label="{tag}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "v": list(self.parent.entries),
            "nodes": [list(node.x) for node in self.nodes],
            "edges": [{"source": list(self.nodes[s].x),
                       "target": list(self.nodes[t].x),
                       "tag": tag} for s, t, tag in self.edges],
        }, indent=2)


def d_graph(v: MultVector) -> DGraph:
    nodes = tuple(enumerate_ji(v))  # already lexicographic on x
    edges = []
    for si, src in enumerate(nodes):
        for ti, dst in enumerate(nodes):
            if si != ti and d_rel(src, dst):
                edges.append((si, ti, cover_type(src, dst)))
    return DGraph(v, nodes, tuple(edges))


def longest_simple_path(g: DGraph) -> int:
    """Longest directed path length (edge count); the graph is acyclic."""
    succ: dict[int, list[int]] = {i: [] for i in range(len(g.nodes))}
    for s, t, _ in g.edges:
        succ[s].append(t)
    memo: dict[int, int] = {}

    def depth(i: int) -> int:
        if i not in memo:
            memo[i] = max((1 + depth(t) for t in succ[i]), default=0)
        return memo[i]

    return max((depth(i) for i in succ), default=0)
