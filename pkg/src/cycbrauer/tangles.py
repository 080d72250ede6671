"""(m,n,l)-tangles: the top halves of diagrams with l labelled arcs and
n-2l free lines.

Free lines carry no label; the free top nodes, read left to right, are wired
in order to the bottom points 1..n-2l.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .diagrams import LabelledDiagram


@dataclass(frozen=True, order=True)
class Tangle:
    n: int
    m: int
    arcs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        nodes = [x for a, b, _ in self.arcs for x in (a, b)]
        if len(set(nodes)) != len(nodes) or any(not 1 <= x <= self.n for x in nodes):
            raise ValueError(f"arcs {self.arcs} are not disjoint arcs on {self.n} nodes")
        if any(a >= b or not 0 <= lab < self.m for a, b, lab in self.arcs):
            raise ValueError("arcs must be stored as (i, j, label) with i < j, 0 <= label < m")
        if list(self.arcs) != sorted(self.arcs):
            raise ValueError("arcs must be sorted")

    @classmethod
    def build(cls, n: int, m: int, arcs) -> "Tangle":
        return cls(n, m, tuple(sorted((min(a, b), max(a, b), lab % m) for a, b, lab in arcs)))

    @property
    def l(self) -> int:
        return len(self.arcs)

    @property
    def label_sum(self) -> int:
        return sum(lab for _, _, lab in self.arcs)

    @cached_property
    def free(self) -> tuple[int, ...]:
        used = {x for a, b, _ in self.arcs for x in (a, b)}
        return tuple(i for i in range(1, self.n + 1) if i not in used)

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """partner[j] is the other end of the arc at j, or -(bottom point)
        when j is free."""
        out = [0] * (self.n + 1)
        for a, b, _ in self.arcs:
            out[a], out[b] = b, a
        for k, j in enumerate(self.free, start=1):
            out[j] = -k
        return tuple(out)

    @cached_property
    def node_label(self) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for a, b, lab in self.arcs:
            out[a] = out[b] = lab
        return tuple(out)

    def relabel(self, i: int, j: int, label: int) -> "Tangle":
        return Tangle.build(self.n, self.m, [(a, b, label if (a, b) == (i, j) else lab)
                                             for a, b, lab in self.arcs])

    def to_dict(self) -> dict:
        return {"n": self.n, "l": self.l, "m": self.m, "arcs": [list(a) for a in self.arcs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "Tangle":
        try:
            t = cls.build(int(data["n"]), int(data["m"]),
                          [tuple(int(v) for v in a) for a in data["arcs"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed tangle JSON: {exc}") from exc
        if "l" in data and int(data["l"]) != t.l:
            raise ValueError(f"tangle declares l={data['l']} but has {t.l} arcs")
        return t

    def __str__(self):
        arcs = " ".join(f"({a},{b})" + (f"[{lab}]" if lab else "") for a, b, lab in self.arcs)
        return f"<{arcs} | free {list(self.free)}>"


def partial_matchings(n: int, l: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Sets of l disjoint pairs from 1..n, in lexicographic order."""
    def rec(start, remaining, used):
        if remaining == 0:
            yield ()
            return
        for a in range(start, n + 1):
            if a in used:
                continue
            for b in range(a + 1, n + 1):
                if b in used:
                    continue
                for rest in rec(a + 1, remaining - 1, used | {a, b}):
                    yield ((a, b),) + rest
    yield from rec(1, l, frozenset())


def enumerate_tangles(m: int, n: int, l: int) -> list[Tangle]:
    if 2 * l > n or l < 0:
        raise ValueError(f"cannot place {l} arcs on {n} nodes")
    out = []
    for match in partial_matchings(n, l):
        for labels in itertools.product(range(m), repeat=l):
            out.append(Tangle(n, m, tuple((a, b, lab) for (a, b), lab in zip(match, labels))))
    return out


def filter_graded(tangles: list[Tangle], q: int, modulus: int) -> list[Tangle]:
    """Tangles whose label sum is congruent to -q modulo ``modulus``."""
    return [v for v in tangles if (v.label_sum + q) % modulus == 0]


@dataclass(frozen=True)
class TangleImage:
    """Result of pushing a tangle through a diagram.

    ``perm``/``labels`` describe the residual group element on the free
    lines: the i-th free line of ``tangle`` runs to bottom point perm[i-1]
    carrying label labels[i-1]."""
    tangle: Tangle
    perm: tuple[int, ...]
    labels: tuple[int, ...]
    loops: tuple[int, ...]


def act_on_tangle(x: LabelledDiagram, v: Tangle) -> TangleImage | None:
    """Place x above v. Returns None when the number of free lines drops
    (the image has more than l arcs)."""
    n = x.n
    if v.n != n or v.m != x.m:
        raise ValueError("tangle and diagram have different shapes")
    px, lx = x.partner, x.node_label
    vp, vl = v.partner, v.node_label
    m = x.m
    seen = [False] * (n + 1)
    arcs = []
    free = []
    done = [False] * (n + 1)
    for a in range(1, n + 1):
        if done[a]:
            continue
        total, node = 0, a
        while True:
            total += lx[node]
            nxt = px[node]
            if nxt <= n:
                arcs.append((a, nxt, total))
                done[a] = done[nxt] = True
                break
            j = nxt - n
            seen[j] = True
            if vp[j] < 0:
                free.append((a, -vp[j], total % m))
                done[a] = True
                break
            total += vl[j]
            j2 = vp[j]
            seen[j2] = True
            node = n + j2
    if len(free) != len(v.free):
        return None
    loops = []
    for j in range(1, n + 1):
        if seen[j]:
            continue
        seen[j] = True
        total, node = 0, j
        while True:
            total += vl[node]
            j2 = vp[node]
            seen[j2] = True
            total += lx[n + j2]
            node = px[n + j2] - n
            seen[node] = True
            if node == j:
                break
        loops.append(total % m)
    free.sort()
    return TangleImage(Tangle.build(n, m, arcs),
                       tuple(b for _, b, _ in free),
                       tuple(lab for _, _, lab in free),
                       tuple(loops))
