"""Labelled Brauer diagrams of type G(m,p,n) and their multiplication.

Nodes are numbered 1..n along the north edge and n+1..2n along the south
edge, both left to right. A strand is stored as ``(a, b, label)`` with
``a < b`` and ``label`` in ``range(m)``.

Labels add up along a concatenated strand without regard to the direction
in which the strand is traversed; a closed loop therefore carries the plain
sum of the labels of its pieces.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .cyclotomic import CycNumber, DeltaParams, parse_cyc


class CapExceeded(RuntimeError):
    """A configured resource cap would be exceeded."""


DEFAULT_BASIS_CAP = 200_000


@dataclass(frozen=True, order=True)
class LabelledDiagram:
    n: int
    m: int
    p: int
    strands: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for a, b, lab in self.strands:
            if not (1 <= a < b <= 2 * self.n) or not 0 <= lab < self.m:
                raise ValueError(f"bad strand {(a, b, lab)} for n={self.n}, m={self.m}")
            seen.update((a, b))
        if len(seen) != 2 * self.n or len(self.strands) != self.n:
            raise ValueError("strands do not form a perfect matching")
        if self.label_sum % self.p:
            raise ValueError(
                f"label sum {self.label_sum} is not a multiple of p={self.p}")

    @classmethod
    def build(cls, n: int, m: int, p: int,
              strands: Iterable[tuple[int, int, int]]) -> "LabelledDiagram":
        """Canonicalise arbitrary (a, b, label) triples into a diagram."""
        canon = sorted((min(a, b), max(a, b), lab % m) for a, b, lab in strands)
        return cls(n, m, p, tuple(canon))

    @cached_property
    def partner(self) -> tuple[int, ...]:
        out = [0] * (2 * self.n + 1)
        for a, b, _ in self.strands:
            out[a], out[b] = b, a
        return tuple(out)

    @cached_property
    def node_label(self) -> tuple[int, ...]:
        out = [0] * (2 * self.n + 1)
        for a, b, lab in self.strands:
            out[a] = out[b] = lab
        return tuple(out)

    @property
    def label_sum(self) -> int:
        return sum(lab for _, _, lab in self.strands)

    @property
    def through_count(self) -> int:
        return sum(1 for a, b, _ in self.strands if a <= self.n < b)

    def is_group_element(self) -> bool:
        return self.through_count == self.n

    def with_p(self, p: int) -> "LabelledDiagram":
        return LabelledDiagram(self.n, self.m, p, self.strands)

    def flip(self) -> "LabelledDiagram":
        """Reflect top to bottom, keeping labels."""
        n = self.n
        sw = lambda a: a + n if a <= n else a - n
        return LabelledDiagram.build(
            n, self.m, self.p, ((sw(a), sw(b), lab) for a, b, lab in self.strands))

    def inverse(self) -> "LabelledDiagram":
        """Group inverse (reflection with negated labels); arc-free only."""
        if not self.is_group_element():
            raise ValueError("only arc-free diagrams are invertible")
        n = self.n
        sw = lambda a: a + n if a <= n else a - n
        return LabelledDiagram.build(
            n, self.m, self.p, ((sw(a), sw(b), -lab) for a, b, lab in self.strands))

    def to_dict(self) -> dict:
        return {"m": self.m, "p": self.p, "n": self.n,
                "strands": [list(s) for s in self.strands]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "LabelledDiagram":
        try:
            n, m, p = int(data["n"]), int(data["m"]), int(data["p"])
            strands = [tuple(int(v) for v in s) for s in data["strands"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed diagram JSON: {exc}") from exc
        if any(len(s) != 3 for s in strands):
            raise ValueError("each strand must be [a, b, label]")
        return cls.build(n, m, p, strands)

    @classmethod
    def from_json(cls, text: str) -> "LabelledDiagram":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        parts = []
        for a, b, lab in self.strands:
            name = lambda v: str(v) if v <= self.n else f"{v - self.n}'"
            parts.append(f"{name(a)}-{name(b)}" + (f"[{lab}]" if lab else ""))
        return "<" + " ".join(parts) + ">"


def canonical_form(d: LabelledDiagram) -> LabelledDiagram:
    return LabelledDiagram.build(d.n, d.m, d.p, d.strands)


# -- multiplication --------------------------------------------------------

def concatenate(x: LabelledDiagram, y: LabelledDiagram
                ) -> tuple[LabelledDiagram, list[int]]:
    """Stack x above y. Returns the reduced diagram and the labels of the
    closed loops that were removed.

    If some loop label is not a multiple of p the reduced diagram lies
    outside B(m,p,n); it is then returned as an element of B(m,1,n).
    """
    if (x.n, x.m, x.p) != (y.n, y.m, y.p):
        raise ValueError("diagrams come from different algebras")
    n, m = x.n, x.m
    px, lx = x.partner, x.node_label
    py, ly = y.partner, y.node_label
    seen_mid = [False] * (n + 1)
    done = [False] * (2 * n + 1)
    strands = []

    def walk(in_x: bool, node: int) -> tuple[int, int]:
        total = 0
        while True:
            if in_x:
                total += lx[node]
                nxt = px[node]
                if nxt <= n:
                    return nxt, total
                node = nxt - n
                seen_mid[node] = True
                in_x = False
            else:
                total += ly[node]
                nxt = py[node]
                if nxt > n:
                    return nxt, total
                seen_mid[nxt] = True
                node = n + nxt
                in_x = True

    for start, in_x in itertools.chain(((i, True) for i in range(1, n + 1)),
                                       ((i, False) for i in range(n + 1, 2 * n + 1))):
        if done[start]:
            continue
        end, total = walk(in_x, start)
        done[start] = done[end] = True
        strands.append((start, end, total))

    loops = []
    for j in range(1, n + 1):
        if seen_mid[j]:
            continue
        seen_mid[j] = True
        total, node = 0, j
        while True:
            total += lx[n + node]
            mid = px[n + node] - n
            seen_mid[mid] = True
            total += ly[mid]
            node = py[mid]
            seen_mid[node] = True
            if node == j:
                break
        loops.append(total % m)
    p = x.p if all(lab % x.p == 0 for lab in loops) else 1
    return LabelledDiagram.build(n, m, p, strands), loops


def compose(x: LabelledDiagram, y: LabelledDiagram,
            delta: DeltaParams) -> "DiagCombination":
    d, loops = concatenate(x, y)
    coeff = CycNumber.one(x.m)
    for lab in loops:
        coeff = coeff * delta.loop_value(lab)
        if not coeff:
            return DiagCombination(x.m)
    return DiagCombination(x.m, {d: coeff})


@dataclass
class DiagCombination:
    """Finite formal sum of diagrams with CycNumber coefficients."""
    m: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {d: c for d, c in self.terms.items() if c}

    @classmethod
    def of(cls, d: LabelledDiagram, coeff=1) -> "DiagCombination":
        c = coeff if isinstance(coeff, CycNumber) else CycNumber.from_rational(d.m, coeff)
        return cls(d.m, {d: c})

    def __add__(self, other: "DiagCombination") -> "DiagCombination":
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return DiagCombination(self.m, out)

    def scale(self, c) -> "DiagCombination":
        return DiagCombination(self.m, {d: v * c for d, v in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other: "DiagCombination", delta: DeltaParams) -> "DiagCombination":
        out = DiagCombination(self.m)
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                out = out + compose(d1, d2, delta).scale(c1 * c2)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, DiagCombination):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __iter__(self) -> Iterator[tuple[LabelledDiagram, CycNumber]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0]))

    def to_list(self) -> list:
        return [[d.to_dict(), str(c)] for d, c in self]

    @classmethod
    def from_list(cls, m: int, data) -> "DiagCombination":
        out = cls(m)
        for dd, cs in data:
            out = out + cls.of(LabelledDiagram.from_dict(dd), parse_cyc(str(cs), m))
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{d}" for d, c in self)


# -- named elements ---------------------------------------------------------

def _straight(n: int, skip=()) -> list[tuple[int, int, int]]:
    return [(i, n + i, 0) for i in range(1, n + 1) if i not in skip]


def _check_pair(n: int, i: int, j: int):
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")


def identity_diagram(n: int, m: int, p: int = 1) -> LabelledDiagram:
    return LabelledDiagram.build(n, m, p, _straight(n))


def gen_s(n: int, m: int, p: int, i: int, j: int | None = None) -> LabelledDiagram:
    """The transposition s_{i,j}; s_{i,i+1} when j is omitted."""
    j = i + 1 if j is None else j
    _check_pair(n, i, j)
    return LabelledDiagram.build(
        n, m, p, _straight(n, (i, j)) + [(i, n + j, 0), (j, n + i, 0)])


def gen_t(n: int, m: int, p: int, i: int, k: int = 1) -> LabelledDiagram:
    """t_i^k: the identity with label k on the i-th strand."""
    if not 1 <= i <= n:
        raise ValueError(f"strand index {i} out of range for n={n}")
    return LabelledDiagram.build(n, m, p, _straight(n, (i,)) + [(i, n + i, k)])


def gen_s_star(n: int, m: int, p: int, i: int = 1, j: int = 2) -> LabelledDiagram:
    """s*_{i,j}: crossing with label 1 on i -> j' and m-1 on j -> i'."""
    _check_pair(n, i, j)
    return LabelledDiagram.build(
        n, m, p, _straight(n, (i, j)) + [(i, n + j, 1), (j, n + i, m - 1)])


def gen_e(n: int, m: int, p: int, i: int, j: int | None = None) -> LabelledDiagram:
    """e_{i,j}: northern and southern arcs between i and j, labels 0."""
    j = i + 1 if j is None else j
    _check_pair(n, i, j)
    return LabelledDiagram.build(
        n, m, p, _straight(n, (i, j)) + [(i, j, 0), (n + i, n + j, 0)])


def idempotent_e(n: int, delta: DeltaParams) -> DiagCombination:
    """The idempotent e_{n-2} with n-2 through strands.

    For nonzero delta the smallest i with delta_{ip} != 0 is used.
    """
    m, p = delta.m, delta.p
    if not delta.is_zero():
        if n < 2:
            raise ValueError("e_{n-2} needs n >= 2")
        i = next(k for k, v in enumerate(delta.values) if v)
        x = LabelledDiagram.build(
            n, m, p, _straight(n, (n - 1, n)) + [(n - 1, n, i * p), (2 * n - 1, 2 * n, 0)])
        return DiagCombination.of(x, delta.values[i].inverse())
    if n < 3:
        raise ValueError("e_{n-2} for delta = 0 needs n >= 3")
    x, loops = concatenate(gen_e(n, m, p, n - 1), gen_e(n, m, p, n - 2))
    assert not loops
    return DiagCombination.of(x)


# -- basis ------------------------------------------------------------------

def perfect_matchings(nodes: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not nodes:
        yield []
        return
    a = nodes[0]
    for k in range(1, len(nodes)):
        rest = nodes[1:k] + nodes[k + 1:]
        for sub in perfect_matchings(rest):
            yield [(a, nodes[k])] + sub


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def basis_size(m: int, p: int, n: int) -> int:
    return m ** n * double_factorial(2 * n - 1) // p


def enumerate_basis(m: int, p: int, n: int, cap: int = DEFAULT_BASIS_CAP,
                    residue: int | None = 0, arc_free: bool = False
                    ) -> list[LabelledDiagram]:
    """All reduced diagrams of B(m,p,n) in canonical order.

    With ``residue`` set to r (and p > 1) the diagrams of B(m,1,n) whose
    label sum is r mod p are returned instead; ``residue=None`` returns all
    of B(m,1,n).
    """
    if m % p:
        raise ValueError(f"p={p} must divide m={m}")
    expected = basis_size(m, 1 if residue is None else p, n)
    if expected > cap:
        raise CapExceeded(f"basis of size {expected} exceeds cap {cap}")
    out = []
    store_p = 1 if residue not in (0,) else p
    for match in perfect_matchings(tuple(range(1, 2 * n + 1))):
        if arc_free and any((a <= n) == (b <= n) for a, b in match):
            continue
        for labels in itertools.product(range(m), repeat=n):
            s = sum(labels)
            if residue is not None and s % p != residue:
                continue
            out.append(LabelledDiagram(
                n, m, store_p, tuple((a, b, lab) for (a, b), lab in zip(match, labels))))
    return out


def group_elements(m: int, p: int, n: int, cap: int = DEFAULT_BASIS_CAP
                   ) -> list[LabelledDiagram]:
    """The arc-free diagrams of B(m,p,n), i.e. the elements of G(m,p,n)."""
    from math import factorial
    size = m ** n * factorial(n) // p
    if size > cap:
        raise CapExceeded(f"group of order {size} exceeds cap {cap}")
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for labels in itertools.product(range(m), repeat=n):
            if sum(labels) % p:
                continue
            out.append(LabelledDiagram.build(
                n, m, p, [(i, n + perm[i - 1], lab) for i, lab in zip(range(1, n + 1), labels)]))
    out.sort()
    return out
