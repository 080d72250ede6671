"""m-partitions, standard tableaux, the sigma action and Specht modules of
G(m,1,n).

An m-partition is a tuple of m partitions, each a tuple of positive parts.
A tableau is a tuple of m components, each a tuple of rows of entries.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .cyclotomic import CycNumber
from .linalg import Matrix, identity, matmul

MPartition = tuple[tuple[int, ...], ...]
Tableau = tuple[tuple[tuple[int, ...], ...], ...]


# -- partitions ----------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(k: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of k in decreasing lexicographic order."""
    if k == 0:
        return ((),)
    largest = k if largest is None else min(largest, k)
    out = []
    for first in range(largest, 0, -1):
        for rest in partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def m_partitions(m: int, size: int) -> list[MPartition]:
    """All m-partitions of ``size``, largest first in tuple order."""
    out = []
    for comp in _compositions(size, m):
        def rec(i):
            if i == m:
                yield ()
                return
            for part in partitions(comp[i]):
                for tail in rec(i + 1):
                    yield (part,) + tail
        out.extend(rec(0))
    out.sort(reverse=True)
    return out


def mp_size(lam: MPartition) -> int:
    return sum(sum(c) for c in lam)


def mp_to_json(lam: MPartition) -> list[list[int]]:
    return [list(c) for c in lam]


def mp_from_json(data) -> MPartition:
    lam = tuple(tuple(int(x) for x in comp) for comp in data)
    for comp in lam:
        if any(a < b for a, b in zip(comp, comp[1:])) or any(x <= 0 for x in comp):
            raise ValueError(f"component {list(comp)} is not a partition")
    return lam


def mp_str(lam: MPartition) -> str:
    return "[" + ",".join("[" + ",".join(map(str, c)) + "]" for c in lam) + "]"


# -- the Z/pZ action ---------------------------------------------------------------

def sigma(lam: Sequence, m: int, p: int, power: int = 1) -> tuple:
    """Shift components: component i of the image is component i - d*power
    of the input, d = m/p. Works on m-partitions and on tableaux."""
    d = m // p
    shift = (d * power) % m
    return tuple(lam[(i - shift) % m] for i in range(m))


def stabiliser_index(lam: MPartition, m: int, p: int) -> int:
    """The least t >= 1 with sigma^t(lam) = lam (so Stab = <sigma^t>, t | p)."""
    for t in range(1, p + 1):
        if p % t == 0 and sigma(lam, m, p, t) == lam:
            return t
    raise AssertionError("sigma^p must fix every m-partition")


def orbit(lam: MPartition, m: int, p: int) -> list[MPartition]:
    t = stabiliser_index(lam, m, p)
    return [sigma(lam, m, p, i) for i in range(t)]


def orbit_representative(lam: MPartition, m: int, p: int) -> MPartition:
    return max(orbit(lam, m, p))


@dataclass(frozen=True, order=True)
class OrbitLabel:
    """A label lam^r of B(m,p,n): orbit representative, stabiliser index t
    (Stab = <sigma^t>) and residue 0 <= r < p/t."""
    lam: MPartition
    t: int
    r: int

    def __str__(self):
        return f"{mp_str(self.lam)}#r{self.r}"

    def to_json(self) -> dict:
        return {"lambda": mp_to_json(self.lam), "t": self.t, "r": self.r}

    @classmethod
    def from_json(cls, data, m: int, p: int) -> "OrbitLabel":
        lam = mp_from_json(data["lambda"])
        t = stabiliser_index(lam, m, p)
        r = int(data.get("r", 0))
        if not 0 <= r < p // t:
            raise ValueError(f"r={r} out of range [0, {p // t})")
        if lam != orbit_representative(lam, m, p):
            raise ValueError(f"{mp_str(lam)} is not the chosen orbit representative")
        return cls(lam, t, r)


def enumerate_lambda(m: int, p: int, n: int, arcs_allowed: bool = True):
    """Lambda(m,1,n) (p = 1, a list of m-partitions) or Lambda(m,p,n) (a
    list of OrbitLabel). Ordered by decreasing number of arcs, then by
    decreasing m-partition."""
    sizes = [n - 2 * l for l in range(n // 2, -1, -1)] if arcs_allowed else [n]
    if p == 1:
        return [lam for s in sizes for lam in m_partitions(m, s)]
    out = []
    for s in sizes:
        reps = sorted({orbit_representative(lam, m, p) for lam in m_partitions(m, s)},
                      reverse=True)
        for lam in reps:
            t = stabiliser_index(lam, m, p)
            out.extend(OrbitLabel(lam, t, r) for r in range(p // t))
    return out


# -- tableaux --------------------------------------------------------------------

def standard_tableaux(lam: MPartition) -> list[Tableau]:
    """Standard lam-tableaux, ordered lexicographically by the sequence of
    (component, row) positions of the entries 1, 2, ..., N."""
    n = mp_size(lam)
    m = len(lam)
    rows = [[[] for _ in comp] for comp in lam]
    out = []

    def rec(entry):
        if entry > n:
            out.append(tuple(tuple(tuple(r) for r in comp) for comp in rows))
            return
        for c in range(m):
            for ri, target in enumerate(lam[c]):
                cur = len(rows[c][ri])
                if cur < target and (ri == 0 or len(rows[c][ri - 1]) > cur):
                    rows[c][ri].append(entry)
                    rec(entry + 1)
                    rows[c][ri].pop()

    rec(1)
    return out


def positions(tab: Tableau) -> dict[int, tuple[int, int, int]]:
    """entry -> (component, row, column)."""
    return {e: (c, r, k) for c, comp in enumerate(tab)
            for r, row in enumerate(comp) for k, e in enumerate(row)}


def tableau_shape(tab: Tableau) -> MPartition:
    return tuple(tuple(len(r) for r in comp) for comp in tab)


def is_standard(tab: Tableau) -> bool:
    for comp in tab:
        for r, row in enumerate(comp):
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
            if r and any(comp[r - 1][k] >= row[k] for k in range(len(row))):
                return False
    return True


def swap_entries(tab: Tableau, i: int, j: int) -> Tableau:
    f = {i: j, j: i}
    return tuple(tuple(tuple(f.get(e, e) for e in row) for row in comp) for comp in tab)


def axial_distance(tab: Tableau, i: int, j: int):
    """(row_i - col_i) - (row_j - col_j) for entries in one component,
    ``math.inf`` otherwise."""
    pos = positions(tab)
    if i not in pos or j not in pos:
        raise ValueError(f"entries {i}, {j} are not both in the tableau")
    ci, ri, ki = pos[i]
    cj, rj, kj = pos[j]
    if ci != cj:
        return math.inf
    return (ri - ki) - (rj - kj)


def inverse_axial(a) -> Fraction:
    return Fraction(0) if a == math.inf else Fraction(1, a)


# -- Specht modules of G(m,1,N) -------------------------------------------------------

class SpechtModule:
    """The simple kG(m,1,N)-module labelled by an m-partition, on the basis
    of standard tableaux.

    ``t_1`` acts diagonally by xi^(component of 1) and s_{i,i+1} by the
    axial-distance formula. Arbitrary group elements are given in one-line
    form: ``perm[i-1]`` is the southern endpoint of the strand leaving
    northern node i and ``labels[i-1]`` its label.
    """

    def __init__(self, lam: MPartition, m: int):
        if len(lam) != m:
            raise ValueError(f"expected an {m}-partition, got {lam}")
        self.lam = lam
        self.m = m
        self.size = mp_size(lam)
        self.tableaux = standard_tableaux(lam)
        self.index = {t: k for k, t in enumerate(self.tableaux)}
        self.dim = len(self.tableaux)
        self._pos = [positions(t) for t in self.tableaux]
        self._cache: dict = {}

    def component(self, k: int, entry: int) -> int:
        return self._pos[k][entry][0]

    def act_t1(self, k: int) -> dict[int, CycNumber]:
        return {k: CycNumber.zeta(self.m, self.component(k, 1))}

    def act_s(self, i: int, k: int) -> dict[int, CycNumber]:
        """s_{i,i+1} applied to the k-th tableau."""
        tab = self.tableaux[k]
        inv = inverse_axial(axial_distance(tab, i, i + 1))
        out = {}
        if inv:
            out[k] = CycNumber.from_rational(self.m, inv)
        swapped = swap_entries(tab, i, i + 1)
        if 1 + inv and swapped in self.index:
            out[self.index[swapped]] = CycNumber.from_rational(self.m, 1 + inv)
        return out

    def _from_columns(self, cols) -> Matrix:
        z = CycNumber.zero(self.m)
        mat = [[z] * self.dim for _ in range(self.dim)]
        for c, col in enumerate(cols):
            for r, v in col.items():
                mat[r][c] = v
        return mat

    def matrix_t1(self) -> Matrix:
        key = ("t", 1)
        if key not in self._cache:
            self._cache[key] = self._from_columns([self.act_t1(k) for k in range(self.dim)])
        return self._cache[key]

    def matrix_s(self, i: int) -> Matrix:
        key = ("s", i)
        if key not in self._cache:
            self._cache[key] = self._from_columns(
                [self.act_s(i, k) for k in range(self.dim)])
        return self._cache[key]

    def matrix_t(self, i: int) -> Matrix:
        """t_i = s_{i-1} t_{i-1} s_{i-1}."""
        if i == 1:
            return self.matrix_t1()
        key = ("t", i)
        if key not in self._cache:
            s = self.matrix_s(i - 1)
            self._cache[key] = matmul(matmul(s, self.matrix_t(i - 1), self.m), s, self.m)
        return self._cache[key]

    def matrix_perm(self, perm: tuple[int, ...]) -> Matrix:
        key = ("perm", perm)
        if key not in self._cache:
            for j in range(len(perm) - 1):
                if perm[j] > perm[j + 1]:
                    rest = list(perm)
                    rest[j], rest[j + 1] = rest[j + 1], rest[j]
                    mat = matmul(self.matrix_s(j + 1), self.matrix_perm(tuple(rest)), self.m)
                    break
            else:
                mat = identity(self.m, self.dim)
            self._cache[key] = mat
        return self._cache[key]

    def matrix_group(self, perm: Sequence[int], labels: Sequence[int]) -> Matrix:
        perm, labels = tuple(perm), tuple(x % self.m for x in labels)
        key = ("g", perm, labels)
        if key not in self._cache:
            mat = self.matrix_perm(perm)
            for i in range(len(labels), 0, -1):
                for _ in range(labels[i - 1]):
                    mat = matmul(self.matrix_t(i), mat, self.m)
            self._cache[key] = mat
        return self._cache[key]

    def sigma_index(self, p: int, power: int = 1) -> list[int]:
        """Positions of sigma^power(tableau) in the Specht module of the
        shifted shape (this module when the shape is fixed)."""
        target = sigma(self.lam, self.m, p, power)
        if target == self.lam:
            idx = self.index
        else:
            idx = {t: k for k, t in enumerate(standard_tableaux(target))}
        return [idx[sigma(t, self.m, p, power)] for t in self.tableaux]

    @cached_property
    def first_component(self) -> list[int]:
        return [self.component(k, 1) if self.size else 0 for k in range(self.dim)]


@lru_cache(maxsize=None)
def specht_module(lam: MPartition, m: int) -> SpechtModule:
    return SpechtModule(lam, m)


def specht_act_t1(lam: MPartition, tab: Tableau, m: int) -> dict[Tableau, CycNumber]:
    sp = specht_module(lam, m)
    return {sp.tableaux[k]: c for k, c in sp.act_t1(sp.index[tab]).items()}


def specht_act_s(lam: MPartition, i: int, tab: Tableau, m: int) -> dict[Tableau, CycNumber]:
    sp = specht_module(lam, m)
    return {sp.tableaux[k]: c for k, c in sp.act_s(i, sp.index[tab]).items()}
