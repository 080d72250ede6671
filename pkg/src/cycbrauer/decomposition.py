"""Hom spaces, simple heads and decomposition numbers.

Two independent routes to [Delta(lam^r) : L(mu^q)] are provided:

* ``decomp_oracle`` builds every standard module and its simple head
  and solves for the multiplicities from traces of all basis diagrams;
* ``decomp_formula`` assembles the matrix for B(m,p,n) from classical
  Brauer decomposition numbers, one factor per component, summed over
  sigma-twists and masked by ``epsilon``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Sequence

from .combinatorics import (OrbitLabel, enumerate_lambda, mp_size, mp_str, orbit_representative,
                            sigma, stabiliser_index)
from .cyclotomic import CycNumber, DeltaParams
from .diagrams import DEFAULT_BASIS_CAP, LabelledDiagram, enumerate_basis, group_elements
from .linalg import SingularSystemError, SparseEchelon, rank, solve
from .modules import (Module, ProjectedModule, QuotientModule, StandardModule, epsilon,
                      gram_matrix, simple_head, standard_module)

DEFAULT_ORACLE_CAP = 2000


# -- Hom spaces ---------------------------------------------------------------------

def hom_dim(source: Module, target: Module, gens: Sequence[LabelledDiagram] | None = None) -> int:
    """dim {X : X rho_source(g) = rho_target(g) X for every generator g}."""
    if (source.m, source.p, source.n) != (target.m, target.p, target.n):
        raise ValueError("modules are over different algebras")
    if gens is None:
        gens = source.generators()
        if gens != target.generators():
            raise ValueError("generator sets differ")
    a, b = source.dim, target.dim
    if a == 0 or b == 0:
        return 0
    # unknown X[i][k] (b x a) sits at column i*a + k
    ech = SparseEchelon()
    for g in gens:
        ms, mt = source.matrix(g), target.matrix(g)
        for i in range(b):
            for j in range(a):
                row: dict[int, CycNumber] = {}
                for k in range(a):
                    c = ms[k][j]
                    if c:
                        row[i * a + k] = c
                for k in range(b):
                    c = mt[i][k]
                    if c:
                        col = k * a + j
                        row[col] = row[col] - c if col in row else -c
                ech.add(row)
                if ech.rank == a * b:
                    return 0
    return a * b - ech.rank


def gram_rank(module) -> tuple[int, int]:
    """(dim Delta, rank of its Gram matrix). The rank is dim L when the
    form is nonzero; a module with no arcs has the identity form."""
    base = module if isinstance(module, StandardModule) else module.parent
    if base.l == 0:
        return module.dim, module.dim
    g = gram_matrix(module)
    return module.dim, rank(g)


# -- decomposition matrices ----------------------------------------------------------

def label_str(label) -> str:
    return str(label) if isinstance(label, OrbitLabel) else mp_str(label)


@dataclass
class DecompositionMatrix:
    """Rows and columns indexed by labels; ``entries[(row, col)]`` holds the
    nonzero multiplicities. Columns whose simple module is zero are absent."""
    rows: list
    cols: list
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return (isinstance(other, DecompositionMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self.entries == {(r, r): 1 for r in self.rows}

    def is_unitriangular(self) -> bool:
        """Diagonal ones and zeros below the diagonal in the label order."""
        pos = {lab: i for i, lab in enumerate(self.rows)}
        for c in self.cols:
            if self[(c, c)] != 1:
                return False
        return all(pos[r] <= pos[c] for (r, c), v in self.entries.items() if v)

    def diff(self, other: "DecompositionMatrix") -> list[dict]:
        out = []
        for r in self.rows:
            for c in sorted(set(self.cols) | set(other.cols), key=self._col_key(other)):
                a, b = self[(r, c)], other[(r, c)]
                if a != b:
                    out.append({"row": label_str(r), "col": label_str(c), "left": a, "right": b})
        return out

    def _col_key(self, other):
        order = {lab: i for i, lab in enumerate(self.rows)}
        return lambda lab: order.get(lab, len(order))

    def to_rows(self) -> list[list[int]]:
        return [[self[(r, c)] for c in self.cols] for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [label_str(c) for c in self.cols])
        for r, vals in zip(self.rows, self.to_rows()):
            w.writerow([label_str(r)] + vals)
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"rows": [label_str(r) for r in self.rows],
                "cols": [label_str(c) for c in self.cols],
                "matrix": self.to_rows()}

    def __str__(self):
        return self.to_csv()


def _labels(m: int, p: int, n: int):
    return enumerate_lambda(m, p, n)


def _delta_for(delta: DeltaParams, p: int) -> DeltaParams:
    return delta if delta.p == p else delta.with_p(p)


def decomp_oracle(m: int, p: int, n: int, delta: DeltaParams,
                  cap: int = DEFAULT_ORACLE_CAP) -> DecompositionMatrix:
    """[Delta : L] from characters. Every basis diagram contributes one
    equation; the system must have a unique solution."""
    delta = _delta_for(delta, p)
    basis = enumerate_basis(m, p, n, cap=cap)
    labels = _labels(m, p, n)
    stds = {lab: standard_module(lab, n, delta) for lab in labels}
    simples = {}
    for lab in labels:
        head = simple_head(stds[lab])
        if head.dim:
            simples[lab] = head
    cols = [lab for lab in labels if lab in simples]
    table = [[simples[c].trace(x) for c in cols] for x in basis]
    out = DecompositionMatrix(list(labels), cols)
    for lab in labels:
        rhs = [stds[lab].trace(x) for x in basis]
        try:
            sol = solve(table, rhs, m)
        except SingularSystemError as exc:
            raise SingularSystemError(f"character system for {label_str(lab)}: {exc}") from exc
        for c, v in zip(cols, sol):
            if not v.is_rational() or v.to_fraction().denominator != 1 or v.to_fraction() < 0:
                raise SingularSystemError(
                    f"non-integral multiplicity {v} at ({label_str(lab)}, {label_str(c)})")
            if v:
                out.entries[(lab, c)] = int(v.to_fraction())
    return out


# -- the product formula ------------------------------------------------------------

def component_parameter(delta: DeltaParams, s: int) -> CycNumber:
    """The classical loop parameter governing component s of an
    m-partition: (1/m) sum_k xi^(-sk) delta_k, summed over all labels k."""
    m = delta.m
    total = CycNumber.zero(m)
    for k in range(m):
        v = delta.loop_value(k)
        if v:
            total = total + CycNumber.zeta(m, -s * k) * v
    return total / m


@lru_cache(maxsize=None)
def _classical_matrix(value: Fraction, n: int) -> DecompositionMatrix:
    return decomp_oracle(1, 1, n, DeltaParams(1, 1, [value]))


def classical_decomposition(a: tuple, b: tuple, value: CycNumber) -> int:
    """d^{1,1}_{a,b}(value): [Delta(a) : L(b)] for the Brauer algebra on
    |b| strands with loop parameter ``value``.

    Brauer algebras with a non-integral parameter are semisimple, so only
    rational values are handed to the oracle."""
    size_a, size_b = sum(a), sum(b)
    if size_a > size_b or (size_b - size_a) % 2:
        return 0
    if a == b:
        return 1
    if not value.is_rational() or value.to_fraction().denominator != 1:
        return 0
    mat = _classical_matrix(value.to_fraction(), size_b)
    return mat[((a,), (b,))]


def decomp_cyclotomic(lam, mu, delta: DeltaParams,
                      classical: Callable = classical_decomposition) -> int:
    """d^{m,1,n}_{lam,mu} = prod_s d^{1,1}_{lam_s,mu_s}(component parameter s)."""
    out = 1
    for s, (a, b) in enumerate(zip(lam, mu)):
        out *= classical(a, b, component_parameter(delta, s))
        if not out:
            return 0
    return out


def decomp_formula(m: int, p: int, n: int, delta: DeltaParams,
                   classical: Callable = classical_decomposition,
                   cols: Sequence | None = None) -> DecompositionMatrix:
    """d_{lam^r,mu^q} = eps_{r,q} sum_{rho < hcf(t,u)} d^{m,1,n}_{lam, sigma^rho mu}.

    ``cols`` restricts the columns (for instance to labels with a nonzero
    simple module); by default every label is a column."""
    delta = _delta_for(delta, p)
    labels = _labels(m, p, n)
    cols = list(labels) if cols is None else list(cols)
    out = DecompositionMatrix(list(labels), cols)
    for lab in labels:
        for col in cols:
            if p == 1:
                v = decomp_cyclotomic(lab, col, delta, classical)
            else:
                if not epsilon(lab.r, col.r, p, lab.t, col.t):
                    continue
                v = sum(decomp_cyclotomic(lab.lam, sigma(col.lam, m, p, rho), delta, classical)
                        for rho in range(gcd(lab.t, col.t)))
            if v:
                out.entries[(lab, col)] = v
    return out


# -- structural predicates -------------------------------------------------------------

def is_quasi_hereditary(m: int, p: int, n: int, delta_nonzero: bool, char: int = 0) -> bool:
    """Quasi-heredity of B(m,p,n): for even n this needs delta != 0; then
    the field must have characteristic 0, or exceed n and not divide m."""
    if char < 0 or (char and char < 2):
        raise ValueError(f"bad characteristic {char}")
    if n % 2 == 0 and not delta_nonzero:
        return False
    return char == 0 or (char > n and m % char != 0)


# -- restriction to the group algebra --------------------------------------------------

def character_inner_product(a: Module, b: Module, group: Sequence[LabelledDiagram]) -> int:
    total = CycNumber.zero(a.m)
    for g in group:
        ca = a.trace(g)
        if ca:
            total = total + ca * b.trace(g.inverse())
    val = total / len(group)
    if not val.is_rational() or val.to_fraction().denominator != 1:
        raise ArithmeticError(f"character inner product {val} is not an integer")
    return int(val.to_fraction())


def restriction_multiplicity(module: Module, simple: Module,
                             cap: int = DEFAULT_BASIS_CAP) -> int:
    """[module restricted to kG : simple] for modules over the same B(m,p,n)."""
    group = group_elements(module.m, module.p, module.n, cap=cap)
    return character_inner_product(module, simple, group)


def restriction_multiplicity_formula(lam_label: OrbitLabel, mu_label: OrbitLabel,
                                     lifted: Module, m: int, p: int,
                                     cap: int = DEFAULT_BASIS_CAP) -> int:
    """eps_{r,q} sum_{rho in T} [lifted : S(sigma^rho mu)] computed over
    G(m,1,n), T a transversal of <sigma^hcf(t,u)> in Z/pZ."""
    from .clifford import SimpleModule
    if not epsilon(lam_label.r, mu_label.r, p, lam_label.t, mu_label.t):
        return 0
    n = lifted.n
    group = group_elements(m, 1, n, cap=cap)
    total = 0
    for rho in range(gcd(lam_label.t, mu_label.t)):
        nu = sigma(mu_label.lam, m, p, rho)
        total += character_inner_product(lifted, SimpleModule(OrbitLabel(nu, 1, 0), m, 1), group)
    return total


# -- Hom comparisons between B(m,p,n) and B(m,1,n) ------------------------------------

def hom_comparison(m: int, p: int, n: int, delta: DeltaParams) -> list[dict]:
    """Compare dim Hom(Delta(lam^r), Delta(mu^q)) over B(m,p,n) with
    eps_{r,q} sum_rho dim Hom(Delta(lam), Delta(sigma^rho mu)) over B(m,1,n),
    and likewise [Delta(lam^r) : L(mu^q)] = dim Hom(P(mu^q), Delta(lam^r)).
    Returns the mismatching pairs (empty when everything agrees)."""
    delta = _delta_for(delta, p)
    full = delta.with_p(1)
    labels = _labels(m, p, n)
    stds = {lab: standard_module(lab, n, delta) for lab in labels}
    bars: dict = {}

    def bar(lam):
        if lam not in bars:
            bars[lam] = StandardModule(lam, n, full)
        return bars[lam]

    out = []
    for a in labels:
        for b in labels:
            lhs = hom_dim(stds[a], stds[b])
            rhs = 0
            if epsilon(a.r, b.r, p, a.t, b.t):
                rhs = sum(hom_dim(bar(a.lam), bar(sigma(b.lam, m, p, rho)))
                          for rho in range(gcd(a.t, b.t)))
            if lhs != rhs:
                out.append({"kind": "standard", "source": str(a), "target": str(b),
                            "left": lhs, "right": rhs})
    here = decomp_oracle(m, p, n, delta)
    there = decomp_oracle(m, 1, n, full)
    for a in here.cols:
        for b in labels:
            rhs = 0
            if epsilon(a.r, b.r, p, a.t, b.t):
                rhs = sum(there[(sigma(b.lam, m, p, rho), a.lam)] for rho in range(gcd(a.t, b.t)))
            if here[(b, a)] != rhs:
                out.append({"kind": "projective", "source": str(a), "target": str(b),
                            "left": here[(b, a)], "right": rhs})
    return out


def rotate_label(label: OrbitLabel, m: int, p: int, k: int = 1) -> OrbitLabel:
    """lam^r -> lam^(r+k), the label index read modulo p/t."""
    return OrbitLabel(label.lam, label.t, (label.r + k) % (p // label.t))
