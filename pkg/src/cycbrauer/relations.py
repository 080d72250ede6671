"""Defining relations of G(m,p,n) and B(m,p,n) as words in diagrams, and
checks of those relations on matrix realisations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cyclotomic import CycNumber, DeltaParams
from .diagrams import (DiagCombination, LabelledDiagram, compose, gen_e, gen_s, gen_s_star,
                       gen_t, identity_diagram)
from .linalg import identity, matmul


@dataclass
class Relation:
    """lhs = scalar * rhs, both words read left to right (leftmost on top)."""
    name: str
    lhs: list
    rhs: list
    scalar: CycNumber | None = None

    def holds_in_algebra(self, delta: DeltaParams) -> bool:
        left = evaluate_word(self.lhs, delta)
        right = evaluate_word(self.rhs, delta)
        if self.scalar is not None:
            right = right.scale(self.scalar)
        return left == right

    def holds_on(self, module) -> bool:
        left = word_matrix(module, self.lhs)
        right = word_matrix(module, self.rhs)
        if self.scalar is not None:
            right = [[self.scalar * x for x in row] for row in right]
        return left == right


def evaluate_word(word: Sequence[LabelledDiagram], delta: DeltaParams) -> DiagCombination:
    out = None
    for x in word:
        term = DiagCombination.of(x)
        out = term if out is None else out.mul(term, delta)
    if out is None:
        raise ValueError("empty word: give the identity diagram explicitly")
    return out


def word_matrix(module, word: Sequence[LabelledDiagram]):
    out = identity(module.m, module.dim)
    for x in word:
        out = matmul(out, module.matrix(x), module.m)
    return out


def group_relations(m: int, p: int, n: int) -> list[Relation]:
    """Coxeter-like relations for G(m,1,n) (p = 1: generators t_1, s_i) or
    G(m,p,n) (generators t_1^p, s*_{1,2}, s_i)."""
    one = identity_diagram(n, m, p)
    s = {i: gen_s(n, m, p, i) for i in range(1, n)}
    rels = []
    for i in s:
        rels.append(Relation(f"s{i}^2", [s[i], s[i]], [one]))
        if i + 1 in s:
            rels.append(Relation(f"braid s{i} s{i+1}", [s[i], s[i + 1], s[i]],
                                 [s[i + 1], s[i], s[i + 1]]))
        for j in s:
            if j > i + 1:
                rels.append(Relation(f"s{i} s{j} commute", [s[i], s[j]], [s[j], s[i]]))
    if p == 1:
        t = gen_t(n, m, 1, 1)
        rels.append(Relation("t1^m", [t] * m, [one]))
        if n >= 2:
            rels.append(Relation("t1 s1 t1 s1", [t, s[1], t, s[1]], [s[1], t, s[1], t]))
        for i in s:
            if i >= 2:
                rels.append(Relation(f"t1 s{i} commute", [t, s[i]], [s[i], t]))
        return rels
    tp = gen_t(n, m, p, 1, p)
    rels.append(Relation("(t1^p)^(m/p)", [tp] * (m // p), [one]))
    for i in s:
        if i >= 2:
            rels.append(Relation(f"t1^p s{i} commute", [tp, s[i]], [s[i], tp]))
    if n >= 2:
        st = gen_s_star(n, m, p)
        rels.append(Relation("s*^2", [st, st], [one]))
        rels.append(Relation("t1^p s1 s*", [tp, s[1], st], [s[1], st, tp]))
        # s* t' s1 s* s1 ... = t' s1 s* s1 ..., both of length p + 1; for
        # m = p (t' = 1) this is the braid relation of length p
        alt1 = [s[1] if k % 2 == 0 else st for k in range(p - 1)]
        alt2 = [s[1] if k % 2 == 0 else st for k in range(p)]
        rels.append(Relation(f"s* t1^p s1 s* ... of length {p + 1}", [st, tp] + alt1,
                             [tp] + alt2))
        if n >= 3:
            rels.append(Relation("braid s* s2", [st, s[2], st], [s[2], st, s[2]]))
            rels.append(Relation("s* s1 s2 cycle", [st, s[1], s[2], st, s[1], s[2]],
                                 [s[2], st, s[1], s[2], st, s[1]]))
        for i in s:
            if i >= 3:
                rels.append(Relation(f"s* s{i} commute", [st, s[i]], [s[i], st]))
    return rels


def algebra_relations(m: int, p: int, n: int, delta: DeltaParams) -> list[Relation]:
    """Group relations plus the relations involving the arcs e_{i,i+1}."""
    rels = group_relations(m, p, n)
    if n < 2:
        return rels
    s = {i: gen_s(n, m, p, i) for i in range(1, n)}
    e = {i: gen_e(n, m, p, i) for i in range(1, n)}
    for i in e:
        rels.append(Relation(f"e{i}^2", [e[i], e[i]], [e[i]], delta.loop_value(0)))
        rels.append(Relation(f"s{i} e{i}", [s[i], e[i]], [e[i]]))
        rels.append(Relation(f"e{i} s{i}", [e[i], s[i]], [e[i]]))
        if i + 1 in e:
            rels.append(Relation(f"e{i} e{i+1} e{i}", [e[i], e[i + 1], e[i]], [e[i]]))
            rels.append(Relation(f"e{i+1} e{i} e{i+1}", [e[i + 1], e[i], e[i + 1]], [e[i + 1]]))
            rels.append(Relation(f"s{i+1} e{i} s{i+1}", [s[i + 1], e[i], s[i + 1]],
                                 [s[i], e[i + 1], s[i]]))
            rels.append(Relation(f"e{i} s{i+1} e{i}", [e[i], s[i + 1], e[i]], [e[i]]))
        for j in e:
            if j > i + 1:
                rels.append(Relation(f"e{i} e{j} commute", [e[i], e[j]], [e[j], e[i]]))
        for j in s:
            if abs(i - j) >= 2:
                rels.append(Relation(f"e{i} s{j} commute", [e[i], s[j]], [s[j], e[i]]))
    for k in range(0, m, p):
        if k:
            tk = gen_t(n, m, p, 1, k)
            rels.append(Relation(f"e1 t1^{k} e1", [e[1], tk, e[1]], [e[1]],
                                 delta.loop_value(k)))
    if p == 1:
        t1, t2 = gen_t(n, m, 1, 1), gen_t(n, m, 1, 2)
        rels.append(Relation("e1 t1 = e1 t2", [e[1], t1], [e[1], t2]))
        rels.append(Relation("t1 e1 = t2 e1", [t1, e[1]], [t2, e[1]]))
        for j in range(3, n + 1):
            tj = gen_t(n, m, 1, j)
            rels.append(Relation(f"e1 t{j} commute", [e[1], tj], [tj, e[1]]))
    else:
        st = gen_s_star(n, m, p)
        rels.append(Relation("e1 s*", [e[1], st], [e[1]]))
        rels.append(Relation("s* e1", [st, e[1]], [e[1]]))
    return rels


@dataclass
class AxiomReport:
    ok: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)

    def fail(self, what: str, witness=None):
        self.ok = False
        self.failures.append((what, witness))

    def __str__(self):
        if self.ok:
            return f"all {self.checked} checks passed"
        what, witness = self.failures[0]
        return f"{len(self.failures)} of {self.checked} checks failed; first: {what} (witness {witness})"


def _first_bad_column(a, b):
    for j in range(len(a[0]) if a else 0):
        if any(a[i][j] != b[i][j] for i in range(len(a))):
            return j
    return None


def module_axioms_check(module, delta: DeltaParams | None = None,
                        extra: Sequence[LabelledDiagram] = ()) -> AxiomReport:
    """Check every relation of ``algebra_relations`` on the module, that
    products of generators (and ``extra`` diagrams) act as the product of
    their matrices, and for projected modules that the generators keep the
    eigenspace stable."""
    from .modules import ProjectedModule
    delta = module.delta if delta is None else delta
    rep = AxiomReport()
    for rel in algebra_relations(module.m, module.p, module.n, delta):
        rep.checked += 1
        left = word_matrix(module, rel.lhs)
        right = word_matrix(module, rel.rhs)
        if rel.scalar is not None:
            right = [[rel.scalar * x for x in row] for row in right]
        if left != right:
            rep.fail(rel.name, _first_bad_column(left, right))
    gens = list(module.generators()) + list(extra)
    for x in gens:
        for y in gens:
            rep.checked += 1
            lhs = module.matrix(compose(x, y, delta))
            rhs = matmul(module.matrix(x), module.matrix(y), module.m)
            if lhs != rhs:
                rep.fail(f"product {x} * {y}", _first_bad_column(lhs, rhs))
    if isinstance(module, ProjectedModule):
        for x in module.generators():
            for j, vec in enumerate(module.basis_vectors):
                rep.checked += 1
                if not module.in_span(module.parent.apply(x, vec)):
                    rep.fail(f"{x} leaves the eigenspace", j)
    return rep
