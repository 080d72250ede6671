"""Invariant suites run by ``cycbrauer verify``. Each suite returns
(name, passed, detail)."""
from __future__ import annotations

import random

from .clifford import SimpleModule, projector
from .combinatorics import OrbitLabel, enumerate_lambda, m_partitions, specht_module, stabiliser_index
from .cyclotomic import CycNumber, DeltaParams
from .diagrams import basis_size, enumerate_basis
from .linalg import identity, matmul
from .modules import StandardModule, restrict_standard, sigma_twist_matrix, standard_module
from .relations import module_axioms_check


def suite_basis(m, p, n, delta, rng, cap):
    counts = [len(enumerate_basis(m, p, n, cap=cap * p, residue=r)) for r in range(p)]
    ok = all(c == basis_size(m, p, n) for c in counts)
    return ok, f"residue class sizes {counts}, closed form {basis_size(m, p, n)}"


def suite_relations(m, p, n, delta, rng, cap):
    for lab in enumerate_lambda(m, p, n):
        rep = module_axioms_check(standard_module(lab, n, delta))
        if not rep.ok:
            return False, f"{lab}: {rep}"
    return True, ""


def suite_clifford(m, p, n, delta, rng, cap):
    """Projectors on each Specht module of size n are orthogonal idempotents
    summing to 1, and the simple summands have the right total dimension."""
    for lam in m_partitions(m, n):
        sp = specht_module(lam, m)
        t = stabiliser_index(lam, m, p)
        zero = [[CycNumber.zero(m)] * sp.dim for _ in range(sp.dim)]
        projs = [projector(lam, m, p, r) for r in range(p // t)]
        total = zero
        for a, pa in enumerate(projs):
            total = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(total, pa)]
            for b, pb in enumerate(projs):
                if matmul(pa, pb, m) != (pa if a == b else zero):
                    return False, f"p_{a} p_{b} is wrong for {lam}"
        if total != identity(m, sp.dim):
            return False, f"projectors of {lam} do not sum to the identity"
        dims = [SimpleModule(OrbitLabel(lam, t, r), m, p).dim for r in range(p // t)]
        if sum(dims) != sp.dim:
            return False, f"simple summands of {lam} have dimensions {dims}, total {sp.dim}"
    return True, ""


def suite_dimensions(m, p, n, delta, rng, cap):
    """The summands Delta(lam^r) of each restricted Delta(lam) add up to it."""
    for size in range(n, -1, -2):
        for lam in m_partitions(m, size):
            parent = StandardModule(lam, n, delta)
            parts = restrict_standard(lam, n, delta)
            if sum(x.dim for x in parts) != parent.dim:
                return False, f"{lam}: summands {[x.dim for x in parts]} vs {parent.dim}"
    return True, ""


def suite_twist(m, p, n, delta, rng, cap):
    d = m // p
    basis = enumerate_basis(m, 1, n, cap=cap * p, residue=None)
    sample = rng.sample(basis, min(20, len(basis)))
    for size in range(n, -1, -2):
        for lam in m_partitions(m, size):
            src = StandardModule(lam, n, delta)
            tgt, s = sigma_twist_matrix(src)
            for x in sample:
                c = CycNumber.zeta(m, d * x.label_sum)
                lhs = matmul(tgt.matrix(x), s, m)
                rhs = [[c * v for v in row] for row in matmul(s, src.matrix(x), m)]
                if lhs != rhs:
                    return False, f"twist of {lam} fails on {x}"
    return True, ""


def suite_decomposition(m, p, n, delta, rng, cap):
    from .decomposition import decomp_formula, decomp_oracle
    oracle = decomp_oracle(m, p, n, delta, cap=cap)
    if not oracle.is_unitriangular():
        return False, "oracle matrix is not unitriangular"
    formula = decomp_formula(m, p, n, delta, cols=oracle.cols)
    diff = oracle.diff(formula)
    return not diff, f"{len(diff)} differing entries" if diff else ""


SUITES = [("basis counts", suite_basis), ("relations on standard modules", suite_relations),
          ("projectors", suite_clifford), ("restriction dimensions", suite_dimensions),
          ("sigma twist", suite_twist), ("decomposition formula vs oracle", suite_decomposition)]


def run_suites(m: int, p: int, n: int, delta: DeltaParams, seed: int = 0,
               cap: int = 2000) -> list[tuple[str, bool, str]]:
    rng = random.Random(seed)
    out = []
    for name, suite in SUITES:
        ok, detail = suite(m, p, n, delta, rng, cap)
        out.append((name, ok, detail))
    return out
