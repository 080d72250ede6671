"""Simple modules S(lam^r) of the group algebra kG(m,p,n).

S(lam^r) is cut out of the Specht module S(lam) of G(m,1,n) by the
projector p_r onto an eigenspace of sigma^t. Actions are obtained by
restriction: the G(m,1,n) matrices are applied to the projected basis.
"""
from __future__ import annotations

from .combinatorics import (MPartition, OrbitLabel, sigma, specht_module,
                            stabiliser_index)
from .cyclotomic import CycNumber, DeltaParams
from .diagrams import LabelledDiagram, gen_s, gen_s_star, gen_t
from .linalg import Matrix, zeros
from .modules import ProjectedModule, StandardModule


def sigma_matrix(lam: MPartition, m: int, p: int, power: int = 1) -> Matrix:
    """sigma^power on S(lam) as a matrix; needs sigma^power(lam) = lam."""
    if sigma(lam, m, p, power) != lam:
        raise ValueError(f"sigma^{power} does not fix {lam}")
    sp = specht_module(lam, m)
    out = zeros(m, sp.dim, sp.dim)
    one = CycNumber.one(m)
    for k, kk in enumerate(sp.sigma_index(p, power)):
        out[kk][k] = one
    return out


def projector(lam: MPartition, m: int, p: int, r: int) -> Matrix:
    """p_r = (t/p) sum_{0 <= i < p/t} xi^(-idtr) sigma^(it) on S(lam)."""
    t = stabiliser_index(lam, m, p)
    if not 0 <= r < p // t:
        raise ValueError(f"r={r} out of range: need 0 <= r < {p // t}")
    d = m // p
    sp = specht_module(lam, m)
    out = zeros(m, sp.dim, sp.dim)
    w = CycNumber.from_rational(m, 1) / (p // t)
    for i in range(p // t):
        c = w * CycNumber.zeta(m, -i * d * t * r)
        for k, kk in enumerate(sp.sigma_index(p, i * t)):
            out[kk][k] = out[kk][k] + c
    return out


class SimpleModule(ProjectedModule):
    """S(lam^r) for G(m,p,n) with n = |lam|, on the basis p_r(t), t(1) < td.

    Group elements of G(m,p,n) are the arc-free diagrams of B(m,p,n), so
    ``matrix`` accepts any of them as well as the named generators.
    """

    def __init__(self, label: OrbitLabel, m: int, p: int):
        n = sum(sum(part) for part in label.lam)
        delta = DeltaParams(m, p, [1] * (m // p))
        super().__init__(StandardModule(label.lam, n, delta), label.r)
        self.label = label

    @property
    def t_p(self) -> Matrix:
        return self.matrix(gen_t(self.n, self.m, self.p, 1, self.p))

    @property
    def s_star(self) -> Matrix:
        return self.matrix(gen_s_star(self.n, self.m, self.p, 1, 2))

    def s(self, i: int) -> Matrix:
        return self.matrix(gen_s(self.n, self.m, self.p, i))

    def character(self, g: LabelledDiagram) -> CycNumber:
        return self.trace(g)

    def __repr__(self):
        return f"SimpleModule({self.label}, dim={self.dim})"


def simple_module(label: OrbitLabel, m: int, p: int) -> SimpleModule:
    return SimpleModule(label, m, p)


def printed_s_action(mod: SimpleModule, i: int) -> Matrix:
    """s_{i,i+1} on S(lam^r) from the axial-distance formula applied to
    the representatives t^r. Valid for i >= 1 whenever i and i+1 stay in
    components below td or the swap preserves that set."""
    sp = mod.parent.specht
    out = zeros(mod.m, mod.dim, mod.dim)
    reps = [mod.parent.split(pos)[1] for pos in mod.positions]
    where = {k: j for j, k in enumerate(reps)}
    for j, k in enumerate(reps):
        for kk, c in sp.act_s(i, k).items():
            if kk not in where:
                return None
            out[where[kk]][j] = c
    return out
