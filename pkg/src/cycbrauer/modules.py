"""Matrix realisations of modules over B(m,1,n) and B(m,p,n).

``StandardModule`` is V_l (x) S(lam) for B(m,1,n): a diagram acts on the
tangle part and the residual group element on the free lines acts on the
Specht factor. ``ProjectedModule`` cuts out a sigma^t-eigenspace of a
standard module, giving a B(m,p,n)-module. ``QuotientModule`` realises
M / U for a submodule U, which is how simple heads are built.
"""
from __future__ import annotations

from functools import cached_property
from math import gcd
from typing import Sequence

from .combinatorics import (MPartition, SpechtModule, mp_size, mp_str, sigma,
                            specht_module, stabiliser_index)
from .cyclotomic import CycNumber, DeltaParams
from .diagrams import (DiagCombination, LabelledDiagram, gen_e, gen_s, gen_s_star,
                       gen_t)
from .linalg import Matrix, RowReducer, nullspace, zeros
from .tangles import Tangle, act_on_tangle, enumerate_tangles

Column = dict[int, CycNumber]


def algebra_generators(m: int, p: int, n: int) -> list[LabelledDiagram]:
    """Generators of B(m,p,n): t_1, s_i, e_{1,2} for p = 1 and
    s*_{1,2}, s_i, t_1^p, e_{1,2} otherwise."""
    gens = []
    if p == 1:
        gens.append(gen_t(n, m, 1, 1, 1))
    else:
        if n >= 2:
            gens.append(gen_s_star(n, m, p, 1, 2))
        gens.append(gen_t(n, m, p, 1, p))
    gens.extend(gen_s(n, m, p, i) for i in range(1, n))
    if n >= 2:
        gens.append(gen_e(n, m, p, 1, 2))
    if p > 1 and n == 2:
        # s*, s_1, t^p, e do not generate B(m,p,2): add the labelled caps
        gens.extend(LabelledDiagram.build(2, m, p, [(1, 2, k), (3, 4, -k)])
                    for k in range(1, m))
    return gens


class Module:
    """A finite-dimensional module given by the action of diagrams."""

    m: int
    n: int
    p: int  # the module is a module for B(m, p, n)
    delta: DeltaParams
    dim: int

    def __init__(self):
        self._matrices: dict = {}

    def column(self, x: LabelledDiagram, j: int) -> Column:
        raise NotImplementedError

    def matrix(self, x) -> Matrix:
        if isinstance(x, DiagCombination):
            out = zeros(self.m, self.dim, self.dim)
            for d, c in x:
                md = self.matrix(d)
                out = [[a + c * b if b else a for a, b in zip(ra, rb)]
                       for ra, rb in zip(out, md)]
            return out
        if x not in self._matrices:
            mat = zeros(self.m, self.dim, self.dim)
            for j in range(self.dim):
                for i, v in self.column(x, j).items():
                    mat[i][j] = v
            self._matrices[x] = mat
        return self._matrices[x]

    def trace(self, x: LabelledDiagram) -> CycNumber:
        if x in self._matrices:
            mat = self._matrices[x]
            total = CycNumber.zero(self.m)
            for i in range(self.dim):
                total = total + mat[i][i]
            return total
        total = CycNumber.zero(self.m)
        for j in range(self.dim):
            v = self.column(x, j).get(j)
            if v is not None:
                total = total + v
        return total

    def generators(self) -> list[LabelledDiagram]:
        return algebra_generators(self.m, self.p, self.n)


class StandardModule(Module):
    """The standard module V_l (x) S(lam) of B(m,1,n).

    ``delta`` may carry any p; its loop values vanish off multiples of p,
    which is the specialisation under which B(m,p,n) sits inside B(m,1,n).
    """

    def __init__(self, lam: MPartition, n: int, delta: DeltaParams):
        super().__init__()
        size = mp_size(lam)
        if size > n or (n - size) % 2:
            raise ValueError(f"{mp_str(lam)} does not label a standard module for n={n}")
        self.lam = lam
        self.m = delta.m
        self.n = n
        self.p = 1
        self.delta = delta
        self.l = (n - size) // 2
        self.specht: SpechtModule = specht_module(lam, self.m)
        self.tangles = enumerate_tangles(self.m, n, self.l)
        self.tangle_index = {v: k for k, v in enumerate(self.tangles)}
        self.sdim = self.specht.dim
        self.dim = len(self.tangles) * self.sdim
        self._pushes: dict = {}

    def index(self, vi: int, k: int) -> int:
        return vi * self.sdim + k

    def split(self, j: int) -> tuple[int, int]:
        return divmod(j, self.sdim)

    def push(self, x: LabelledDiagram, vi: int):
        """x applied to the vi-th tangle: None or (scalar, new index, group matrix)."""
        key = (x, vi)
        if key not in self._pushes:
            img = act_on_tangle(x, self.tangles[vi])
            res = None
            if img is not None:
                coeff = CycNumber.one(self.m)
                for lab in img.loops:
                    coeff = coeff * self.delta.loop_value(lab)
                if coeff:
                    res = (coeff, self.tangle_index[img.tangle],
                           self.specht.matrix_group(img.perm, img.labels))
            self._pushes[key] = res
        return self._pushes[key]

    def column(self, x: LabelledDiagram, j: int) -> Column:
        vi, k = self.split(j)
        res = self.push(x, vi)
        if res is None:
            return {}
        coeff, wi, g = res
        base = wi * self.sdim
        return {base + r: coeff * g[r][k] for r in range(self.sdim) if g[r][k]}

    def apply(self, x: LabelledDiagram, vec: dict[int, CycNumber]) -> dict[int, CycNumber]:
        out: dict[int, CycNumber] = {}
        for j, c in vec.items():
            for i, v in self.column(x, j).items():
                out[i] = out[i] + c * v if i in out else c * v
        return {i: v for i, v in out.items() if v}

    def generators(self) -> list[LabelledDiagram]:
        return algebra_generators(self.m, 1, self.n)

    def basis_tangle(self, j: int) -> Tangle:
        return self.tangles[j // self.sdim]

    # -- the sigma twist ------------------------------------------------------
    def sigma_twist(self, vi: int, k: int, power: int = 1) -> tuple[CycNumber, int, int]:
        """sigma^power (v (x) t) = xi^(-d*power*q) v (x) sigma^power(t), q the
        label total of v. Returns (scalar, tangle index, tableau index in the
        Specht module of sigma^power(lam))."""
        p = self.delta.p
        d = self.m // p
        q = self.tangles[vi].label_sum
        idx = self.specht.sigma_index(p, power)
        return CycNumber.zeta(self.m, -d * power * q), vi, idx[k]

    def __repr__(self):
        return f"StandardModule({mp_str(self.lam)}, n={self.n}, l={self.l}, dim={self.dim})"


class ProjectedModule(Module):
    """The B(m,p,n)-module ker(sigma^t - xi^(dtr)) inside a standard module
    of B(m,1,n), on the basis p_r(v (x) t) with t(1) < t*d."""

    def __init__(self, parent: StandardModule, r: int):
        super().__init__()
        p = parent.delta.p
        self.parent = parent
        self.m, self.n, self.p, self.delta = parent.m, parent.n, p, parent.delta
        self.lam = parent.lam
        self.t = stabiliser_index(parent.lam, self.m, p)
        self.r = r
        if not 0 <= r < p // self.t:
            raise ValueError(f"r={r} out of range for stabiliser index t={self.t}")
        d = self.m // p
        self.d = d
        sp = parent.specht
        if sp.size:
            reps = [k for k in range(sp.dim) if sp.first_component[k] < self.t * d]
            self.positions = [parent.index(vi, k) for vi in range(len(parent.tangles))
                              for k in reps]
            self.scale = CycNumber.from_rational(self.m, p // self.t)
        else:
            # sigma only twists the arc labels: p_r keeps the tangles of grade -r
            self.positions = [vi for vi, v in enumerate(parent.tangles)
                              if (v.label_sum + r) % p == 0]
            self.scale = CycNumber.one(self.m)
        self.coord = {pos: j for j, pos in enumerate(self.positions)}
        self.dim = len(self.positions)

    def projector_image(self, vi: int, k: int) -> dict[int, CycNumber]:
        """p_r(v (x) t) in the coordinates of the parent module."""
        par = self.parent
        p, t, d = self.p, self.t, self.d
        out: dict[int, CycNumber] = {}
        weight = CycNumber.from_rational(self.m, 1) / (p // t)
        for i in range(p // t):
            c, wi, kk = par.sigma_twist(vi, k, i * t)
            pos = par.index(wi, kk)
            v = weight * CycNumber.zeta(self.m, -i * d * t * self.r) * c
            out[pos] = out[pos] + v if pos in out else v
        return {i: v for i, v in out.items() if v}

    @cached_property
    def basis_vectors(self) -> list[dict[int, CycNumber]]:
        return [self.projector_image(*self.parent.split(pos)) for pos in self.positions]

    def coordinates(self, vec: dict[int, CycNumber]) -> Column:
        return {self.coord[pos]: v * self.scale for pos, v in vec.items() if pos in self.coord}

    def column(self, x: LabelledDiagram, j: int) -> Column:
        return self.coordinates(self.parent.apply(x, self.basis_vectors[j]))

    def in_span(self, vec: dict[int, CycNumber]) -> bool:
        """Whether a parent vector lies in this eigenspace."""
        coords = self.coordinates(vec)
        rebuilt: dict[int, CycNumber] = {}
        for j, c in coords.items():
            for pos, v in self.basis_vectors[j].items():
                rebuilt[pos] = rebuilt[pos] + c * v if pos in rebuilt else c * v
        keys = set(rebuilt) | set(vec)
        zero = CycNumber.zero(self.m)
        return all(rebuilt.get(k, zero) == vec.get(k, zero) for k in keys)

    def basis_tangle(self, j: int) -> Tangle:
        return self.parent.basis_tangle(self.positions[j])

    def generators(self):
        return algebra_generators(self.m, self.p, self.n)

    def __repr__(self):
        return (f"ProjectedModule({mp_str(self.lam)}^{self.r}, t={self.t}, "
                f"n={self.n}, dim={self.dim})")


class QuotientModule(Module):
    """parent / span(sub_vectors); the complement basis is formed by the
    non-pivot coordinates of the echelonised subspace."""

    def __init__(self, parent: Module, sub_vectors: Sequence[Sequence[CycNumber]]):
        super().__init__()
        self.parent = parent
        self.m, self.n, self.p, self.delta = parent.m, parent.n, parent.p, parent.delta
        self.reducer = RowReducer([list(v) for v in sub_vectors], parent.dim)
        self.keep = [c for c in range(parent.dim) if c not in self.reducer.pivot_set]
        self.coord = {c: j for j, c in enumerate(self.keep)}
        self.dim = len(self.keep)

    def column(self, x: LabelledDiagram, j: int) -> Column:
        c = self.keep[j]
        mat = self.parent.matrix(x)
        vec = [row[c] for row in mat]
        red = self.reducer.reduce(vec)
        return {self.coord[i]: v for i, v in enumerate(red) if v and i in self.coord}

    def generators(self):
        return self.parent.generators()


# -- radicals and simple heads -----------------------------------------------------

def cap_element(v: Tangle, p: int) -> LabelledDiagram:
    """The diagram with v as its southern half and a fixed northern half:
    free south nodes run in order to north nodes 1..N and the remaining
    north nodes are capped in consecutive pairs. A label is added on the
    northern half so that the label sum is a multiple of p."""
    n, m = v.n, v.m
    big_n = n - 2 * v.l
    strands = [(n + a, n + b, lab) for a, b, lab in v.arcs]
    strands += [(k, n + j, 0) for k, j in enumerate(v.free, start=1)]
    strands += [(big_n + 2 * i + 1, big_n + 2 * i + 2, 0) for i in range(v.l)]
    fix = (-v.label_sum) % p
    if fix:
        strands = [(a, b, lab + fix) if (a, b) == min((a, b) for a, b, _ in strands if a <= n)
                   else (a, b, lab) for a, b, lab in strands]
    return LabelledDiagram.build(n, m, p, strands)


def top_tangle_of(v: Tangle, p: int) -> Tangle:
    """The northern half of ``cap_element(v, p)`` as a tangle (meaningful
    when its first northern node is capped, i.e. when N = 0)."""
    x = cap_element(v, p)
    n = v.n
    return Tangle.build(n, v.m, [(a, b, lab) for a, b, lab in x.strands if b <= n])


def radical_basis(module) -> list[list[CycNumber]]:
    """Basis of rad(M) = {z : X z = 0 for all diagrams X with exactly
    n - 2l through strands}, for a standard or projected module."""
    base = module if isinstance(module, StandardModule) else module.parent
    if base.l == 0:
        return []
    rows: list[list[CycNumber]] = []
    for v in base.tangles:
        rows.extend(r for r in module.matrix(cap_element(v, module.p)) if any(r))
    if not rows:
        return nullspace([], module.dim, module.m)
    return nullspace(rows, module.dim, module.m)


def simple_head(module) -> QuotientModule:
    return QuotientModule(module, radical_basis(module))


def gram_matrix(module) -> Matrix:
    """The square matrix pairing the basis against the cap elements:
    entry ((v, s), (w, t)) is the coefficient of top(v) (x) s in
    cap(v) . (w (x) t). Its kernel is the radical."""
    base = module if isinstance(module, StandardModule) else module.parent
    rows: Matrix = []
    for v in base.tangles:
        x = cap_element(v, module.p)
        top = Tangle.build(v.n, v.m, [(a, b, lab) for a, b, lab in x.strands if b <= v.n])
        mat = module.matrix(x)
        for j in range(module.dim):
            if module.basis_tangle(j) == top:
                rows.append(mat[j])
    return rows


def standard_module(label, n: int, delta: DeltaParams):
    """Delta(lam) for an m-partition (over B(m,1,n)) or Delta(lam^r) for an
    OrbitLabel (over B(m,p,n), with p = delta.p)."""
    from .combinatorics import OrbitLabel
    if isinstance(label, OrbitLabel):
        return ProjectedModule(StandardModule(label.lam, n, delta), label.r)
    return StandardModule(label, n, delta)


def epsilon(r: int, q: int, p: int, t: int, u: int) -> int:
    """Kronecker delta of r and q modulo hcf(p/t, p/u)."""
    h = gcd(p // t, p // u)
    return int((r - q) % h == 0)


# -- generator actions by case analysis ------------------------------------------

def _swap_nodes(v: Tangle, a: int, b: int) -> Tangle:
    swap = {a: b, b: a}
    return Tangle.build(v.n, v.m, [(swap.get(x, x), swap.get(y, y), lab)
                                   for x, y, lab in v.arcs])


def act_generator(mod: StandardModule, gen: str, j: int, i: int = 1) -> Column:
    """Apply ``t1``, ``s`` (that is s_{i,i+1}) or ``e12`` to the j-th basis
    vector v (x) t of a standard module by explicit case analysis on where
    the nodes sit in v. Independent of the path-following code behind
    ``StandardModule.column``; the two are compared in the tests."""
    m = mod.m
    vi, k = mod.split(j)
    v = mod.tangles[vi]
    sp = mod.specht
    one = CycNumber.one(m)

    def at(w: Tangle, kk: int, c: CycNumber = one) -> Column:
        return {mod.index(mod.tangle_index[w], kk): c}

    if gen == "t1":
        if 1 in v.free:
            return at(v, k, CycNumber.zeta(m, sp.component(k, 1)))
        (a, b, lab), = [arc for arc in v.arcs if 1 in arc[:2]]
        return at(v.relabel(a, b, lab + 1), k)

    if gen == "s":
        if i in v.free and i + 1 in v.free:
            b = v.free.index(i) + 1
            return {mod.index(vi, kk): c for kk, c in sp.act_s(b, k).items()}
        return at(_swap_nodes(v, i, i + 1), k)

    if gen != "e12":
        raise ValueError(f"unknown generator {gen!r}")
    free1, free2 = 1 in v.free, 2 in v.free
    if free1 and free2:
        return {}
    p1, p2 = v.partner[1], v.partner[2]
    if p1 == 2:
        lab = v.node_label[1]
        c = mod.delta.loop_value(lab)
        return at(v.relabel(1, 2, 0), k, c) if c else {}
    if free2:
        # e12 = e12 s12, and s12 moves the free line from node 2 to node 1
        v = _swap_nodes(v, 1, 2)
        free1, p2 = True, v.partner[2]
    if free1:
        # the free line at node 1 is rerouted to the far end of the arc at 2
        lab = v.node_label[2]
        arcs = [arc for arc in v.arcs if 2 not in arc[:2]] + [(1, 2, 0)]
        w = Tangle.build(v.n, m, arcs)
        bottom = [1 if x == p2 else -v.partner[x] for x in w.free]
        col = sp.matrix_perm(tuple(bottom))
        scale = CycNumber.zeta(m, lab * sp.component(k, 1)) if sp.size else one
        wi = mod.tangle_index[w]
        return {mod.index(wi, r): scale * col[r][k] for r in range(sp.dim) if col[r][k]}
    # both nodes on arcs (1, q) and (2, s): join q to s
    lab = v.node_label[1] + v.node_label[2]
    arcs = [arc for arc in v.arcs if 1 not in arc[:2] and 2 not in arc[:2]]
    arcs += [(1, 2, 0), (p1, p2, lab)]
    return at(Tangle.build(v.n, m, arcs), k)


def sigma_twist_matrix(mod: StandardModule, power: int = 1) -> tuple[StandardModule, Matrix]:
    """The map v (x) t -> xi^(-d*power*q) v (x) sigma^power(t) from Delta(lam)
    to Delta(sigma^power lam), q the label total of v. It intertwines x with
    xi^(d*power*labelsum(x)) x."""
    p = mod.delta.p
    target = StandardModule(sigma(mod.lam, mod.m, p, power), mod.n, mod.delta)
    out = zeros(mod.m, target.dim, mod.dim)
    for j in range(mod.dim):
        vi, k = mod.split(j)
        c, wi, kk = mod.sigma_twist(vi, k, power)
        out[target.index(wi, kk)][j] = c
    return target, out


def restrict_standard(lam: MPartition, n: int, delta: DeltaParams) -> list[ProjectedModule]:
    """The summands Delta(lam^r), 0 <= r < p/t, of Delta(lam) restricted to
    B(m, p, n), p = delta.p."""
    parent = StandardModule(lam, n, delta)
    t = stabiliser_index(lam, delta.m, delta.p)
    return [ProjectedModule(parent, r) for r in range(delta.p // t)]
