"""Exact arithmetic in the cyclotomic field Q(xi_m).

Elements are residues of Q[x] modulo the m-th cyclotomic polynomial, stored
as coefficient tuples in the power basis 1, x, ..., x^(phi(m)-1), where x
stands for a fixed primitive m-th root of unity xi.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first.

    Computed by dividing x^m - 1 by Phi_e for every proper divisor e of m.
    """
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for e in range(1, m):
        if m % e == 0:
            num = _exact_divide(num, list(cyclotomic_polynomial(e)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    # den is monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    assert not any(num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int, top: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reductions of x^k modulo Phi_m for 0 <= k < top."""
    phi = euler_phi(m)
    poly = cyclotomic_polynomial(m)
    rows = []
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(top):
        rows.append(tuple(cur))
        # multiply by x and reduce using x^phi = -sum(poly[i] x^i)
        lead = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if lead:
            for i in range(phi):
                cur[i] -= lead * poly[i]
    return tuple(rows)


class CycNumber:
    """An element of Q(xi_m).

    >>> z = CycNumber.zeta(4, 1)
    >>> z * z == -1
    True
    """

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs: Sequence = ()):
        phi = euler_phi(m)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            cs = _reduce(m, cs)
        cs += [Fraction(0)] * (phi - len(cs))
        self.m = m
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, m: int, coeffs: tuple) -> "CycNumber":
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, m: int, value) -> "CycNumber":
        return cls(m, [Fraction(value)])

    @classmethod
    def zero(cls, m: int) -> "CycNumber":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "CycNumber":
        return cls(m, [1])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycNumber":
        """xi_m ** k, with k taken modulo m."""
        return cls._raw(m, _power_table(m, m)[k % m])

    # -- coercion --------------------------------------------------------
    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            if other.m != self.m:
                raise ValueError(
                    f"mismatched conductors {self.m} and {other.m}")
            return other
        if isinstance(other, (int, Rational)):
            return CycNumber.from_rational(self.m, other)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber._raw(
            self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber._raw(
            self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycNumber):
            f = Fraction(other)
            return CycNumber._raw(self.m, tuple(a * f for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return CycNumber._raw(self.m, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycNumber._raw(self.m, tuple(_reduce(self.m, prod)))

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(xi_%d)" % self.m)
        if len(self.coeffs) == 1:
            return CycNumber._raw(self.m, (1 / self.coeffs[0],))
        # solve (multiplication-by-self matrix) y = e_0
        phi = len(self.coeffs)
        basis = _power_table(self.m, 2 * phi)
        cols = []
        for j in range(phi):
            col = [Fraction(0)] * phi
            for i, ai in enumerate(self.coeffs):
                if ai:
                    row = basis[i + j]
                    for k in range(phi):
                        col[k] += ai * row[k]
            cols.append(col)
        aug = [[cols[j][i] for j in range(phi)] + [Fraction(int(i == 0))]
               for i in range(phi)]
        sol = _solve_fractions(aug, phi)
        return CycNumber._raw(self.m, tuple(sol))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycNumber):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            f = 1 / Fraction(other)
            return CycNumber._raw(self.m, tuple(a * f for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNumber.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CycNumber):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return (self.coeffs[0] == other
                    and not any(self.coeffs[1:]))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.m, self.coeffs))
        return self._hash

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __complex__(self):
        import cmath
        z = cmath.exp(2j * cmath.pi / self.m)
        return complex(sum(float(c) * z ** i for i, c in enumerate(self.coeffs)))

    def __repr__(self):
        return f"CycNumber({self.m}, {self})"

    def __str__(self):
        return format_poly(self.coeffs)


def _reduce(m: int, poly: Sequence[Fraction]) -> list[Fraction]:
    phi = euler_phi(m)
    if len(poly) <= phi:
        return list(poly) + [Fraction(0)] * (phi - len(poly))
    table = _power_table(m, max(len(poly), 2 * phi))
    out = list(poly[:phi])
    for k in range(phi, len(poly)):
        c = poly[k]
        if c:
            row = table[k]
            for i in range(phi):
                out[i] += c * row[i]
    return out


def _solve_fractions(aug: list[list[Fraction]], n: int) -> list[Fraction]:
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def zeta(m: int, k: int = 1) -> CycNumber:
    return CycNumber.zeta(m, k)


# -- text syntax -----------------------------------------------------------

def format_poly(coeffs: Iterable[Fraction]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            body = str(c)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            if c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = f"{c}*{mono}"
        terms.append(body)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


_TERM = re.compile(
    r"""^(?P<coef>[0-9]+(?:/[0-9]+)?)?\s*(?:\*?\s*(?P<x>x)(?:\s*\^\s*(?P<exp>[0-9]+))?)?$""")


def parse_cyc(text: str, m: int) -> CycNumber:
    """Parse a polynomial in ``x`` with rational coefficients, e.g.
    ``"1/2 + 3*x^2"``; ``x`` is read as xi_m."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty CycNumber string")
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse CycNumber {text!r}")
    total = CycNumber.zero(m)
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        mt = _TERM.match(body)
        if not mt or (mt.group("coef") is None and mt.group("x") is None):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        coef = Fraction(mt.group("coef")) if mt.group("coef") else Fraction(1)
        if mt.group("x"):
            exp = int(mt.group("exp")) if mt.group("exp") else 1
            total = total + CycNumber.zeta(m, exp) * (sign * coef)
        else:
            total = total + sign * coef
    return total


# -- loop parameters -------------------------------------------------------

class DeltaParams:
    """Loop parameters (delta_0, delta_p, ..., delta_{(d-1)p}) for B(m,p,n).

    ``loop_value(j)`` returns the scalar attached to a removed closed loop
    with label ``j``: ``delta_j`` when p divides j and zero otherwise.
    """

    def __init__(self, m: int, p: int, values: Sequence):
        if m % p:
            raise ValueError(f"p={p} must divide m={m}")
        d = m // p
        if len(values) != d:
            raise ValueError(f"expected {d} loop parameters, got {len(values)}")
        self.m, self.p, self.d = m, p, d
        self.values = tuple(
            v if isinstance(v, CycNumber) else CycNumber.from_rational(m, v)
            for v in values)
        for v in self.values:
            if v.m != m:
                raise ValueError("loop parameter lives in the wrong field")

    def loop_value(self, label: int) -> CycNumber:
        label %= self.m
        if label % self.p:
            return CycNumber.zero(self.m)
        return self.values[label // self.p]

    def is_zero(self) -> bool:
        return not any(self.values)

    def with_p(self, p: int) -> "DeltaParams":
        """The same loop values seen as parameters of B(m,p',n), for p' | p.

        Only the specialisation in which delta_j vanishes off multiples of p
        is representable, so p' must divide p."""
        if self.p % p:
            raise ValueError(f"cannot view p={self.p} parameters at p={p}")
        full = [self.loop_value(j) for j in range(self.m)]
        return DeltaParams(self.m, p, full[::p])

    def __eq__(self, other):
        return (isinstance(other, DeltaParams) and self.m == other.m
                and self.p == other.p and self.values == other.values)

    def __hash__(self):
        return hash((self.m, self.p, self.values))

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"DeltaParams(m={self.m}, p={self.p}, [{vals}])"


def cyclotomic_parameter(delta: DeltaParams, r: int) -> CycNumber:
    """(1/m) * sum_{i<d} xi^(i*p*r) * delta_{ip}."""
    m, p, d = delta.m, delta.p, delta.d
    if not 0 <= r < d:
        raise ValueError(f"r={r} outside [0, {d})")
    total = CycNumber.zero(m)
    for i, v in enumerate(delta.values):
        total = total + CycNumber.zeta(m, i * p * r) * v
    return total / m


def generic_delta(m: int, p: int, seed: int = 0) -> DeltaParams:
    """Loop parameters standing in for indeterminates: large random rationals.

    Not truly transcendental; callers that need genericity certify it (for
    example by checking every Gram rank)."""
    import random
    rng = random.Random(seed)
    vals = [Fraction(rng.randrange(10**6, 10**7), rng.randrange(2, 997))
            for _ in range(m // p)]
    return DeltaParams(m, p, vals)


def multiplicative_order(z: CycNumber) -> int:
    one = CycNumber.one(z.m)
    w = z
    for k in range(1, 2 * z.m + 1):
        if w == one:
            return k
        w = w * z
    raise ValueError(f"{z} is not a root of unity of order dividing {z.m}")


def order_of_zeta(m: int, k: int) -> int:
    return m // gcd(m, k % m) if k % m else 1
