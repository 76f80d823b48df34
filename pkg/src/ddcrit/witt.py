"""Truncated p-typical Witt vectors over Laurent-polynomial rings.

Addition polynomials are computed once per (p, n) by the ghost-component
recursion over exact rationals (sympy), the integrality of the result is
asserted, and the mod-p reductions are cached.  Everything downstream —
Frobenius, the isogeny wp = F - id, standard-form reduction, upper
ramification breaks, the congruence/KGB tests and jump reduction — is exact
arithmetic over an explicit finite field.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import lcm

import sympy

from .errors import (
    ExtensionCapExceeded,
    InvalidProfile,
    LevelTooHigh,
    MixedClasses,
    NotStandardForm,
    SpecMismatch,
)
from .gf import FieldElement, FieldSpec, make_field, pth_root
from .poly import LaurentPoly, embed

MAX_LEVEL = 3
DEFAULT_EXTENSION_CAP = 16


@dataclass(frozen=True)
class WittVector:
    """Element of W_n(k[t^{-1}]): an n-tuple of Laurent polynomials."""

    spec: FieldSpec
    entries: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("Witt vector needs at least one entry")
        if any(e.spec != self.spec for e in self.entries):
            raise SpecMismatch("Witt entries over different field specs")

    @property
    def level(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> "WittVector":
        return cls(spec, (LaurentPoly.zero(spec),) * n)

    def __bool__(self):
        return any(self.entries)

    def map_coeffs(self, fn, spec: FieldSpec) -> "WittVector":
        return WittVector(spec, tuple(e.map_coeffs(fn, spec) for e in self.entries))

    def to_json(self):
        return [e.to_json() for e in self.entries]


# -- addition polynomials ----------------------------------------------------


@functools.lru_cache(maxsize=None)
def witt_sum_polys(p: int, n: int, max_level: int = MAX_LEVEL):
    """Addition polynomials S_0..S_{n-1} for W_n in characteristic p.

    Each S_i is returned as a tuple of terms (c, xe, ye) with integer
    coefficient c in (0, p) and exponent vectors xe, ye of length n, so that
    S_i = sum c * prod X_j^xe_j * prod Y_j^ye_j over F_p.

    The recursion S_i = (w_i(X) + w_i(Y) - sum_{j<i} p^j S_j^{p^{i-j}}) / p^i
    runs over exact rationals; every coefficient is asserted integral before
    reduction mod p.
    """
    if n > max_level:
        raise LevelTooHigh(f"truncation level {n} exceeds the cap {max_level}")
    if n < 1:
        raise ValueError("truncation level must be >= 1")
    xs = sympy.symbols(f"x0:{n}")
    ys = sympy.symbols(f"y0:{n}")

    def ghost(vs, i):
        return sum(p**j * vs[j] ** (p ** (i - j)) for j in range(i + 1))

    exact: list = []
    reduced = []
    for i in range(n):
        expr = ghost(xs, i) + ghost(ys, i)
        expr -= sum(p**j * exact[j] ** (p ** (i - j)) for j in range(i))
        expr = sympy.expand(expr) / p**i
        poly = sympy.Poly(sympy.expand(expr), *xs, *ys)
        terms = []
        for monom, coeff in poly.terms():
            if not coeff.is_integer:
                raise AssertionError("ghost recursion produced a non-integer")
            c = int(coeff) % p
            if c:
                terms.append((c, tuple(monom[:n]), tuple(monom[n:])))
        exact.append(poly.as_expr())
        reduced.append(tuple(terms))
    return tuple(reduced)


class _PowerCache:
    """Memoized small powers of a fixed Laurent polynomial."""

    def __init__(self, base: LaurentPoly):
        self.pows = {0: None, 1: base}
        self.base = base

    def get(self, e: int) -> LaurentPoly | None:
        top = max(self.pows)
        while top < e:
            self.pows[top + 1] = self.pows[top] * self.base if top else self.base
            top += 1
        return self.pows[e]


def _check_pair(v: WittVector, w: WittVector):
    if v.spec != w.spec:
        raise SpecMismatch("Witt vectors over different field specs")
    if v.level != w.level:
        raise SpecMismatch("Witt vectors of different truncation levels")


def witt_add(v: WittVector, w: WittVector) -> WittVector:
    _check_pair(v, w)
    spec = v.spec
    n = v.level
    polys = witt_sum_polys(spec.p, n)
    vc = [_PowerCache(e) for e in v.entries]
    wc = [_PowerCache(e) for e in w.entries]
    out = []
    for terms in polys:
        acc = {}
        for c, xe, ye in terms:
            prod = LaurentPoly.from_terms(spec, {0: spec.from_int(c)})
            dead = False
            for caches, exps in ((vc, xe), (wc, ye)):
                for cache, e in zip(caches, exps):
                    if e == 0:
                        continue
                    factor = cache.get(e)
                    if not factor:
                        dead = True
                        break
                    prod = prod * factor
                if dead:
                    break
            if dead:
                continue
            for exp, coeff in prod.terms():
                s = acc.get(exp)
                acc[exp] = s + coeff if s is not None else coeff
        out.append(LaurentPoly.from_terms(spec, acc))
    return WittVector(spec, tuple(out))


def witt_neg(v: WittVector) -> WittVector:
    """Coordinatewise negation (valid for odd p: the ghost map is odd)."""
    return WittVector(v.spec, tuple(-e for e in v.entries))


def witt_sub(v: WittVector, w: WittVector) -> WittVector:
    return witt_add(v, witt_neg(w))


def frobenius(v: WittVector) -> WittVector:
    """F on W_n(R) in characteristic p: each entry raised to the p-th power."""
    return WittVector(v.spec, tuple(e.frobenius() for e in v.entries))


def wp(v: WittVector) -> WittVector:
    """The Artin-Schreier-Witt isogeny F(v) - v."""
    return witt_sub(frobenius(v), v)


# -- standard form -----------------------------------------------------------


def is_standard(v: WittVector) -> bool:
    """Every entry supported on exponents t^{-d} with d >= 1 and p not | d."""
    p = v.spec.p
    for entry in v.entries:
        for e, _ in entry.terms():
            if e >= 0 or e % p == 0:
                return False
    return True


@dataclass(frozen=True)
class StandardFormResult:
    vector: WittVector
    extension_degree: int
    adjustment: WittVector  # g with result = input (+) wp(neg g)... see below

    def to_json(self):
        return {
            "vector": self.vector.to_json(),
            "extension_degree": self.extension_degree,
            "adjustment": self.adjustment.to_json(),
        }


def _artin_schreier_solve(spec: FieldSpec, c: FieldElement) -> FieldElement | None:
    """Some x with x^p - x = c in spec, or None if there is none (Tr c != 0)."""
    p, k = spec.p, spec.k
    cols = []
    for j in range(k):
        b = spec.element([0] * j + [1])
        cols.append((b**p - b).coeffs)
    # solve the k x k system over F_p
    aug = [[cols[j][i] for j in range(k)] + [c.coeffs[i]] for i in range(k)]
    pivots = []
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, k) if aug[r][col] % p), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = pow(aug[row][col], p - 2, p)
        aug[row] = [(x * inv) % p for x in aug[row]]
        for r in range(k):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, k):
        if aug[r][k] % p:
            return None
    x = [0] * k
    for r, col in enumerate(pivots):
        x[col] = aug[r][k]
    return spec.element(x)


def _single_slot(spec: FieldSpec, n: int, i: int, entry: LaurentPoly) -> WittVector:
    entries = [LaurentPoly.zero(spec)] * n
    entries[i] = entry
    return WittVector(spec, tuple(entries))


def standard_form(
    v: WittVector, extension_cap: int = DEFAULT_EXTENSION_CAP
) -> StandardFormResult:
    """Reduce v modulo the image of wp to its standard form.

    Returns (v_std, extension degree used, g) with v_std = v - wp(g), every
    entry of v_std supported on exponents t^{-d}, p not dividing d >= 1.
    Eliminating a constant term with nonzero trace forces a degree-p field
    extension; the total relative degree must stay within extension_cap.
    """
    for entry in v.entries:
        if entry and entry.high > 0:
            raise ValueError("entries must lie in k[t^-1] (no positive powers)")
    base_k = v.spec.k
    n = v.level
    work = v
    g = WittVector.zero(v.spec, n)
    for i in range(n):
        while True:
            spec = work.spec
            p = spec.p
            entry = work.entries[i]
            offending = [e for e, _ in entry.terms() if e < 0 and e % p == 0]
            if offending:
                e = min(offending)
                a = entry.term_dict()[e]
                corr = LaurentPoly.from_terms(spec, {e // p: pth_root(a)})
            else:
                const = entry.term_dict().get(0)
                if const is None:
                    break
                x = _artin_schreier_solve(spec, const)
                if x is None:
                    new_k = spec.k * p
                    if new_k > extension_cap * base_k:
                        raise ExtensionCapExceeded(
                            f"standard form needs degree {new_k // base_k} "
                            f"over the base (cap {extension_cap})"
                        )
                    big = make_field(p, new_k)
                    lift = lambda c: embed(c, big)  # noqa: E731
                    work = work.map_coeffs(lift, big)
                    g = g.map_coeffs(lift, big)
                    continue
                corr = LaurentPoly.from_terms(spec, {0: x})
            corr_vec = _single_slot(spec, n, i, corr)
            work = witt_sub(work, wp(corr_vec))
            g = witt_add(g, corr_vec)
    assert is_standard(work)
    return StandardFormResult(work, work.spec.k // base_k, g)


# -- ramification breaks -----------------------------------------------------


@dataclass(frozen=True)
class JumpProfile:
    """Upper ramification breaks (u_1, ..., u_n)."""

    breaks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "breaks", tuple(self.breaks))

    def validate(self, p: int) -> "JumpProfile":
        u = self.breaks
        if not u or any(x < 1 for x in u):
            raise InvalidProfile("breaks must be positive")
        if u[0] % p == 0:
            raise InvalidProfile("p divides u_1")
        for prev, cur in zip(u, u[1:]):
            if cur < p * prev:
                raise InvalidProfile(f"{cur} < p*{prev}")
            if cur % p == 0 and cur != p * prev:
                raise InvalidProfile(f"p | {cur} but {cur} != p*{prev}")
        return self

    def to_json(self):
        return list(self.breaks)


def upper_breaks(v_std: WittVector) -> JumpProfile:
    """u_i = max_j p^(i-j) * deg_{t^-1}(f_j) for a standard-form vector."""
    if not is_standard(v_std):
        raise NotStandardForm("vector is not in standard form")
    if not v_std.entries[0]:
        raise NotStandardForm("first entry vanishes; breaks are undefined")
    p = v_std.spec.p
    degs = [e.deg_t_inverse() for e in v_std.entries]
    breaks = []
    for i in range(1, v_std.level + 1):
        breaks.append(
            max(
                p ** (i - j) * int(degs[j - 1])
                for j in range(1, i + 1)
                if v_std.entries[j - 1]
            )
        )
    return JumpProfile(tuple(breaks)).validate(p)


def gamma_congruence(v_std: WittVector, m: int) -> int:
    """Common class mod m of all t^-1 exponents across the entries."""
    if not is_standard(v_std):
        raise NotStandardForm("vector is not in standard form")
    classes = {
        (-e) % m for entry in v_std.entries for e, _ in entry.terms()
    }
    if len(classes) != 1:
        raise MixedClasses(f"exponent classes mod {m}: {sorted(classes)}")
    return classes.pop()


def kgb_vanishes(j: JumpProfile, m: int) -> bool:
    """The KGB lifting obstruction vanishes iff u_1 = -1 mod m."""
    return j.breaks[0] % m == m - 1


def reduce_jumps(jumps_prime, p: int, m: int) -> list[int]:
    """Reduce a jump profile to one with no essential ramification:
    u_i = u_i' mod mp and p*u_{i-1} <= u_i < p*u_{i-1} + mp, inductively."""
    jumps_prime = list(jumps_prime)
    if not jumps_prime or any(u < 1 for u in jumps_prime):
        raise InvalidProfile("jumps must be positive")
    if jumps_prime[0] % p == 0:
        raise InvalidProfile("p divides u_1'")
    for prev, cur in zip(jumps_prime, jumps_prime[1:]):
        if cur < p * prev:
            raise InvalidProfile(f"{cur} < p*{prev}")
    if any(u % m != m - 1 for u in jumps_prime):
        raise InvalidProfile("all input jumps must be -1 mod m")
    out = []
    prev = 0
    for u in jumps_prime:
        cur = p * prev + (u - p * prev) % (m * p)
        out.append(cur)
        prev = cur
    return out


def different_degree(j: JumpProfile, p: int) -> int:
    """Serre's different formula: sum (u_i + 1)(p^i - p^(i-1))."""
    return sum(
        (u + 1) * (p**i - p ** (i - 1))
        for i, u in enumerate(j.breaks, start=1)
    )
