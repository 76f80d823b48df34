"""Deterministic finite-field tower arithmetic.

Fields F_{p^k} are represented explicitly: a ``FieldSpec`` fixes an odd
prime p, an extension degree k and a canonical monic irreducible modulus of
degree k over F_p.  Elements are length-k coefficient vectors over F_p.
All arithmetic is exact; everything is immutable and safe to share.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import (
    EvenPrime,
    NotCoprime,
    NotInSubfield,
    NotPrime,
    OrderNotDividing,
    SpecMismatch,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n stays desk-sized)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense F_p[x] helpers (coefficient lists, ascending degree) --------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymul_modp(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _polymod_modp(a: list[int], m: list[int], p: int) -> list[int]:
    # m is monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    return _trim(a)


def _polymulmod(a, b, m, p):
    return _polymod_modp(_polymul_modp(a, b, p), m, p)


def _polypowmod(a, e, m, p):
    result = [1]
    base = _polymod_modp(a, m, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, m, p)
        base = _polymulmod(base, base, m, p)
        e >>= 1
    return result


def _polygcd_modp(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _polymod_modp(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _is_irreducible_modp(f: list[int], p: int) -> bool:
    """Rabin test for a monic polynomial over F_p."""
    k = len(f) - 1
    if k <= 0:
        return False
    x = [0, 1]
    xq = _polypowmod(x, p**k, f, p)
    diff = _trim([(a - b) % p for a, b in zip_pad(xq, x)])
    if diff:
        return False
    for r in prime_factors(k):
        xqr = _polypowmod(x, p ** (k // r), f, p)
        diff = _trim([(a - b) % p for a, b in zip_pad(xqr, x)])
        if len(_polygcd_modp(diff, f, p)) != 1:
            return False
    return True


def zip_pad(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


# -- field spec --------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """An explicit F_{p^k} with a fixed monic irreducible modulus.

    ``modulus`` is the ascending coefficient tuple of length k+1; the
    canonical choice is deterministic, so equal (p, k) always produce
    identical specs.
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.k

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def from_int(self, n: int) -> "FieldElement":
        coeffs = [0] * self.k
        coeffs[0] = n % self.p
        return FieldElement(self, tuple(coeffs))

    def element(self, coeffs) -> "FieldElement":
        c = [v % self.p for v in coeffs]
        if len(c) > self.k:
            raise ValueError("coefficient vector longer than extension degree")
        c += [0] * (self.k - len(c))
        return FieldElement(self, tuple(c))

    def elements(self):
        """All field elements in the deterministic order (constant term up,
        lexicographic).  Only sensible for small fields."""
        for i in range(self.order):
            yield self.element_by_index(i)

    def element_by_index(self, i: int) -> "FieldElement":
        """The i-th element under the deterministic ordering (base-p digits
        of i, most significant digit = constant coefficient)."""
        digits = []
        for _ in range(self.k):
            digits.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(reversed(digits)))

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}


def _deterministic_modulus(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k, scanning coefficient vectors
    from the top degree down so that e.g. x^2+2 beats x^2+x+1 over F_5."""
    if k == 1:
        return (0, 1)
    from itertools import product

    for top_down in product(range(p), repeat=k):
        coeffs = list(reversed(top_down)) + [1]
        if _is_irreducible_modp(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found (unreachable)")


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FieldSpec:
    """Canonical FieldSpec for F_{p^k} (p an odd prime, k >= 1)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenPrime("characteristic 2 is not supported")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    return FieldSpec(p, k, _deterministic_modulus(p, k))


class FieldElement:
    """Element of F_{p^k}, stored as a length-k coefficient tuple over F_p."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple[int, ...]):
        self.spec = spec
        self.coeffs = coeffs

    def __repr__(self):
        return f"GF({self.spec.p}^{self.spec.k}){list(self.coeffs)}"

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self.coeffs))

    def sort_key(self):
        return self.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def _check(self, other):
        if self.spec != other.spec:
            raise SpecMismatch("elements belong to different field specs")

    def __add__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.spec.p
            return FieldElement(self.spec, tuple((a * other) % p for a in self.coeffs))
        self._check(other)
        spec = self.spec
        prod = _polymulmod(
            list(self.coeffs), list(other.coeffs), list(spec.modulus), spec.p
        )
        prod += [0] * (spec.k - len(prod))
        return FieldElement(spec, tuple(prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid in F_p[x] against the modulus
        spec = self.spec
        p = spec.p
        r0, r1 = list(spec.modulus), _trim(list(self.coeffs))
        t0, t1 = [], [1]
        while r1:
            # divide r0 by r1
            q = []
            rem = list(r0)
            inv_lead = pow(r1[-1], p - 2, p)
            while rem and len(rem) >= len(r1):
                c = (rem[-1] * inv_lead) % p
                shift = len(rem) - len(r1)
                q += [0] * max(0, shift + 1 - len(q))
                q[shift] = c
                for i, v in enumerate(r1):
                    rem[shift + i] = (rem[shift + i] - c * v) % p
                rem = _trim(rem)
            r0, r1 = r1, rem
            qt1 = _polymul_modp(q, t1, p)
            new_t1 = _trim([(a - b) % p for a, b in zip_pad(t0, qt1)])
            t0, t1 = t1, new_t1
        inv_lead = pow(r0[-1], p - 2, p)
        t0 = [(c * inv_lead) % p for c in t0]
        t0 = _polymod_modp(t0, list(spec.modulus), p)
        t0 += [0] * (spec.k - len(t0))
        return FieldElement(spec, tuple(t0))

    def __truediv__(self, other):
        return self * other.inverse()

    def frobenius(self) -> "FieldElement":
        return self ** self.spec.p

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def prime_int(self) -> int:
        """Integer representative in [0, p) for elements of the prime field."""
        if not self.in_prime_field():
            raise NotInSubfield("element does not lie in the prime field")
        return self.coeffs[0]

    def to_json(self) -> list[int]:
        return list(self.coeffs)


# -- operations --------------------------------------------------------------


def pth_root(x: FieldElement) -> FieldElement:
    """The unique y with y^p = x, namely x^(p^(k-1))."""
    k = x.spec.k
    if k == 1:
        return x
    return x ** (x.spec.p ** (k - 1))


def trace_to_prime(x: FieldElement, d: int) -> FieldElement:
    """Trace of x from the subfield F_{p^d} down to F_p.

    Requires d | k and x actually in F_{p^d} (checked via x^(p^d) = x).
    """
    spec = x.spec
    if d < 1 or spec.k % d != 0:
        raise NotInSubfield(f"degree {d} does not divide {spec.k}")
    if x ** (spec.p**d) != x:
        raise NotInSubfield("element is not fixed by the subfield Frobenius")
    total = spec.zero()
    y = x
    for _ in range(d):
        total = total + y
        y = y**spec.p
    return total


@functools.lru_cache(maxsize=None)
def _least_generator(spec: FieldSpec) -> FieldElement:
    q1 = spec.order - 1
    factors = prime_factors(q1)
    for g in spec.elements():
        if not g:
            continue
        if all(g ** (q1 // r) != spec.one() for r in factors):
            return g
    raise AssertionError("no multiplicative generator found (unreachable)")


def root_of_unity(spec: FieldSpec, order: int) -> FieldElement:
    """A fixed primitive order-th root of unity: g^((q-1)/order) for the
    least multiplicative generator g."""
    if order < 1 or (spec.order - 1) % order != 0:
        raise OrderNotDividing(f"{order} does not divide {spec.order - 1}")
    if order == 1:
        return spec.one()
    g = _least_generator(spec)
    return g ** ((spec.order - 1) // order)


def ord_mod(p: int, n: int) -> int:
    """Least D >= 1 with p^D = 1 mod n."""
    from math import gcd

    if n < 1:
        raise ValueError("modulus must be positive")
    if gcd(p, n) != 1:
        raise NotCoprime(f"gcd({p}, {n}) != 1")
    if n == 1:
        return 1
    d = 1
    acc = p % n
    while acc != 1:
        acc = (acc * p) % n
        d += 1
    return d
