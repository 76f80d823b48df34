"""Exact univariate polynomial, Laurent polynomial and rational-function
arithmetic over an explicit finite field, with factorization and deterministic
root extraction into a single splitting field.

All randomness in equal-degree splitting is replaced by a counter-based
candidate sequence, so results are bit-for-bit reproducible.
"""

from __future__ import annotations

import functools
from math import lcm

from .errors import (
    NotOrbitClosed,
    RepeatedRoot,
    SpecMismatch,
    ZeroRoot,
)
from .gf import FieldElement, FieldSpec, make_field, pth_root, root_of_unity

NEG_INF = float("-inf")


class Poly:
    """Dense univariate polynomial over a FieldSpec, ascending coefficients,
    canonical (no trailing zeros).  The zero polynomial has degree -inf."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.spec = spec
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, spec: FieldSpec, ints) -> "Poly":
        return cls(spec, [spec.from_int(c) for c in ints])

    @classmethod
    def zero(cls, spec):
        return cls(spec, [])

    @classmethod
    def one(cls, spec):
        return cls(spec, [spec.one()])

    @classmethod
    def x(cls, spec):
        return cls(spec, [spec.zero(), spec.one()])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __repr__(self):
        return f"Poly({[c.coeffs for c in self.coeffs]})"

    def _check(self, other):
        if self.spec != other.spec:
            raise SpecMismatch("polynomials over different field specs")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.spec.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Poly(self.spec, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.spec, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return Poly(self.spec, [c * other for c in self.coeffs])
        self._check(other)
        if not self or not other:
            return Poly.zero(self.spec)
        z = self.spec.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.spec, out)

    def __pow__(self, e: int):
        result = Poly.one(self.spec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: FieldElement) -> "Poly":
        return self * c

    def monic(self) -> "Poly":
        if not self:
            return self
        return self * self.coeffs[-1].inverse()

    def divmod(self, other: "Poly"):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        z = self.spec.zero()
        rem = list(self.coeffs)
        quot = [z] * max(0, len(rem) - len(other.coeffs) + 1)
        inv_lead = other.coeffs[-1].inverse()
        db = len(other.coeffs) - 1
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv_lead
            shift = len(rem) - 1 - db
            if c:
                quot[shift] = c
                for i, b in enumerate(other.coeffs):
                    rem[shift + i] = rem[shift + i] - c * b
            rem.pop()
        return Poly(self.spec, quot), Poly(self.spec, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Poly":
        return Poly(
            self.spec, [c * i for i, c in enumerate(self.coeffs)][1:]
        )

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = x.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_squarefree(self) -> bool:
        if not self:
            return False
        d = self.derivative()
        if not d:
            return self.degree == 0
        return self.gcd(d).degree == 0

    def map_coeffs(self, fn, spec: FieldSpec) -> "Poly":
        return Poly(spec, [fn(c) for c in self.coeffs])

    def to_json(self):
        return [c.to_json() for c in self.coeffs]


def _powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.spec)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


# -- factorization -----------------------------------------------------------


def _pth_root_poly(f: Poly) -> Poly:
    """For f = g(t^p), return g (coefficientwise p-th roots)."""
    p = f.spec.p
    coeffs = [pth_root(f.coeffs[i]) for i in range(0, len(f.coeffs), p)]
    return Poly(f.spec, coeffs)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun-style decomposition valid in characteristic p; returns monic
    (factor, multiplicity) pairs with the factors squarefree and coprime."""
    f = f.monic()
    out: list[tuple[Poly, int]] = []

    def accumulate(g: Poly, scale: int):
        # classical loop; p-th power parts recurse with multiplicity * p
        d = g.derivative()
        if not d:
            if g.degree == 0:
                return
            accumulate(_pth_root_poly(g), scale * g.spec.p)
            return
        c = g.gcd(d)
        w = g // c
        mult = 1
        while w.degree > 0:
            y = w.gcd(c)
            factor = w // y
            if factor.degree > 0:
                out.append((factor.monic(), mult * scale))
            w = y
            c = c // y
            mult += 1
        if c.degree > 0:
            accumulate(_pth_root_poly(c), scale * g.spec.p)

    accumulate(f, 1)
    return out


def distinct_degree_factorization(f: Poly) -> list[tuple[Poly, int]]:
    """Split squarefree monic f into (product-of-irreducibles, degree) pairs."""
    spec = f.spec
    q = spec.order
    out = []
    x = Poly.x(spec)
    h = x
    d = 0
    rest = f
    while rest.degree > 0:
        d += 1
        if 2 * d > rest.degree:
            out.append((rest, int(rest.degree)))
            break
        h = _powmod(h, q, rest)
        g = rest.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    return out


def _candidate_polys(spec: FieldSpec, max_degree: int):
    """Deterministic counter-based candidate sequence for equal-degree
    splitting: all polynomials of degree 1, then 2, ... in element order.
    Lazy, so huge fields only pay for the candidates actually drawn."""
    for deg in range(1, max_degree + 1):
        for lead_idx in range(1, spec.order):
            lead = spec.element_by_index(lead_idx)
            for rest_idx in range(spec.order**deg):
                rest = []
                r = rest_idx
                for _ in range(deg):
                    rest.append(spec.element_by_index(r % spec.order))
                    r //= spec.order
                yield Poly(spec, rest + [lead])


def equal_degree_factorization(f: Poly, d: int) -> list[Poly]:
    """Split a squarefree monic product of degree-d irreducibles."""
    spec = f.spec
    if f.degree == d:
        return [f]
    exponent = (spec.order**d - 1) // 2
    for cand in _candidate_polys(spec, 2 * d):
        h = _powmod(cand, exponent, f)
        g = f.gcd(h - Poly.one(spec))
        if 0 < g.degree < f.degree:
            return sorted(
                equal_degree_factorization(g, d)
                + equal_degree_factorization(f // g, d),
                key=lambda t: [c.sort_key() for c in t.coeffs],
            )
    raise AssertionError("equal-degree splitting exhausted candidates")


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, deterministic order."""
    out = []
    for sqf, mult in squarefree_decomposition(f):
        for prod, d in distinct_degree_factorization(sqf):
            for irr in equal_degree_factorization(prod, d):
                out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, [c.sort_key() for c in t[0].coeffs]))
    return out


# -- embeddings and splitting fields ----------------------------------------


@functools.lru_cache(maxsize=None)
def _embedding_image(src: FieldSpec, dst: FieldSpec) -> FieldElement:
    """Image of the generator of src in dst: the least root of src.modulus."""
    if src.p != dst.p or dst.k % src.k != 0:
        raise SpecMismatch("no embedding between these field specs")
    modulus = Poly(dst, [dst.from_int(c) for c in src.modulus])
    roots = roots_in_field(modulus)
    if not roots:
        raise AssertionError("modulus has no root in the extension (unreachable)")
    return min(roots, key=FieldElement.sort_key)


def embed(x: FieldElement, dst: FieldSpec) -> FieldElement:
    """Embed x into the extension field dst (src degree must divide dst's)."""
    src = x.spec
    if src == dst:
        return x
    if src.k == 1:
        return dst.from_int(x.coeffs[0])
    img = _embedding_image(src, dst)
    acc = dst.zero()
    for c in reversed(x.coeffs):
        acc = acc * img + dst.from_int(c)
    return acc


def embed_poly(f: Poly, dst: FieldSpec) -> Poly:
    return f.map_coeffs(lambda c: embed(c, dst), dst)


def roots_in_field(f: Poly) -> list[FieldElement]:
    """All roots of f lying in its own coefficient field (with multiplicity),
    in deterministic element order."""
    spec = f.spec
    out = []
    for sqf, mult in squarefree_decomposition(f):
        # the product of linear factors of sqf is gcd(t^q - t, sqf)
        x = Poly.x(spec)
        xq = _powmod(x, spec.order, sqf)
        lin = sqf.gcd(xq - x)
        if lin.degree <= 0:
            continue
        for irr in equal_degree_factorization(lin, 1):
            root = -irr.coeffs[0]
            out.extend([root] * mult)
    out.sort(key=FieldElement.sort_key)
    return out


def roots_in_splitting_field(f: Poly):
    """Return (D, roots): splitting-field degree D over F_p and all roots of
    f (with multiplicity), co-embedded into F_{p^D}, deterministic order.

    A nonzero constant yields (spec.k, [])."""
    if not f:
        raise ValueError("zero polynomial has no splitting field")
    spec = f.spec
    factors = factor(f) if f.degree > 0 else []
    degrees = [int(g.degree) for g, _ in factors]
    rel = lcm(*degrees) if degrees else 1
    big_degree = spec.k * rel
    big = make_field(spec.p, big_degree)
    roots: list[FieldElement] = []
    for g, mult in factors:
        gb = embed_poly(g, big)
        if g.degree == 1:
            rs = [-gb.coeffs[0]]
        else:
            # one root, then its Frobenius orbit over the base field
            r0 = _one_root(gb)
            rs = [r0]
            q0 = spec.order
            nxt = r0**q0
            while nxt != r0:
                rs.append(nxt)
                nxt = nxt**q0
            if len(rs) != g.degree:
                raise AssertionError("Frobenius orbit shorter than factor degree")
        for r in rs:
            roots.extend([r] * mult)
    roots.sort(key=FieldElement.sort_key)
    return big_degree, roots


def _one_root(f: Poly) -> FieldElement:
    """One root of a monic polynomial that splits completely in its field."""
    spec = f.spec
    if f.degree == 1:
        return -f.coeffs[0]
    exponent = (spec.order - 1) // 2
    for cand in _candidate_polys(spec, 2):
        h = _powmod(cand, exponent, f)
        g = f.gcd(h - Poly.one(spec))
        if 0 < g.degree < f.degree:
            smaller = g if g.degree <= f.degree - g.degree else f // g
            return _one_root(smaller.monic())
    raise AssertionError("root extraction exhausted candidates")


# -- orbit representatives and symmetric functions ---------------------------


def mu_m_orbit_reps(roots, m: int, spec: FieldSpec):
    """One representative (the least element) per orbit of the root set under
    multiplication by the m-th roots of unity."""
    if not roots:
        return []
    if any(not r for r in roots):
        raise ZeroRoot("orbit representatives require nonzero roots")
    root_set = set()
    for r in roots:
        if r in root_set:
            raise RepeatedRoot("repeated root in orbit partition")
        root_set.add(r)
    zeta = root_of_unity(spec, m)
    reps = []
    seen = set()
    for r in sorted(root_set, key=FieldElement.sort_key):
        if r in seen:
            continue
        orbit = set()
        y = r
        for _ in range(m):
            orbit.add(y)
            y = y * zeta
        if not orbit <= root_set:
            raise NotOrbitClosed("root set is not closed under mu_m")
        seen |= orbit
        reps.append(min(orbit, key=FieldElement.sort_key))
    return reps


def elementary_symmetric(values, spec: FieldSpec | None = None):
    """(e_0, ..., e_n) of the given field elements; e_0 = 1."""
    if not values and spec is None:
        raise ValueError("spec required for the empty list")
    spec = spec or values[0].spec
    es = [spec.one()]
    for v in values:
        es.append(spec.zero())
        for i in range(len(es) - 1, 0, -1):
            es[i] = es[i] + es[i - 1] * v
    return es


# -- Laurent polynomials -----------------------------------------------------


class LaurentPoly:
    """Laurent polynomial over a FieldSpec: coefficients ascending from the
    minimal exponent ``low``; canonical form has nonzero first and last
    stored coefficients (the zero Laurent polynomial stores nothing)."""

    __slots__ = ("spec", "low", "coeffs")

    def __init__(self, spec: FieldSpec, low: int, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            low += 1
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.spec = spec
        self.low = low if coeffs else 0
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, spec):
        return cls(spec, 0, [])

    @classmethod
    def from_terms(cls, spec: FieldSpec, terms: dict[int, FieldElement]):
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero(spec)
        low = min(terms)
        high = max(terms)
        z = spec.zero()
        return cls(spec, low, [terms.get(e, z) for e in range(low, high + 1)])

    @classmethod
    def from_poly(cls, f: Poly, shift: int = 0) -> "LaurentPoly":
        return cls(f.spec, shift, f.coeffs)

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.low + i, c

    def term_dict(self):
        return dict(self.terms())

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.spec == other.spec
            and self.low == other.low
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.spec, self.low, self.coeffs))

    def __repr__(self):
        return f"Laurent(low={self.low}, {[c.coeffs for c in self.coeffs]})"

    @property
    def high(self):
        if not self.coeffs:
            return NEG_INF
        return self.low + len(self.coeffs) - 1

    def deg_t_inverse(self):
        """Degree in t^{-1}: -low when low < 0, else 0 for nonzero constants."""
        if not self.coeffs:
            return NEG_INF
        return max(0, -self.low)

    def __add__(self, other):
        if self.spec != other.spec:
            raise SpecMismatch("Laurent polynomials over different field specs")
        terms = self.term_dict()
        for e, c in other.terms():
            s = terms.get(e)
            terms[e] = s + c if s is not None else c
        return LaurentPoly.from_terms(self.spec, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.spec, self.low, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return LaurentPoly(self.spec, self.low, [c * other for c in self.coeffs])
        if isinstance(other, int):
            return LaurentPoly(self.spec, self.low, [c * other for c in self.coeffs])
        if self.spec != other.spec:
            raise SpecMismatch("Laurent polynomials over different field specs")
        if not self or not other:
            return LaurentPoly.zero(self.spec)
        z = self.spec.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return LaurentPoly(self.spec, self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = LaurentPoly.from_terms(self.spec, {0: self.spec.one()})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "LaurentPoly":
        """Entry-wise p-th power: coefficients^p, exponents*p."""
        p = self.spec.p
        return LaurentPoly.from_terms(
            self.spec, {e * p: c**p for e, c in self.terms()}
        )

    def map_coeffs(self, fn, spec: FieldSpec) -> "LaurentPoly":
        return LaurentPoly.from_terms(spec, {e: fn(c) for e, c in self.terms()})

    def to_json(self):
        return {"low": self.low, "coeffs": [c.to_json() for c in self.coeffs]}


# -- rational functions ------------------------------------------------------


class RationalFunction:
    """Quotient of polynomials in lowest terms with monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Poly, denominator: Poly):
        if not denominator:
            raise ZeroDivisionError("zero denominator")
        g = numerator.gcd(denominator)
        if g.degree > 0:
            numerator = numerator // g
            denominator = denominator // g
        lead = denominator.coeffs[-1]
        if lead != denominator.spec.one():
            inv = lead.inverse()
            numerator = numerator * inv
            denominator = denominator * inv
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def from_poly(cls, f: Poly):
        return cls(f, Poly.one(f.spec))

    @property
    def spec(self):
        return self.denominator.spec

    def __bool__(self):
        return bool(self.numerator)

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __repr__(self):
        return f"({self.numerator!r})/({self.denominator!r})"

    def __add__(self, other):
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __mul__(self, other):
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def inverse(self):
        if not self.numerator:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other):
        return self * other.inverse()

    def as_poly(self) -> Poly | None:
        """The underlying polynomial, or None if the denominator is not 1."""
        if self.denominator.degree == 0:
            return self.numerator
        return None
