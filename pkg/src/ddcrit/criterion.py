"""Power-sum formulation of the differential data criterion: residue
extraction, the power-sum system, the isolation (Jacobian) matrix, exact
reconstruction of f from residue data, certificate assembly, and the
generalized-Vandermonde determinant cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cartier import Quadruple, ddc_check, validate_shape
from .errors import (
    NotDescending,
    NotSquarefree,
    ReconstructionMismatch,
    ResidueNotPrimeField,
)
from .gf import FieldElement, FieldSpec, make_field, root_of_unity
from .poly import (
    Poly,
    RationalFunction,
    embed,
    embed_poly,
    mu_m_orbit_reps,
    roots_in_splitting_field,
)


@dataclass(frozen=True)
class ResidueData:
    """Orbit representatives x_j (in F_{p^D}) and residues a_j (in F_p^x,
    stored as ints) of omega = dt/(f t^(u~+1)) at the roots of f."""

    quadruple: Quadruple
    splitting_degree: int
    reps: tuple[FieldElement, ...]
    residues: tuple[int, ...]

    @property
    def field(self) -> FieldSpec:
        return make_field(self.quadruple.p, self.splitting_degree)


@dataclass(frozen=True)
class Certificate:
    quadruple: Quadruple
    field: FieldSpec
    f: Poly
    residue_data: ResidueData | None
    ddc_ok: bool
    power_sum_ok: bool
    isolation_det: FieldElement | None
    isolated: bool

    @property
    def all_ok(self) -> bool:
        return self.ddc_ok and self.power_sum_ok and self.isolated

    def to_json(self) -> dict:
        rd = self.residue_data
        return {
            "quadruple": self.quadruple.to_json(),
            "field": self.field.to_json(),
            "f": self.f.to_json(),
            "splitting_degree": rd.splitting_degree if rd else None,
            "reps": [r.to_json() for r in rd.reps] if rd else [],
            "residues": list(rd.residues) if rd else [],
            "flags": {
                "ddc": self.ddc_ok,
                "power_sum": self.power_sum_ok,
                "isolated": self.isolated,
            },
            "isolation_det": self.isolation_det.to_json()
            if self.isolation_det is not None
            else None,
        }


def criterion_exponents(q: Quadruple) -> list[int]:
    """The q-range of the power-sum system: 1..N1+u~-1, = -1 mod m, prime
    to p, ascending."""
    return [
        e
        for e in range(1, q.n1 + q.u_tilde)
        if e % q.m == q.m - 1 and e % q.p != 0
    ]


def residue_data(q: Quadruple, f: Poly) -> ResidueData:
    """Extract splitting field, mu_m orbit representatives and residues
    a_j = 1/(x_j^(u~+1) f'(x_j)) of omega = dt/(f t^(u~+1)).

    Raises NotSquarefree for repeated roots and ResidueNotPrimeField when
    some residue falls outside F_p (both mean f fails the criterion)."""
    validate_shape(q, f)
    if q.n1 == 0:
        return ResidueData(q, f.spec.k, (), ())
    if not f.is_squarefree():
        raise NotSquarefree("f has repeated roots")
    degree, roots = roots_in_splitting_field(f)
    big = make_field(q.p, degree)
    reps = mu_m_orbit_reps(roots, q.m, big)
    f_big = embed_poly(f, big)
    fprime = f_big.derivative()
    residues = []
    for x in reps:
        a = (x ** (q.u_tilde + 1) * fprime.evaluate(x)).inverse()
        if not a.in_prime_field():
            raise ResidueNotPrimeField("residue outside the prime field")
        residues.append(a.prime_int())
    return ResidueData(q, degree, tuple(reps), tuple(residues))


def _target_scalar(q: Quadruple) -> int:
    """u/m as an element of F_p (m is invertible since m | p-1)."""
    return (q.u % q.p) * pow(q.m % q.p, q.p - 2, q.p) % q.p


def power_sum_check(rd: ResidueData) -> bool:
    """Sum_j a_j x_j^e = u/m for e = u and 0 for every other exponent in the
    criterion range."""
    q = rd.quadruple
    spec = rd.field
    target = _target_scalar(q)
    for e in criterion_exponents(q):
        total = spec.zero()
        for x, a in zip(rd.reps, rd.residues):
            total = total + x**e * a
        expected = target if e == q.u else 0
        if total != spec.from_int(expected):
            return False
    return True


def isolation_check(rd: ResidueData):
    """Jacobian matrix (e * a_j * x_j^(e-1)) of the power-sum system, its
    determinant by Gaussian elimination over F_{p^D}, and the isolation flag
    (nonzero determinant, or an empty matrix)."""
    q = rd.quadruple
    spec = rd.field
    exps = criterion_exponents(q)
    n = len(rd.reps)
    if n == 0:
        return [], spec.one(), True
    if len(exps) != n:
        raise AssertionError("power-sum system is not square for this quadruple")
    matrix = [
        [x ** (e - 1) * (a * e) for x, a in zip(rd.reps, rd.residues)]
        for e in exps
    ]
    det = _det(matrix, spec)
    return matrix, det, bool(det)


def _det(matrix, spec: FieldSpec) -> FieldElement:
    m = [row[:] for row in matrix]
    n = len(m)
    det = spec.one()
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return spec.zero()
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] = m[r][c] - factor * m[col][c]
    return det


def reconstruct_f(rd: ResidueData) -> Poly:
    """Rebuild f from (reps, residues): form the logarithmic derivative of
    g = prod_{j,l} (1 - zeta_m^-l x_j t^-1)^(lift(zeta_m^-l a_j)), subtract
    u * sum_s t^(-u p^s - 1) dt, and invert eta = dt/(f t^(u~+1)).

    The result is independent of the integer lifts chosen for the exponents;
    shape failures raise ReconstructionMismatch."""
    q = rd.quadruple
    spec = rd.field
    if q.n1 == 0:
        # eta = -u sum_s t^(-u p^s - 1) dt must equal dt/(c t^(u~+1))
        c = (-spec.from_int(q.u)).inverse()
        f = Poly(spec, [c])
        if not ddc_check(q, f):
            raise ReconstructionMismatch("constant reconstruction failed ddc")
        return f
    zeta = root_of_unity(spec, q.m)
    t = Poly.x(spec)
    dg_over_g = RationalFunction(Poly.zero(spec), Poly.one(spec))
    for x, a in zip(rd.reps, rd.residues):
        for ell in range(1, q.m + 1):
            c = zeta ** (-ell) * x
            exponent = (zeta ** (-ell) * a).prime_int()
            if exponent == 0:
                continue
            # lift(zeta^-l a_j) * c / (t (t - c))
            num = Poly(spec, [c * exponent])
            den = t * (t - Poly(spec, [c]))
            dg_over_g = dg_over_g + RationalFunction(num, den)
    # u * sum_s t^(-u p^s - 1) = u * (sum_s t^(u~ - u p^s)) / t^(u~ + 1)
    tail_coeffs = {}
    for s in range(q.nu + 1):
        e = q.u_tilde - q.u * q.p**s
        tail_coeffs[e] = tail_coeffs.get(e, 0) + q.u
    tail_num = Poly.from_ints(
        spec, [tail_coeffs.get(i, 0) for i in range(q.u_tilde + 1)]
    )
    t_pow = Poly(spec, [spec.zero()] * (q.u_tilde + 1) + [spec.one()])
    eta = dg_over_g - RationalFunction(tail_num, t_pow)
    f_rf = (eta * RationalFunction.from_poly(t_pow)).inverse()
    f = f_rf.as_poly()
    if f is None:
        raise ReconstructionMismatch("reconstructed f is not a polynomial")
    if spec.k > 1 and all(c**q.p == c for c in f.coeffs):
        # descend to the prime field so round trips are literal identities
        prime = make_field(q.p, 1)
        f = f.map_coeffs(lambda c: prime.from_int(c.coeffs[0]), prime)
    try:
        if not ddc_check(q, f):
            raise ReconstructionMismatch("reconstructed f fails the criterion")
    except Exception as exc:
        raise ReconstructionMismatch(f"reconstructed f has bad shape: {exc}") from exc
    return f


def certify(q: Quadruple, f: Poly) -> Certificate:
    """Run the full pipeline, recording flags rather than raising on
    criterion failure (shape errors still raise)."""
    ddc_ok = ddc_check(q, f)
    rd = None
    power_sum_ok = False
    det = None
    isolated = False
    try:
        rd = residue_data(q, f)
    except (NotSquarefree, ResidueNotPrimeField):
        rd = None
    if rd is not None:
        power_sum_ok = power_sum_check(rd)
        _, det, isolated = isolation_check(rd)
    return Certificate(
        quadruple=q,
        field=f.spec,
        f=f,
        residue_data=rd,
        ddc_ok=ddc_ok,
        power_sum_ok=power_sum_ok,
        isolation_det=det,
        isolated=isolated,
    )


def verify_certificate_json(data: dict) -> bool:
    """Re-run every check from a serialized certificate and compare flags."""
    qd = data["quadruple"]
    q = Quadruple(qd["p"], qd["m"], qd["u_tilde"], qd["n1"])
    spec = make_field(data["field"]["p"], data["field"]["k"])
    if list(spec.modulus) != data["field"]["modulus"]:
        return False
    f = Poly(spec, [spec.element(c) for c in data["f"]])
    cert = certify(q, f)
    flags = data["flags"]
    return (
        cert.ddc_ok == flags["ddc"]
        and cert.power_sum_ok == flags["power_sum"]
        and cert.isolated == flags["isolated"]
    )


def binomial_det(b) -> tuple[int, int]:
    """Determinant of the integer matrix (binom(q-1, j-1)) with q running
    over b in ascending order, against the closed-form
    prod_{i<j}(b_i - b_j) / (1! 2! ... (n-1)!) for strictly descending b."""
    b = list(b)
    if any(x <= 0 for x in b) or any(x <= y for x, y in zip(b, b[1:])):
        raise NotDescending("b must be strictly descending positive integers")
    n = len(b)
    rows = [[math.comb(q - 1, j) for j in range(n)] for q in sorted(b)]
    direct = _int_det(rows)
    product = 1
    for i in range(n):
        for j in range(i + 1, n):
            product *= b[i] - b[j]
    denom = 1
    for i in range(1, n):
        denom *= math.factorial(i)
    formula, rem = divmod(product, denom)
    if rem:
        raise AssertionError("closed-form product not divisible by factorials")
    return direct, formula


def _int_det(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant over the integers."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]
