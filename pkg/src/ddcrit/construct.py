"""Closed-form families of criterion witnesses: the small family
(N1 = p-1 or p-3 over the prime field), the trace family built from roots of
unity with trace conditions, and the four hardcoded dihedral witnesses.
"""

from __future__ import annotations

from math import lcm

from .cartier import Quadruple
from .criterion import (
    Certificate,
    ResidueData,
    certify,
    criterion_exponents,
    isolation_check,
    power_sum_check,
    reconstruct_f,
)
from .errors import ExtensionCapExceeded, SingularSystem
from .gf import make_field, ord_mod, root_of_unity, trace_to_prime
from .poly import Poly, mu_m_orbit_reps

DEFAULT_DEGREE_CAP = 16


def construct_small(p: int, n1: int) -> ResidueData:
    """Witness data for the quadruple (p, 2, 1, n1) with n1 in {p-1, p-3}
    (or 0): representatives x_j = j for j = 1..n1/2 and residues solved from
    the Vandermonde-type power-sum system over F_p."""
    q = Quadruple(p, 2, 1, n1)
    spec = make_field(p, 1)
    if n1 == 0:
        return ResidueData(q, 1, (), ())
    if n1 not in (p - 1, p - 3):
        raise ValueError(f"N1 = {n1} must be p-1 or p-3 (or 0)")
    count = n1 // 2
    reps = [j for j in range(1, count + 1)]
    exps = criterion_exponents(q)
    if len(exps) != count:
        raise AssertionError("power-sum system is not square")
    # rows: sum_j a_j x_j^e = u/m (e = 1) else 0, solved over F_p
    half = pow(2, p - 2, p)
    aug = [
        [pow(x, e, p) for x in reps] + [half if e == q.u else 0] for e in exps
    ]
    residues = _solve_modp(aug, p)
    if residues is None:
        raise SingularSystem("small-family power-sum system was singular")
    if any(a == 0 for a in residues):
        raise AssertionError("small-family residue vanished")
    rd = ResidueData(
        q, 1, tuple(spec.from_int(x) for x in reps), tuple(residues)
    )
    if not power_sum_check(rd):
        raise AssertionError("small-family data fails the power-sum system")
    _, _, isolated = isolation_check(rd)
    if not isolated:
        raise AssertionError("small-family data is not isolated")
    return rd


def _solve_modp(aug: list[list[int]], p: int) -> list[int] | None:
    """Solve a square augmented system over F_p; None if singular."""
    n = len(aug)
    m = [row[:] for row in aug]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], p - 2, p)
        m[col] = [(x * inv) % p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[col])]
    return [m[r][n] % p for r in range(n)]


def construct_trace(
    p: int, m: int, u_tilde: int, degree_cap: int = DEFAULT_DEGREE_CAP
) -> ResidueData:
    """Witness data for (p, m, u~, (p-1)u~) from roots of unity.

    Working in F_{p^D} with D = lcm(ord_mod(p, u(p^(nu+1)-1)), nu+1):
    among the M = u(p^(nu+1)-1)-th roots of unity, discard the set S whose
    -u-th powers have zero trace to F_p (|S| = u(p^nu - 1), asserted), take
    mu_m orbit representatives of the rest, and set a_j = -Tr(x_j^-u)."""
    q = Quadruple(p, m, u_tilde, (p - 1) * u_tilde)
    big_m = q.u * (p ** (q.nu + 1) - 1)
    degree = lcm(ord_mod(p, big_m), q.nu + 1)
    if degree > degree_cap:
        raise ExtensionCapExceeded(
            f"trace family needs F_{{p^{degree}}} (cap {degree_cap})"
        )
    spec = make_field(p, degree)
    zeta = root_of_unity(spec, big_m)
    mu = []
    y = spec.one()
    for _ in range(big_m):
        mu.append(y)
        y = y * zeta
    kept = []
    removed = 0
    for x in mu:
        if trace_to_prime(x ** (-q.u), q.nu + 1):
            kept.append(x)
        else:
            removed += 1
    if removed != q.u * (p**q.nu - 1):
        raise AssertionError("trace-zero set has unexpected cardinality")
    reps = mu_m_orbit_reps(kept, m, spec)
    residues = tuple(
        (-trace_to_prime(x ** (-q.u), q.nu + 1)).prime_int() for x in reps
    )
    rd = ResidueData(q, degree, tuple(reps), residues)
    if not power_sum_check(rd):
        raise AssertionError("trace-family data fails the power-sum system")
    return rd


def d9_witnesses() -> list[Certificate]:
    """The four fully verified certificates behind the dihedral group of
    order 18: quadruples (3,2,1,2), (3,2,1,0), (3,2,5,8), (3,2,5,10)."""
    f3 = make_field(3, 1)
    out = []
    for n1 in (2, 0):
        rd = construct_small(3, n1)
        out.append(certify(rd.quadruple, reconstruct_f(rd)))
    f8 = Poly.from_ints(f3, [1, 0, 0, 0, 0, 0, 1, 0, 1])
    f10 = Poly.from_ints(f3, [1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2])
    out.append(certify(Quadruple(3, 2, 5, 8), f8))
    out.append(certify(Quadruple(3, 2, 5, 10), f10))
    for cert in out:
        if not cert.all_ok:
            raise AssertionError(
                f"hardcoded witness failed verification: {cert.quadruple}"
            )
    return out
