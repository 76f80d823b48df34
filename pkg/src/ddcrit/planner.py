"""Integer and exact-rational bookkeeping: from a target group and jump
profile to the finite list of quadruples the criterion must realize, and the
critical/hub radii attached to each lifting step."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartier import Quadruple
from .errors import BadCongruence, EssentialRamification, InvalidQuadruple
from .witt import JumpProfile


def _frac_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


@dataclass(frozen=True)
class RadiiReport:
    r_crit: Fraction
    r_hub: Fraction
    r_n: Fraction
    n2: int
    delta_hub: Fraction

    def __post_init__(self):
        if self.n2 > 0:
            assert self.r_n < self.r_hub < self.r_crit
        else:
            assert self.r_hub == 0

    def to_json(self):
        return {
            "r_crit": _frac_json(self.r_crit),
            "r_hub": _frac_json(self.r_hub),
            "r_n": _frac_json(self.r_n),
            "n2": self.n2,
            "delta_hub": _frac_json(self.delta_hub),
        }


def quadruple_for_step(p: int, m: int, u_prev: int, u_next: int) -> Quadruple:
    """The quadruple attached to one step u_prev -> u_next of a reduced jump
    profile: N1 = (p-1)u_prev when u_next = p*u_prev, else (p-1)u_prev - m."""
    if u_prev % m != m - 1 or u_next % m != m - 1:
        raise BadCongruence("both jumps must be -1 mod m")
    if not p * u_prev <= u_next < p * u_prev + m * p:
        raise EssentialRamification(
            f"u_next = {u_next} outside [p*u_prev, p*u_prev + mp)"
        )
    n1 = (p - 1) * u_prev if u_next == p * u_prev else (p - 1) * u_prev - m
    return Quadruple(p, m, u_prev, n1)


def quadruples_for_group(p: int, m: int, n: int) -> list[Quadruple]:
    """All quadruples whose realization settles the group Z/p^n x| Z/m:
    u~ = -1 mod m, p^(n-1) does not divide u~, u~ < m(p^(n-1)+...+p), with
    both N1 = (p-1)u~ and (p-1)u~ - m.  Empty for n = 1."""
    bound = m * sum(p**i for i in range(1, n))
    out = []
    for u_tilde in range(m - 1, bound, m):
        if u_tilde % p ** (n - 1) == 0:
            continue
        for n1 in ((p - 1) * u_tilde, (p - 1) * u_tilde - m):
            q = Quadruple(p, m, u_tilde, n1)
            if q not in out:
                out.append(q)
    return out


def profiles_for_group(p: int, m: int, n: int) -> list[JumpProfile]:
    """All KGB-vanishing jump profiles of length n with no essential
    ramification: u_1 < mp, p*u_{i-1} <= u_i < p*u_{i-1} + mp, every u_i = -1
    mod m, and p | u_i only when u_i = p*u_{i-1}."""
    profiles: list[tuple[int, ...]] = [()]
    for i in range(n):
        nxt = []
        for prof in profiles:
            lo = p * prof[-1] if prof else 0
            for u in range(lo, lo + m * p):
                if u % m != m - 1:
                    continue
                if u % p == 0 and u != lo:
                    continue
                if i == 0 and u % p == 0:
                    continue
                nxt.append(prof + (u,))
        profiles = nxt
    return [JumpProfile(prof).validate(p) for prof in profiles]


def lifting_radii(
    p: int, m: int, u_prev: int, u_next: int, n1: int
) -> RadiiReport:
    """Exact critical/hub radii for one lifting step."""
    q = quadruple_for_step(p, m, u_prev, u_next)
    if q.n1 != n1:
        raise InvalidQuadruple(
            f"N1 = {n1} inconsistent with the step rule (expected {q.n1})"
        )
    n2 = u_next - u_prev - n1
    r_crit = Fraction(1, u_prev * (p - 1))
    r_n = Fraction(1, u_next * (p - 1))
    if n2 == 0:
        r_hub = Fraction(0)
    else:
        r_hub = Fraction(1, n2) - Fraction(n1, (p - 1) * u_prev * n2)
    return RadiiReport(r_crit, r_hub, r_n, n2, u_next * r_hub)
