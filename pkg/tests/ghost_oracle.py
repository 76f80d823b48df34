"""Independent characteristic-zero ghost-component oracle for Witt addition.

Field elements are lifted to Z[x]/(M(x)) with integer coefficients in [0, p)
and all arithmetic runs mod p^prec (M is monic, so reduction is integral).
If v'' = v + v' in W_n, the Frobenius-lifting lemma gives

    w_i(lift v'') == w_i(lift v) + w_i(lift v')   (mod p^(i+1)),

which is what callers should compare.  Nothing here touches the package's
Witt code beyond reading Laurent term dictionaries.
"""

from __future__ import annotations


def _cmul(a, b, modulus, q):
    """Multiply two Z[x]/(M) coefficient lists mod q."""
    k = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1 or 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    # reduce by the monic modulus
    for d in range(len(out) - 1, k - 1, -1):
        c = out[d]
        if c:
            for i in range(k + 1):
                out[d - k + i] = (out[d - k + i] - c * modulus[i]) % q
    return [x % q for x in out[:k]] + [0] * max(0, k - len(out))


def _lmul(f, g, modulus, q):
    out: dict[int, list[int]] = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            prod = _cmul(c1, c2, modulus, q)
            e = e1 + e2
            if e in out:
                out[e] = [(a + b) % q for a, b in zip(out[e], prod)]
            else:
                out[e] = prod
    return {e: c for e, c in out.items() if any(c)}


def _lpow(f, n, modulus, q):
    k = len(modulus) - 1
    result = {0: [1] + [0] * (k - 1)}
    base = f
    while n:
        if n & 1:
            result = _lmul(result, base, modulus, q)
        base = _lmul(base, base, modulus, q)
        n >>= 1
    return result


def _ladd_scaled(acc, f, scale, q):
    for e, c in f.items():
        scaled = [(x * scale) % q for x in c]
        if e in acc:
            acc[e] = [(a + b) % q for a, b in zip(acc[e], scaled)]
        else:
            acc[e] = scaled
    return acc


def lift(witt_vector):
    """Laurent entries as {exponent: integer coefficient list} dicts."""
    return [
        {e: list(c.coeffs) for e, c in entry.terms()}
        for entry in witt_vector.entries
    ]


def ghost_components(lifted, p, modulus, prec):
    """w_i = sum_j p^j entry_j^(p^(i-j)), each computed mod p^prec."""
    q = p**prec
    out = []
    for i in range(len(lifted)):
        acc: dict[int, list[int]] = {}
        for j in range(i + 1):
            powed = _lpow(lifted[j], p ** (i - j), modulus, q)
            acc = _ladd_scaled(acc, powed, p**j, q)
        out.append({e: tuple(c) for e, c in acc.items() if any(c)})
    return out


def ghosts_agree(v, w, total, p, modulus):
    """True iff ghost(total) == ghost(v) + ghost(w) mod p^(i+1) at level i."""
    n = len(v.entries)
    gv = ghost_components(lift(v), p, modulus, n)
    gw = ghost_components(lift(w), p, modulus, n)
    gt = ghost_components(lift(total), p, modulus, n)
    for i in range(n):
        q = p ** (i + 1)
        exps = set(gv[i]) | set(gw[i]) | set(gt[i])
        k = len(modulus) - 1
        zero = (0,) * k
        for e in exps:
            a = gv[i].get(e, zero)
            b = gw[i].get(e, zero)
            c = gt[i].get(e, zero)
            if any((x + y - z) % q for x, y, z in zip(a, b, c)):
                return False
    return True
