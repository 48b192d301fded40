"""Dense univariate polynomial arithmetic over a prime field F_p.

Polynomials are tuples of ints in [0, p), lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  Everything here is
exact integer arithmetic, small enough that no external library is needed.
"""

from __future__ import annotations

PZERO: tuple[int, ...] = ()
PONE: tuple[int, ...] = (1,)
PX: tuple[int, ...] = (0, 1)


def ptrim(cs) -> tuple[int, ...]:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def pdeg(f) -> int:
    """Degree, with deg(0) = -1."""
    return len(f) - 1


def padd(f, g, p):
    n = max(len(f), len(g))
    return ptrim((( (f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) ) % p) for i in range(n))


def pneg(f, p):
    return tuple((-c) % p for c in f)


def psub(f, g, p):
    return padd(f, pneg(g, p), p)


def pscale(f, c, p):
    c %= p
    if c == 0:
        return PZERO
    return tuple((c * a) % p for a in f)


def pmul(f, g, p):
    if not f or not g:
        return PZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return ptrim(out)


def pdivmod(f, g, p):
    """Quotient and remainder of f by nonzero g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, p)
    rem = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(rem) >= len(g) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        c = (rem[-1] * inv) % p
        d = len(rem) - len(g)
        q[d] = c
        for i, b in enumerate(g):
            rem[d + i] = (rem[d + i] - c * b) % p
    return ptrim(q), ptrim(rem)


def pmod(f, g, p):
    return pdivmod(f, g, p)[1]


def pmonic(f, p):
    """Rescale a nonzero polynomial so its leading coefficient is 1."""
    if not f:
        return PZERO
    return pscale(f, pow(f[-1], -1, p), p)


def pgcd(f, g, p):
    """Monic gcd, with pgcd(0, 0) = 0."""
    while g:
        f, g = g, pmod(f, g, p)
    return pmonic(f, p)


def ppow_mod(f, n, modulus, p):
    out = PONE
    base = pmod(f, modulus, p)
    while n:
        if n & 1:
            out = pmod(pmul(out, base, p), modulus, p)
        base = pmod(pmul(base, base, p), modulus, p)
        n >>= 1
    return out


def pcompose(f, g, p):
    """f(g(x)), by Horner on the coefficients of f."""
    out = PZERO
    for c in reversed(f):
        out = padd(pmul(out, g, p), (c,) if c else PZERO, p)
    return out


def monic_polys(degree, p):
    """All monic polynomials of the given degree, ascending coefficient encoding."""
    span = p ** degree
    for enc in range(span):
        cs, e = [], enc
        for _ in range(degree):
            cs.append(e % p)
            e //= p
        yield tuple(cs) + (1,)


def irreducible_factor(f, p):
    """A monic factor of degree in [1, deg(f)/2], or None if f is irreducible.

    Trial division, which is exact and plenty at desk scale.
    """
    if pdeg(f) <= 0:
        raise ValueError("need a polynomial of degree >= 1")
    for d in range(1, pdeg(f) // 2 + 1):
        for g in monic_polys(d, p):
            if not pmod(f, g, p):
                return g
    return None


def is_irreducible(f, p) -> bool:
    return pdeg(f) >= 1 and irreducible_factor(f, p) is None


def default_irreducible(p, k):
    """The monic irreducible of degree k with the smallest coefficient encoding.

    Deterministic, so GF(p, k) built without an explicit modulus always has
    the same tables and labels.
    """
    if k == 1:
        return PX
    for f in monic_polys(k, p):
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


def poly_str(f, var="x") -> str:
    """Canonical rendering: descending degree, '0' for the zero polynomial."""
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(var if c == 1 else f"{c}{var}")
        else:
            parts.append(f"{var}^{i}" if c == 1 else f"{c}{var}^{i}")
    return "+".join(parts)


def parse_poly(text, p, var="x"):
    """Parse a polynomial like 'x^2+3x+1' or '2' over F_p.

    Accepts '-' between terms and optional '*' between coefficient and
    variable.  Raises ValueError on anything else.
    """
    s = text.replace(" ", "").replace("**", "^").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    s = s.replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            raise ValueError(f"malformed polynomial {text!r}")
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        if var in term:
            head, _, tail = term.partition(var)
            c = int(head) if head else 1
            if tail.startswith("^"):
                e = int(tail[1:])
            elif tail == "":
                e = 1
            else:
                raise ValueError(f"malformed term {term!r} in {text!r}")
        else:
            c, e = int(term), 0
        coeffs[e] = (coeffs.get(e, 0) + sign * c) % p
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return ptrim(out)
