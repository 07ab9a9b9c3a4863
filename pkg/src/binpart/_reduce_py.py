"""Pure-Python reduction kernel.

Raw polynomials are ``(den, terms)`` where ``terms`` is a list of
``(key, exp, num)`` triples sorted descending by ``key`` (the order
matrix applied to the exponent), ``num`` are integers sharing the
common denominator ``den``.  Keys are additive under monomial shifts,
which keeps the division loop free of order-matrix products.

The compiled twin ``_reduce_cy`` implements exactly the same functions;
:mod:`binpart._kernel` picks one at import time.
"""

from math import gcd

KERNEL_NAME = "python"


def exp_key(exp, rows):
    return tuple(sum(r[i] * exp[i] for i in range(len(exp))) for r in rows)


def divides(a, b):
    """Componentwise a <= b (monomial divisibility for nonneg exponents)."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exp_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def shift_scale(terms, c, kshift, eshift):
    """c * x^shift * terms; keys shift additively."""
    if not any(kshift) and not any(eshift):
        return [(k, e, c * v) for k, e, v in terms]
    return [
        (tuple(a + b for a, b in zip(k, kshift)),
         tuple(a + b for a, b in zip(e, eshift)),
         c * v)
        for k, e, v in terms
    ]


def merge(a, b):
    """Sum of two descending term lists, dropping cancellations."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ka = a[i][0]
        kb = b[j][0]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif kb > ka:
            out.append(b[j])
            j += 1
        else:
            v = a[i][2] + b[j][2]
            if v:
                out.append((ka, a[i][1], v))
            i += 1
            j += 1
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:])
    return out


def normalize(den, terms):
    """Reduce by the common content and make the denominator positive."""
    if not terms:
        return 1, []
    g = abs(den)
    for _, _, v in terms:
        g = gcd(g, v)
        if g == 1:
            break
    if den < 0:
        g = -g
    if g != 1:
        den //= g
        terms = [(k, e, v // g) for k, e, v in terms]
    return den, terms


def raw_from_pairs(pairs, rows):
    """Build sorted raw terms (no denominator) from (exp, num) pairs."""
    acc = {}
    for exp, num in pairs:
        acc[exp] = acc.get(exp, 0) + num
    terms = [(exp_key(e, rows), e, v) for e, v in acc.items() if v]
    terms.sort(key=lambda t: t[0], reverse=True)
    return terms


def normal_form(den, terms, reducers):
    """Fully reduce (den, terms) modulo ``reducers``.

    ``reducers`` is a sequence of (den_g, terms_g) raw polynomials with
    nonzero lead terms; the first whose lead exponent divides the
    current lead is used.  Tail terms are reduced too, so against a
    reduced Groebner basis the result is the unique normal form.
    """
    out = []
    work = list(terms)
    steps = 0
    while work:
        k0, e0, a0 = work[0]
        red = None
        for g in reducers:
            if divides(g[1][0][1], e0):
                red = g
                break
        if red is None:
            out.append(work.pop(0))
            continue
        _, gterms = red
        gk, ge, gnum = gterms[0]
        kshift = tuple(a - b for a, b in zip(k0, gk))
        eshift = tuple(a - b for a, b in zip(e0, ge))
        # f <- gnum*f - a0*x^shift*g over denominator den*gnum; the
        # reducer's own denominator cancels and the leads cancel.
        tail = shift_scale(gterms[1:], -a0, kshift, eshift)
        if gnum != 1:
            work = [(k, e, gnum * v) for k, e, v in work[1:]]
            out = [(k, e, gnum * v) for k, e, v in out]
            den *= gnum
        else:
            work = work[1:]
        work = merge(work, tail)
        steps += 1
        if steps % 24 == 0 and (den > 1 or den < -1):
            no = len(out)
            den, combined = normalize(den, out + work)
            out = combined[:no]
            work = combined[no:]
    return normalize(den, out)


def spoly(f, g, rows):
    """S-polynomial of two raw polynomials.

    Since f = (1/den)*sum(num_i x^e_i), dividing by the lead
    coefficient just replaces the denominator by the lead numerator, so
    spoly = x^(lcm-fe)*f/lc(f) - x^(lcm-ge)*g/lc(g) lives over the
    common denominator fa*ga with the integer numerators below.
    """
    _, fterms = f
    _, gterms = g
    _, fe, fa = fterms[0]
    _, ge, ga = gterms[0]
    lcm_e = exp_lcm(fe, ge)
    sf = tuple(a - b for a, b in zip(lcm_e, fe))
    sg = tuple(a - b for a, b in zip(lcm_e, ge))
    a = shift_scale(fterms, ga, exp_key(sf, rows), sf)
    b = shift_scale(gterms, -fa, exp_key(sg, rows), sg)
    return normalize(fa * ga, merge(a, b))
