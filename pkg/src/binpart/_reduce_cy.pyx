# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel; same API and bit-identical results as
``_reduce_py``.  Numerators stay arbitrary-precision Python ints, the
speedup comes from compiling the merge/compare loops."""

from math import gcd

KERNEL_NAME = "compiled"


def exp_key(tuple exp, tuple rows):
    cdef Py_ssize_t i, n = len(exp)
    cdef tuple r
    cdef list out = []
    for r in rows:
        s = 0
        for i in range(n):
            s = s + r[i] * exp[i]
        out.append(s)
    return tuple(out)


def divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


def exp_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = []
    for i in range(n):
        out.append(a[i] if a[i] >= b[i] else b[i])
    return tuple(out)


cdef tuple _tuple_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = []
    for i in range(n):
        out.append(a[i] + b[i])
    return tuple(out)


def shift_scale(list terms, c, tuple kshift, tuple eshift):
    cdef bint trivial = True
    cdef Py_ssize_t i
    for i in range(len(kshift)):
        if kshift[i] != 0:
            trivial = False
            break
    if trivial:
        for i in range(len(eshift)):
            if eshift[i] != 0:
                trivial = False
                break
    cdef list out = []
    cdef tuple t
    if trivial:
        for t in terms:
            out.append((t[0], t[1], c * t[2]))
        return out
    for t in terms:
        out.append((_tuple_add(t[0], kshift), _tuple_add(t[1], eshift), c * t[2]))
    return out


def merge(list a, list b):
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, na = len(a), nb = len(b)
    cdef tuple ta, tb
    while i < na and j < nb:
        ta = a[i]
        tb = b[j]
        if ta[0] > tb[0]:
            out.append(ta)
            i += 1
        elif tb[0] > ta[0]:
            out.append(tb)
            j += 1
        else:
            v = ta[2] + tb[2]
            if v:
                out.append((ta[0], ta[1], v))
            i += 1
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return out


def normalize(den, list terms):
    if not terms:
        return 1, []
    g = abs(den)
    cdef tuple t
    for t in terms:
        g = gcd(g, t[2])
        if g == 1:
            break
    if den < 0:
        g = -g
    if g == 1:
        return den, terms
    cdef list out = []
    for t in terms:
        out.append((t[0], t[1], t[2] // g))
    return den // g, out


def raw_from_pairs(pairs, tuple rows):
    cdef dict acc = {}
    for exp, num in pairs:
        acc[exp] = acc.get(exp, 0) + num
    cdef list terms = []
    for e, v in acc.items():
        if v:
            terms.append((exp_key(e, rows), e, v))
    terms.sort(key=_key_of, reverse=True)
    return terms


def _key_of(tuple t):
    return t[0]


def normal_form(den, terms, reducers):
    cdef list out = []
    cdef list work = list(terms)
    cdef list tail, scaled
    cdef Py_ssize_t steps = 0, no
    cdef tuple head, g, glead
    while work:
        head = work[0]
        red = None
        for g in reducers:
            if divides((<tuple> (<list> g[1])[0])[1], head[1]):
                red = g
                break
        if red is None:
            out.append(work.pop(0))
            continue
        gterms = <list> red[1]
        glead = gterms[0]
        gnum = glead[2]
        kshift = _tuple_sub(head[0], glead[0])
        eshift = _tuple_sub(head[1], glead[1])
        a0 = head[2]
        tail = shift_scale(gterms[1:], -a0, kshift, eshift)
        if gnum != 1:
            scaled = []
            for t in work[1:]:
                scaled.append((t[0], t[1], gnum * t[2]))
            work = scaled
            scaled = []
            for t in out:
                scaled.append((t[0], t[1], gnum * t[2]))
            out = scaled
            den = den * gnum
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


cdef tuple _tuple_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = []
    for i in range(n):
        out.append(a[i] - b[i])
    return tuple(out)


def spoly(f, g, tuple rows):
    fterms = <list> f[1]
    gterms = <list> g[1]
    cdef tuple flead = fterms[0]
    cdef tuple glead = gterms[0]
    fe = flead[1]
    ge = glead[1]
    fa = flead[2]
    ga = glead[2]
    lcm_e = exp_lcm(fe, ge)
    sf = _tuple_sub(lcm_e, fe)
    sg = _tuple_sub(lcm_e, ge)
    a = shift_scale(fterms, ga, exp_key(sf, rows), sf)
    b = shift_scale(gterms, -fa, exp_key(sg, rows), sg)
    return normalize(fa * ga, merge(a, b))
