"""Pure-Python term-dictionary kernel.

A term dict maps an exponent tuple (one int per variable, negatives allowed)
to a nonzero integer coefficient.  These four functions are the inner loop of
every mutation walk; `quiverlab._termops_cy` is the compiled twin with
identical semantics, selected at import by `quiverlab.termops`.
"""

BACKEND = "python"


def add_terms(a, b):
    out = dict(a)
    for exp, coeff in b.items():
        s = out.get(exp, 0) + coeff
        if s:
            out[exp] = s
        else:
            out.pop(exp, None)
    return out


def mul_terms(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(exp, 0) + ca * cb
            if s:
                out[exp] = s
            else:
                del out[exp]
    return out


def scale_terms(a, coeff):
    if coeff == 0:
        return {}
    return {exp: c * coeff for exp, c in a.items()}


def shift_terms(a, mono):
    return {tuple(x + y for x, y in zip(exp, mono)): c for exp, c in a.items()}
