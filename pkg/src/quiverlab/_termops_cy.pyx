# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-dictionary kernel; semantics identical to _termops_py."""

from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF

BACKEND = "cython"


cdef inline tuple _exp_add(tuple ea, tuple eb):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(ea)
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object s
    for i in range(n):
        s = (<object>PyTuple_GET_ITEM(ea, i)) + (<object>PyTuple_GET_ITEM(eb, i))
        Py_INCREF(s)
        PyTuple_SET_ITEM(out, i, s)
    return out


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object exp, coeff, s
    for exp, coeff in b.items():
        s = out.get(exp, 0) + coeff
        if s:
            out[exp] = s
        else:
            out.pop(exp, None)
    return out


def mul_terms(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef tuple ea, eb
    cdef object ca, cb, s
    for ea, ca in a.items():
        for eb, cb in b.items():
            exp = _exp_add(ea, eb)
            s = out.get(exp, 0) + ca * cb
            if s:
                out[exp] = s
            else:
                del out[exp]
    return out


def scale_terms(dict a, coeff):
    if coeff == 0:
        return {}
    cdef dict out = {}
    cdef object exp, c
    for exp, c in a.items():
        out[exp] = c * coeff
    return out


def shift_terms(dict a, tuple mono):
    cdef dict out = {}
    cdef tuple exp
    cdef object c
    for exp, c in a.items():
        out[_exp_add(exp, mono)] = c
    return out
