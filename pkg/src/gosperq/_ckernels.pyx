# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_pykernels``."""
from libc.math cimport log, fabs, M_PI

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex csin(double complex)
    double cabs(double complex)

def qpoch_inf(a, q, double tol, long max_terms):
    cdef double complex ca = complex(a)
    cdef double complex cq = complex(q)
    cdef double abs_a = cabs(ca)
    cdef double abs_q = cabs(cq)
    cdef double denom = 1.0 - abs_q
    cdef double complex prod = 1.0
    cdef double complex aqk = ca
    cdef double qk_abs = 1.0
    cdef long k
    with nogil:
        for k in range(max_terms + 1):
            if abs_a * qk_abs / denom < tol:
                break
            if k == max_terms:
                break
            prod = prod * (1.0 - aqk)
            aqk = aqk * cq
            qk_abs = qk_abs * abs_q
    if abs_a * qk_abs / denom < tol:
        return complex(prod), k, True
    return complex(prod), max_terms, False


def theta1_sum(z, tau, double tol, long max_terms, bint scaled=False):
    cdef double complex cz = complex(z)
    cdef double complex ct = complex(tau)
    cdef double complex ipt = 1j * M_PI * ct
    cdef double decay = M_PI * ct.imag / 4.0
    cdef double abs_imz = fabs(cz.imag)
    cdef double log_tol = log(tol)
    cdef double shift = 1.0 if scaled else 0.0
    cdef double complex total = 0.0
    cdef double sign = 1.0
    cdef long n, j
    cdef bint done = False
    with nogil:
        for n in range(max_terms):
            j = 2 * n + 1
            if -decay * (j * j - 1) + (j - 1) * abs_imz < log_tol:
                done = True
                break
            total = total + sign * cexp(ipt * ((j * j - shift) / 4.0)) * csin(j * cz)
            sign = -sign
    if not scaled:
        total = 2.0 * total
    if done:
        return complex(total), n, True
    return complex(total), max_terms, False


def theta1_prime_sum(tau, double tol, long max_terms, bint scaled=False):
    cdef double complex ct = complex(tau)
    cdef double complex ipt = 1j * M_PI * ct
    cdef double decay = M_PI * ct.imag / 4.0
    cdef double log_tol = log(tol)
    cdef double shift = 1.0 if scaled else 0.0
    cdef double complex total = 0.0
    cdef double sign = 1.0
    cdef long n, j
    cdef bint done = False
    with nogil:
        for n in range(max_terms):
            j = 2 * n + 1
            if log(<double>j) - decay * (j * j - 1) < log_tol:
                done = True
                break
            total = total + sign * j * cexp(ipt * ((j * j - shift) / 4.0))
            sign = -sign
    if not scaled:
        total = 2.0 * total
    if done:
        return complex(total), n, True
    return complex(total), max_terms, False
