"""Pure-Python reference kernels.

These are the fallback when the compiled ``_ckernels`` extension is not
built. Both modules expose the same three functions with the same
signatures; each returns ``(value, terms_used, converged)``.
"""
import cmath
import math

def qpoch_inf(a, q, tol, max_terms):
    a = complex(a)
    q = complex(q)
    abs_a = abs(a)
    abs_q = abs(q)
    denom = 1.0 - abs_q
    prod = 1.0 + 0.0j
    aqk = a
    qk_abs = 1.0
    for k in range(max_terms + 1):
        if abs_a * qk_abs / denom < tol:
            return prod, k, True
        if k == max_terms:
            break
        prod *= 1.0 - aqk
        aqk *= q
        qk_abs *= abs_q
    return prod, max_terms, False


def theta1_sum(z, tau, tol, max_terms, scaled=False):
    """Partial sums of theta1 until the next term bound is below ``tol`` times the first.

    With ``scaled`` the result is ``theta1 / (2 q**(1/4))``, which stays
    representable when ``q**(1/4)`` underflows.
    """
    z = complex(z)
    tau = complex(tau)
    ipt = 1j * math.pi * tau
    decay = math.pi * tau.imag / 4.0
    abs_imz = abs(z.imag)
    log_tol = math.log(tol)
    shift = 1.0 if scaled else 0.0
    total = 0.0j
    sign = 1.0
    for n in range(max_terms):
        j = 2 * n + 1
        if -decay * (j * j - 1) + (j - 1) * abs_imz < log_tol:
            return (total if scaled else 2.0 * total), n, True
        total += sign * cmath.exp(ipt * ((j * j - shift) / 4.0)) * cmath.sin(j * z)
        sign = -sign
    return (total if scaled else 2.0 * total), max_terms, False


def theta1_prime_sum(tau, tol, max_terms, scaled=False):
    tau = complex(tau)
    ipt = 1j * math.pi * tau
    decay = math.pi * tau.imag / 4.0
    log_tol = math.log(tol)
    shift = 1.0 if scaled else 0.0
    total = 0.0j
    sign = 1.0
    for n in range(max_terms):
        j = 2 * n + 1
        if math.log(j) - decay * (j * j - 1) < log_tol:
            return (total if scaled else 2.0 * total), n, True
        total += sign * j * cmath.exp(ipt * ((j * j - shift) / 4.0))
        sign = -sign
    return (total if scaled else 2.0 * total), max_terms, False
