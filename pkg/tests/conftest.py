"""High-precision oracles shared by the tests, and the acceptance summary hook."""
import mpmath

mpmath.mp.dps = 40

# Frozen oracle digits (40-digit mpmath partial products / series).
PINNED = {
    "qpoch_0.1": "0.8900100999989990000001000099999999899999",
    "qpoch_0.1_sq": "0.7921179781002281997799790218212017819796",
    "theta1_half_i": "0.913579138156116821407242593401222089702",
    "theta1_prime_i": "0.9067676551677312202465961686799118666175",
    "sinq_0.5_pi4": "0.7071067811859410325237468960209221065714",
    "piq_0.1": "0.6816719551370556666364698840699377020796",
    "pi_ratio_0.3_4": "4.279313720345871175938044245616300996259",
    "pi_ratio_0.2_9": "36.48543452857283933959233993136395755141",
    "pi_ratio_0.3_9": "19.58678467038698756450744011858374322607",
}


def mp_qpoch(a, q, terms=4000):
    """Partial product of (a; q)_inf at working precision."""
    a, q = mpmath.mpmathify(a), mpmath.mpmathify(q)
    out = mpmath.mpf(1)
    for n in range(terms):
        f = a * q**n
        if abs(f) < mpmath.mpf(10) ** (-mpmath.mp.dps - 5):
            break
        out *= 1 - f
    return out


def mp_theta1(z, tau, terms=400):
    """theta1(z | tau) by its alternating series."""
    z, tau = mpmath.mpmathify(z), mpmath.mpmathify(tau)
    s = 0
    for n in range(terms):
        j = 2 * n + 1
        term = (-1) ** n * mpmath.exp(1j * mpmath.pi * tau * mpmath.mpf(j * j) / 4) * mpmath.sin(j * z)
        s += term
        if abs(term) < mpmath.mpf(10) ** (-mpmath.mp.dps - 5) and n > 3:
            break
    return 2 * s


def mp_sinq(z, q):
    """Gosper's sin_q by the product definition at working precision (real 0 < q < 1)."""
    z, q = mpmath.mpmathify(z), mpmath.mpf(q)
    w = z / mpmath.pi
    q2 = q * q
    num = mp_qpoch(q ** (2 * w), q2) * mp_qpoch(q ** (2 - 2 * w), q2)
    return q ** ((w - mpmath.mpf(1) / 2) ** 2) * num / mp_qpoch(q, q2) ** 2


def mp_piq(q):
    q = mpmath.mpf(q)
    q2 = q * q
    return q ** (mpmath.mpf(1) / 4) * mp_qpoch(q2, q2) ** 2 / mp_qpoch(q, q2) ** 2


# -- acceptance summary --------------------------------------------------------

ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        passed, runtime, detail = ACCEPTANCE_RESULTS[n]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status} ({runtime:.2f}s) {detail}")
