"""Pure-Python/numpy lane of the numerical kernels.

Mirrors ``_ckernels`` (the Cython lane) function for function.  Everything
here is reentrant and free of global mutable state; array functions are
vectorized over the argument, scalar state machines (the integrator) loop
in Python.

Conventions shared by both lanes:

* ``nu`` is the positive order parameter; the Bessel order is ``i*nu``.
* All powers use the principal branch, ``z**w = exp(w Log z)`` with
  ``Arg z in (-pi, pi]``.
* Error estimates returned by series/asymptotic routines are *relative*
  and deliberately pessimistic; callers switch evaluation strategy when
  an estimate exceeds their tolerance.
"""

import numpy as np

NAME = "python"

_EPS = 2.220446049250313e-16

# Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set).
_LANCZOS_G = 4.7421875
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def gamma_cx(z):
    """Complex gamma function via Lanczos sum plus reflection.

    Accurate to ~1e-14 relative away from the poles; callers reject
    nonpositive-integer arguments before calling.
    """
    z = complex(z)
    if z.real < 0.5:
        # Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return np.pi / (np.sin(np.pi * z) * gamma_cx(1.0 - z))
    zm1 = z - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, 15):
        acc += _LANCZOS_C[k] / (zm1 + k)
    t = zm1 + _LANCZOS_G + 0.5
    return np.sqrt(2.0 * np.pi) * t ** (zm1 + 0.5) * np.exp(-t) * acc


def i_pair_many(nu, zs):
    """Ascending series of I_{+i nu}(z) and I_{-i nu}(z) with dz-derivatives.

    Returns ``(Ip, Ipd, Im, Imd, err_diff, err_sum)``: relative roundoff
    estimates for the difference ``Im - Ip`` (which forms K) and for the
    sum ``Im + Ip`` (which forms the growing solution); the individual
    I's are no less accurate than either.
    """
    zs = np.atleast_1d(np.asarray(zs, dtype=np.complex128))
    sigma = 1j * nu
    g1 = gamma_cx(1.0 + sigma)
    lz = np.log(zs / 2.0)
    pref_p = np.exp(sigma * lz) / g1
    pref_m = np.exp(-sigma * lz) / np.conj(g1)
    q = zs * zs / 4.0

    tp = np.ones_like(zs)
    tm = np.ones_like(zs)
    sp = tp.copy()
    sm = tm.copy()
    dp = np.full_like(zs, sigma)
    dm = np.full_like(zs, -sigma)
    peak = np.ones(zs.shape)
    nterms = 1
    for k in range(1, 420):
        tp = tp * q / (k * (k + sigma))
        tm = tm * q / (k * (k - sigma))
        sp += tp
        sm += tm
        dp += tp * (sigma + 2 * k)
        dm += tm * (2 * k - sigma)
        np.maximum(peak, np.abs(tp), out=peak)
        np.maximum(peak, np.abs(tm), out=peak)
        nterms = k + 1
        if np.all(np.abs(tp) <= 1e-18 * np.abs(sp)):
            break
    ip = pref_p * sp
    im = pref_m * sm
    ipd = pref_p * dp / zs
    imd = pref_m * dm / zs
    # roundoff scale ~ eps * sqrt(n) * (largest term), relative to the
    # difference (K-forming) and to the sum (growing-solution-forming)
    noise = _EPS * np.sqrt(nterms) * peak * (np.abs(pref_p) + np.abs(pref_m))
    err_diff = noise / np.maximum(np.abs(im - ip), 1e-300)
    err_sum = noise / np.maximum(np.abs(im + ip), 1e-300)
    return ip, ipd, im, imd, err_diff, err_sum


def k_series_many(nu, zs):
    """K_{i nu}(z) and its dz-derivative from the combined ascending series."""
    zs = np.atleast_1d(np.asarray(zs, dtype=np.complex128))
    ip, ipd, im, imd, err_diff, _ = i_pair_many(nu, zs)
    # K = pi (I_{-i nu} - I_{+i nu}) / (2 sin(i nu pi)), sin(i nu pi) = i sinh(nu pi)
    pfac = -0.5j * np.pi / np.sinh(np.pi * nu)
    return pfac * (im - ip), pfac * (imd - ipd), err_diff


def _asym_sums(nu, zs, kmax=64):
    """Truncated asymptotic sums S2, S1 and their term-weighted companions.

    S2(z) = sum a_k z^-k,  S1(z) = sum (-1)^k a_k z^-k with
    a_k = a_{k-1} * -(4 nu^2 + (2k-1)^2) / (8k); truncation is per-point at
    the smallest term.  Returns (S2, T2, S1, T1, err) with
    T = sum (-k) * term_k so that S' = T / z.
    """
    zinv = 1.0 / zs
    term = np.ones_like(zs)
    s2 = np.ones_like(zs)
    t2 = np.zeros_like(zs)
    s1 = np.ones_like(zs)
    t1 = np.zeros_like(zs)
    err = np.zeros(zs.shape)
    act = np.ones(zs.shape, dtype=bool)
    last = np.ones(zs.shape)
    fournu2 = 4.0 * nu * nu
    for k in range(1, kmax + 1):
        ratio = -(fournu2 + (2 * k - 1) ** 2) / (8.0 * k)
        term = term * zinv * ratio
        mag = np.abs(term)
        grow = act & (mag >= last)
        err[grow] = last[grow]
        act &= ~grow
        add = act
        s2[add] += term[add]
        t2[add] += -k * term[add]
        sgn = -1.0 if k % 2 else 1.0
        s1[add] += sgn * term[add]
        t1[add] += sgn * -k * term[add]
        last = np.where(add, mag, last)
        done = act & (mag <= 1e-18)
        err[done] = mag[done]
        act &= ~done
        if not act.any():
            break
    err[act] = last[act]
    err = 2.0 * err / np.maximum(np.abs(s2), 1e-300)
    return s2, t2, s1, t1, err


def k_asym_many(nu, zs):
    """Large-|z| expansion of K_{i nu}(z), valid for Re z > 0.

    K ~ sqrt(pi/(2z)) e^{-z} S2(z); the returned error is the relative
    size of the first omitted/minimal term.
    """
    zs = np.atleast_1d(np.asarray(zs, dtype=np.complex128))
    s2, t2, _, _, err = _asym_sums(nu, zs)
    pref = np.sqrt(np.pi / (2.0 * zs)) * np.exp(-zs)
    k = pref * s2
    kd = -k * (1.0 + 0.5 / zs) + pref * t2 / zs
    return k, kd, err


def v_asym_many(nu, zs):
    """Large-|z| expansion of the growing combination v(z).

    v(z) ~ i e^{z - log sinh(nu pi)} S1(z) - coth(nu pi) e^{-z} S2(z).
    The recessive e^{-z} term carries a Stokes ambiguity of relative size
    cosh(nu pi) e^{-2 Re z}; it is added to the returned error estimate so
    callers switch to ODE continuation where the compound form is
    unreliable (steep rays with moderate Re z).
    """
    zs = np.atleast_1d(np.asarray(zs, dtype=np.complex128))
    s2, t2, s1, t1, err = _asym_sums(nu, zs)
    lsinh = np.pi * nu + np.log1p(-np.exp(-2.0 * np.pi * nu)) - np.log(2.0)
    coth = 1.0 / np.tanh(np.pi * nu)
    egrow = np.exp(zs - lsinh)
    edec = np.exp(-zs)
    v = 1j * egrow * s1 - coth * edec * s2
    vd = 1j * egrow * (s1 + t1 / zs) - coth * edec * (t2 / zs - s2)
    rez = np.real(zs)
    lcosh = np.pi * nu + np.log1p(np.exp(-2.0 * np.pi * nu)) - np.log(2.0)
    err = err + np.exp(np.minimum(lcosh - 2.0 * rez, 50.0))
    return v, vd, err


# Dormand-Prince 5(4) tableau.
_DP_C = (0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0)
_DP_A = (
    (),
    (0.2,),
    (3.0 / 40.0, 9.0 / 40.0),
    (44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0),
    (19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0),
    (9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0),
    (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0),
)
_DP_B = (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0)
_DP_E = (
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
)


def integrate_radial(q0, omega2, x0, x1, y0, yp0, rtol, atol, targets):
    """Integrate y'' = (q0 + omega2 * e^{2x}) y from x0 to x1.

    This is the log-radius form of the radial equation
    u'' = (omega^2 + b/r^2) u under u = e^{x/2} y(x), x = log r, with
    q0 = b + 1/4; with omega2 = e^{2 i psi} it equally continues solutions
    along the complex ray r e^{i psi}.  ``targets`` must be monotone from
    x0 toward x1 (either direction); the values and x-derivatives of y at
    the targets are returned.

    Adaptive Dormand-Prince 5(4) with a standard step controller; steps
    are clamped to land exactly on each target.
    """
    q0 = complex(q0)
    omega2 = complex(omega2)
    targets = np.asarray(targets, dtype=float)
    n = targets.shape[0]
    ys = np.empty(n, dtype=np.complex128)
    yps = np.empty(n, dtype=np.complex128)
    if n == 0:
        return ys, yps

    fwd = x1 >= x0
    sgn = 1.0 if fwd else -1.0
    if n > 1:
        d = np.diff(targets) * sgn
        if np.any(d < 0):
            raise ValueError("targets must be monotone in the direction of integration")
    span = abs(x1 - x0)
    hmin = max(1e-13 * max(span, 1.0), 1e-13)

    x = float(x0)
    y = complex(y0)
    yp = complex(yp0)

    def qval(xx):
        return q0 + omega2 * np.exp(2.0 * xx)

    # first derivative-stage (FSAL seed)
    k1y = yp
    k1p = qval(x) * y
    h = sgn * min(0.1, 0.25 / (abs(qval(x)) ** 0.5 + 1.0))

    it = 0
    next_i = 0
    # emit any target sitting exactly at the start
    while next_i < n and abs(targets[next_i] - x) <= 1e-14 * max(1.0, abs(x)):
        ys[next_i] = y
        yps[next_i] = yp
        next_i += 1

    while next_i < n:
        it += 1
        if it > 2_000_000:
            raise RuntimeError("integrate_radial: step budget exhausted")
        xt = targets[next_i]
        rem = xt - x
        if abs(rem) <= 1e-14 * max(1.0, abs(x)):
            ys[next_i] = y
            yps[next_i] = yp
            next_i += 1
            continue
        if (h > 0) != (rem > 0):
            h = sgn * abs(h)
        if abs(h) > abs(rem):
            h = rem
        if abs(h) < hmin:
            h = sgn * hmin

        # DP5 stages (k1 carried over, FSAL)
        kys = [k1y, 0j, 0j, 0j, 0j, 0j, 0j]
        kps = [k1p, 0j, 0j, 0j, 0j, 0j, 0j]
        for s in range(1, 7):
            ay = y
            ap = yp
            arow = _DP_A[s]
            for j in range(s):
                ay += h * arow[j] * kys[j]
                ap += h * arow[j] * kps[j]
            kys[s] = ap
            kps[s] = qval(x + _DP_C[s] * h) * ay
        y1 = y
        yp1 = yp
        ey = 0j
        ep = 0j
        for j in range(7):
            if _DP_B[j]:
                y1 += h * _DP_B[j] * kys[j]
                yp1 += h * _DP_B[j] * kps[j]
            if _DP_E[j]:
                ey += h * _DP_E[j] * kys[j]
                ep += h * _DP_E[j] * kps[j]
        # cross-terms keep the scale sane at zero crossings of y or yp
        ah = abs(h)
        scy = atol + rtol * max(abs(y), abs(y1), 0.5 * ah * max(abs(yp), abs(yp1)))
        scp = atol + rtol * max(abs(yp), abs(yp1), 0.5 * ah * abs(qval(x)) * max(abs(y), abs(y1)))
        err = np.sqrt(0.5 * ((abs(ey) / scy) ** 2 + (abs(ep) / scp) ** 2))
        if err <= 1.0 or abs(h) <= hmin * 1.0001:
            x = x + h
            y = y1
            yp = yp1
            k1y = kys[6]
            k1p = kps[6]
            while next_i < n and (targets[next_i] - x) * sgn <= 1e-14 * max(1.0, abs(x)):
                ys[next_i] = y
                yps[next_i] = yp
                next_i += 1
        fac = 0.9 * err ** -0.2 if err > 0 else 5.0
        h *= min(5.0, max(0.2, fac))
    return ys, yps
