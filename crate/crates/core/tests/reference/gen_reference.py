"""Reference values for tests/reference_values.rs, computed with mpmath at
high precision by direct summation and quadrature. Run with python3; the
output is pasted into the Rust table verbatim."""

import mpmath as mp

mp.mp.dps = 150


def ml(alpha, beta, z):
    z = mp.mpc(z)
    total, k, small = mp.mpf(0), 0, 0
    while True:
        term = z**k * mp.rgamma(alpha * k + beta)
        total += term
        # 1/Gamma vanishes at its poles, so one tiny term proves nothing
        small = small + 1 if abs(term) < mp.mpf(10) ** -40 * max(abs(total), 1) else 0
        if k > 20 and small >= 8:
            return total
        k += 1


def wright(a, b, z):
    total, n, small = mp.mpf(0), 0, 0
    while True:
        term = mp.mpf(z) ** n * mp.rgamma(b + a * n) / mp.factorial(n)
        total += term
        # 1/Gamma vanishes at its poles, so one tiny term proves nothing
        small = small + 1 if abs(term) < mp.mpf(10) ** -40 * max(abs(total), 1) else 0
        if n > 20 and small >= 8:
            return total
        n += 1


def series_solution(mu, terms, x, y):
    """sum over kernel terms y^p E_{mu,b}: (y^{p-mu/2}/2) phi(-mu/2, b-mu/2; -|x|/y^{mu/2})."""
    mu, x, y = mp.mpf(mu), mp.mpf(x), mp.mpf(y)
    X = abs(x) / y ** (mu / 2)
    return sum(y ** (p - mu / 2) / 2 * wright(-mu / 2, b - mu / 2, -X) for p, b in terms)


def cosine_solution(alpha, mu, terms, x, y):
    """(1/pi) int_0^inf cos(k x) sum y^p E_{mu,b}(-y^mu k^alpha) dk."""
    alpha, mu, x, y = mp.mpf(alpha), mp.mpf(mu), mp.mpf(x), mp.mpf(y)

    def h(k):
        if k == 0:
            return sum(y**p * mp.rgamma(b) for p, b in terms)
        return sum(y**p * ml(mu, b, -(y**mu) * k**alpha) for p, b in terms)

    old = mp.mp.dps
    mp.mp.dps = 40
    v = mp.quadosc(lambda k: mp.cos(k * x) * h(k), [0, mp.inf], omega=x) / mp.pi
    mp.mp.dps = old
    return v


def stable(fn, *args):
    """Evaluate at two working precisions and insist on agreement, since the
    alternating sums lose many digits to cancellation."""
    with mp.workdps(150):
        lo = fn(*args)
    with mp.workdps(300):
        hi = fn(*args)
    assert abs(hi - lo) <= mp.mpf(10) ** -25 * max(abs(hi), mp.mpf(10) ** -30), (fn.__name__, args)
    return hi


def fmt(v):
    v = mp.mpc(v)
    return f"({mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)})"


print("// ml: (alpha, beta, z_re, z_im) -> value")
for a, b, z in [(0.5, 1, -3), (1.5, 1, -10), (1.5, 0.5, 5), (1.8, 1.2, -30), (0.8, 0.9, mp.mpc(2, 3)),
                (1.25, 0.75, -50), (1.9, 1.6, -200), (2.0, 1.5, -40)]:
    z = mp.mpc(z)
    print(f"({a}, {b}, {mp.nstr(z.real, 6)}, {mp.nstr(z.imag, 6)}, {fmt(stable(ml, mp.mpf(a), mp.mpf(b), z))}),")

print("// wright: (a, b, z) -> value")
for a, b, z in [(-0.5, 0.5, -3), (-0.75, 0.25, -5), (0.5, 1, 2), (-0.3, 0.8, -10), (-0.6, 0.1, -8)]:
    print(f"({a}, {b}, {z}, {mp.nstr(stable(wright, mp.mpf(a), mp.mpf(b), mp.mpf(z)), 20)}),")

print("// alpha = 2 delta-data solutions: (mu, nu, f, g, source, x, y) -> N")
cases = [
    (1.5, 0.5, "delta", "zero", "zero", 0.3, 1.0),
    (1.5, 0.5, "delta", "zero", "zero", 1.0, 0.7),
    (1.5, 0.5, "delta", "zero", "zero", 3.0, 1.2),
    (1.25, 0.0, "delta", "zero", "delta_delta", 0.5, 1.0),
    (1.25, 0.0, "delta", "zero", "delta_delta", 2.0, 0.5),
    (1.7, 1.0, "zero", "delta", "zero", 0.8, 1.5),
]


def kernel_terms(mu, nu, f, g, source):
    lam = (1 - mp.mpf(nu)) * (2 - mp.mpf(mu))
    t = []
    if f == "delta":
        t.append((-lam, 1 - lam))
    if g == "delta":
        t.append((1 - lam, 2 - lam))
    if source == "delta_delta":
        t.append((mp.mpf(mu) - 1, mp.mpf(mu)))
    return t


for mu, nu, f, g, s, x, y in cases:
    v = stable(series_solution, mu, kernel_terms(mu, nu, f, g, s), x, y)
    print(f'({mu}, {nu}, "{f}", "{g}", "{s}", {x}, {y}, {mp.nstr(v, 20)}),')

