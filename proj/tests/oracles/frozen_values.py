"""Independent oracles for the values frozen into the C++ tests.

Run with:  python3 tests/oracles/frozen_values.py
Uses sympy/mpmath only; shares no code with the C++ implementation.
"""
import sympy as sp
import mpmath as mp

mp.mp.dps = 60
z, w = sp.symbols("z w")


def gonchar_expr(d, q=sp.Integer(1)):
    return ((z - 1) ** d / q - z - 1) * z ** (d - 1) + (z - 1) ** d


def coeffs_ascending(expr, var=z):
    return [int(c) for c in reversed(sp.Poly(sp.expand(expr), var).all_coeffs())]


def g_direct(d, x):
    # closed form, evaluated directly (no expanded coefficients)
    return ((x - 1) ** d - x - 1) * x ** (d - 1) + (x - 1) ** d


def bisect(f, lo, hi, iters=400):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def main():
    print("G(2) =", coeffs_ascending((z + 1) * (z**2 - 3 * z + 1)))
    print("2*G(2,2) =", coeffs_ascending(2 * gonchar_expr(2, sp.Integer(2))))
    print("1*G(1,2) cleared =", coeffs_ascending(2 * gonchar_expr(1, sp.Integer(2))))
    print("G(2;1+w) =", coeffs_ascending(gonchar_expr(2).subs(z, 1 + w), w))
    print("G(1;1+w) =", coeffs_ascending(gonchar_expr(1).subs(z, 1 + w), w))

    r3 = bisect(lambda x: g_direct(3, x), mp.mpf(2), mp.mpf(3))
    print("R_1(3) =", mp.nstr(r3, 30))

    # residual law: |R_1(d) - 2 - ln3/d| * d^2 for 50 <= d <= 400
    worst = (0, 0)
    for d in range(50, 401):
        r = bisect(lambda x: g_direct(d, x), mp.mpf(2), mp.mpf(3), 200)
        s = abs(r - 2 - mp.log(3) / d) * d * d
        if s > worst[0]:
            worst = (s, d)
    print("max residual*d^2 over 50..400 =", mp.nstr(worst[0], 15), "at d =", worst[1])
    for d in (2, 50, 100, 200, 400):
        r = bisect(lambda x: g_direct(d, x), mp.mpf(2), mp.mpf(3), 200)
        print("  d=%d R_1=%s res*d^2=%s" % (d, mp.nstr(r, 25), mp.nstr((r - 2 - mp.log(3) / d) * d * d, 15)))

    # positive cap, R=2, q=1, d=2
    s = mp.cbrt(2)
    print("cos t0 (R=2,q=1,d=2) =", mp.nstr((5 - s * s) / 4, 25))

    # C_d constants
    print("C_2 =", mp.nstr(mp.pi ** 3, 20), " C_3 =", mp.nstr(4 * mp.pi ** 2, 20))

    # zeros of G(d) via mpmath polyroots: gamma distance and probes
    def gamma_dist(p):
        sq = mp.sqrt(3) / 2
        best = mp.inf
        # segment
        y = min(max(p.imag, -sq), sq)
        best = min(best, abs(p - mp.mpc(0.5, y)))
        for c, lo, hi in ((0, mp.pi / 3, 5 * mp.pi / 3), (1, -2 * mp.pi / 3, 2 * mp.pi / 3)):
            v = p - c
            ang = mp.atan2(v.imag, v.real)
            if c == 0 and ang < 0:
                ang += 2 * mp.pi
            if lo <= ang <= hi:
                best = min(best, abs(abs(v) - 1))
            best = min(best, abs(p - mp.mpc(0.5, sq)), abs(p - mp.mpc(0.5, -sq)))
        return best

    for d in (1, 2, 5, 7, 10, 20, 40):
        cs = list(reversed(coeffs_ascending(gonchar_expr(d))))
        roots = mp.polyroots(cs, maxsteps=400, extraprec=600)
        md = max(gamma_dist(r) for r in roots)
        print("max_gamma_distance(%d) = %s" % (d, mp.nstr(md, 20)))
        if d == 7:
            a1 = [r for r in roots if r.real < 0.5 and abs(r - 1) > 1]
            a1.sort(key=lambda r: float(mp.arg(r) % (2 * mp.pi)))
            print("  d=7 A1 moduli by argument:", [mp.nstr(abs(r), 8) for r in a1])


if __name__ == "__main__":
    main()
