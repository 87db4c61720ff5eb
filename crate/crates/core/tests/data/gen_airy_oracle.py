# Regenerates airy_oracle.csv. Ai(x) = (1/pi) Re int_0^inf exp(i(t^3/3 + x t)) dt,
# evaluated on the ray t = s exp(i pi/6) where the integrand decays like exp(-s^3/3).
import mpmath as mp

mp.mp.dps = 40


def ai_quad(x):
    x = mp.mpf(x)
    rot = mp.exp(2j * mp.pi / 3)
    f = lambda s: mp.exp(-s**3 / 3 + x * s * rot)
    val = mp.quad(f, [0, 2, 4, 8, 16, mp.inf])
    return mp.re(mp.exp(1j * mp.pi / 6) * val) / mp.pi


xs = [mp.mpf(k) / 8 for k in range(-96 * 1, 6 * 8 + 1)]
xs = [mp.mpf(-40), mp.mpf(-30), mp.mpf(-20), mp.mpf(-16)] + xs + [mp.mpf(8), mp.mpf(10), mp.mpf(15), mp.mpf(20)]
worst = 0
print("x,ai")
for x in xs:
    v = ai_quad(x)
    ref = mp.airyai(x)
    worst = max(worst, abs(v - ref) / abs(ref))
    print(f"{mp.nstr(x, 10)},{mp.nstr(v, 25)}")
import sys
print(f"max rel deviation vs mpmath.airyai: {mp.nstr(worst, 3)}", file=sys.stderr)
