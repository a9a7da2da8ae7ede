#!/usr/bin/env python3
"""Independent high-precision transcription of the pointwise formulas.

Prints the frozen reference values used by the C++ unit tests. Nothing here
shares code with the library: every quantity is re-derived from the
force expressions with mpmath at 40 digits.

Propagating-sector reflection amplitudes use the textbook Fresnel form in
terms of real q_z and k_z1 = sqrt(eps*w^2 - q^2) (Im k_z1 >= 0) rather than
the analytic continuation of the evanescent formula.
"""
import mpmath as mp

mp.mp.dps = 40
PI = mp.pi


def gamma_of(beta):
    return 1 / mp.sqrt(1 - mp.mpf(beta) ** 2)


def drude(wp, gd, w):
    w = mp.mpf(w)
    return 1 - mp.mpf(wp) ** 2 / (w * (w + 1j * mp.mpf(gd)))


def lorentz(a0, w0, ga, w):
    w = mp.mpf(w)
    return a0 * w0 ** 2 / (w0 ** 2 - w ** 2 - 1j * ga * w)


def occ(w, t):
    w = mp.mpf(w)
    if t == 0:
        return mp.mpf(0) if w > 0 else mp.mpf(-1)
    return 1 / (mp.exp(w / t) - 1)


class Scenario:
    def __init__(self, beta, z, t1, t2, wp, gd, a0, w0, ga):
        self.beta = mp.mpf(beta)
        self.g = gamma_of(beta)
        self.z = mp.mpf(z)
        self.t1, self.t2 = mp.mpf(t1), mp.mpf(t2)
        self.wp, self.gd = mp.mpf(wp), mp.mpf(gd)
        self.a0, self.w0, self.ga = mp.mpf(a0), mp.mpf(w0), mp.mpf(ga)

    def eps(self, w):
        return drude(self.wp, self.gd, w)

    def alpha(self, w):
        return lorentz(self.a0, self.w0, self.ga, w)


def ev_reflection(s, w, q):
    kap = mp.sqrt(q ** 2 - w ** 2)
    e = s.eps(w)
    k1 = mp.sqrt(kap ** 2 - (e - 1) * w ** 2)
    rs = (kap - k1) / (kap + k1)
    rp = (e * kap - k1) / (e * kap + k1)
    return kap, rs, rp


def prop_reflection(s, w, q):
    qz = mp.sqrt(w ** 2 - q ** 2)
    e = s.eps(w)
    kz1 = mp.sqrt(e * w ** 2 - q ** 2)
    if mp.im(kz1) < 0:
        kz1 = -kz1
    rs = (qz - kz1) / (qz + kz1)
    rp = (e * qz - kz1) / (e * qz + kz1)
    return qz, rs, rp


def phis(s, wpr, qx, qy, k2):
    q2 = qx ** 2 + qy ** 2
    g, b = s.g, s.beta
    ps = wpr ** 2 + 2 * g ** 2 * b ** 2 * qy ** 2 * k2 / q2
    pp = wpr ** 2 + 2 * g ** 2 * (q2 - b ** 2 * qx ** 2) * k2 / q2
    return ps, pp


def ph_ev(s, w, qx, qy):
    w, qx, qy = mp.mpf(w), mp.mpf(qx), mp.mpf(qy)
    q = mp.sqrt(qx ** 2 + qy ** 2)
    kap, rs, rp = ev_reflection(s, w, q)
    wpr = s.g * (w - qx * s.beta)
    ps, pp = phis(s, wpr, qx, qy, kap ** 2)
    core = (qx / kap) * mp.exp(-2 * kap * s.z) * mp.im(s.alpha(wpr)) \
        * (occ(w, s.t1) - occ(wpr, s.t2)) * (ps * mp.im(rs) + pp * mp.im(rp))
    return core


def dk_quadrant_ev(s, w, qx, qy):
    w, qx, qy = mp.mpf(w), mp.mpf(qx), mp.mpf(qy)
    q = mp.sqrt(qx ** 2 + qy ** 2)
    kap, rs, rp = ev_reflection(s, w, q)

    def branch(wpr):
        ps, pp = phis(s, wpr, qx, qy, kap ** 2)
        return mp.im(s.alpha(wpr)) * (occ(w, s.t1) - occ(wpr, s.t2)) \
            * (ps * mp.im(rs) + pp * mp.im(rp))
    wm = s.g * (w - qx * s.beta)
    wp = s.g * (w + qx * s.beta)
    return 16 * PI / s.g * (qx / kap) * mp.exp(-2 * kap * s.z) * (branch(wm) - branch(wp))


def prop_terms(s, w, qx, qy, wpr):
    q = mp.sqrt(qx ** 2 + qy ** 2)
    qz, rs, rp = prop_reflection(s, w, q)
    ps, pp = phis(s, wpr, qx, qy, -qz ** 2)
    c, sn = mp.cos(2 * qz * s.z), mp.sin(2 * qz * s.z)
    pref = mp.im(s.alpha(wpr)) * (occ(w, s.t1) - occ(wpr, s.t2))
    re_part = pref * (ps * mp.re(rs) + pp * mp.re(rp))
    im_part = pref * (ps * mp.im(rs) + pp * mp.im(rp))
    return qz, c, sn, re_part, im_part


def ph_prop(s, w, qx, qy):
    w, qx, qy = mp.mpf(w), mp.mpf(qx), mp.mpf(qy)
    wpr = s.g * (w - qx * s.beta)
    qz, c, sn, re_part, im_part = prop_terms(s, w, qx, qy, wpr)
    return 2 / s.g * (qx / qz) * (re_part * c - im_part * sn)


def dk_quadrant_prop(s, w, qx, qy):
    w, qx, qy = mp.mpf(w), mp.mpf(qx), mp.mpf(qy)
    wm = s.g * (w - qx * s.beta)
    wp = s.g * (w + qx * s.beta)
    qz, c, sn, rem, imm = prop_terms(s, w, qx, qy, wm)
    _, _, _, rep, imp = prop_terms(s, w, qx, qy, wp)
    pref = 16 * PI / s.g * qx / qz
    return pref * (-sn * (imm - imp)) + pref * (c * (rem - rep))


def vp_stress(s, w, qx, qy):
    w, qx, qy = mp.mpf(w), mp.mpf(qx), mp.mpf(qy)
    q = mp.sqrt(qx ** 2 + qy ** 2)
    _, rs, rp = prop_reflection(s, w, q)
    wpr = s.g * (w - qx * s.beta)
    return -qx * (2 - abs(rp) ** 2 - abs(rs) ** 2) * (occ(w, s.t1) - occ(wpr, s.t2))


def fs_dk(s, w, x):
    w, x = mp.mpf(w), mp.mpf(x)
    w1 = s.g * w * (1 + s.beta * x)
    return -4 * s.g * w ** 4 * x * (1 + s.beta * x) ** 2 * mp.im(s.alpha(w1)) \
        * (occ(w, s.t1) - occ(w1, s.t2))


def fs_ph(s, w, x):
    w, x = mp.mpf(w), mp.mpf(x)
    wpr = s.g * w * (1 - s.beta * x)
    return s.g / PI * w ** 4 * x * (1 - s.beta * x) ** 2 * mp.im(s.alpha(wpr)) \
        * (occ(w, s.t1) - occ(wpr, s.t2))


def show(name, v):
    if isinstance(v, mp.mpc):
        print(f"{name:40s} = {mp.nstr(mp.re(v), 17)} {mp.nstr(mp.im(v), 17)}i")
    else:
        print(f"{name:40s} = {mp.nstr(v, 17)}")


def main():
    show("gamma(0.99)", gamma_of(mp.mpf("0.99")))

    e = drude(1, mp.mpf("0.1"), 1)
    show("kappa1(w=+1,k=1,Drude(1,0.1))", mp.sqrt(1 - (e - 1)))

    e = drude(3, mp.mpf("0.3"), 1)
    k1 = mp.sqrt(4 - (e - 1))
    show("rs(k=2,w=1,Drude(3,0.3))", (2 - k1) / (2 + k1))
    show("rp(k=2,w=1,Drude(3,0.3))", (e * 2 - k1) / (e * 2 + k1))

    s = Scenario("0.5", 1, 0, 0, 1, "0.1", 1, 1, "0.1")
    w, qx, qy = mp.mpf("0.3"), mp.mpf("0.3"), mp.mpf("0.4")
    kap2 = qx ** 2 + qy ** 2 - w ** 2
    wpr = s.g * (w - qx * s.beta)
    ps, pp = phis(s, wpr, qx, qy, kap2)
    show("phi_s(beta=.5,w=.3,qx=.3,qy=.4)", ps)
    show("phi_p(beta=.5,w=.3,qx=.3,qy=.4)", pp)

    show("alpha(1,1,0.1; w=0.5)", lorentz(1, 1, mp.mpf("0.1"), mp.mpf("0.5")))

    grid = [mp.mpf(3) * i / 3000 for i in range(3001)]
    mx = max(abs(4 * PI * mp.mpf("1e-4") * lorentz(1, 1, mp.mpf("0.1"), g)) for g in grid)
    show("dilute max (n2=1e-4, 3001 pts on [0,3])", mx)

    s = Scenario("0.5", 1, "0.5", "0.2", 1, "0.1", 1, 1, "0.1")
    core = ph_ev(s, "0.4", "0.7", "0.2")
    show("ev PH(0.4,0.7,0.2)", core / s.g)
    show("ev VP(0.4,0.7,0.2)", -8 * PI * core)
    show("ev DK_folded(0.4,0.7,0.2)", 8 * PI / s.g * core)
    show("ev DK_quadrant(0.4,0.7,0.2)", dk_quadrant_ev(s, "0.4", "0.7", "0.2"))
    show("ev PH(-0.4,-0.7,0.2)", ph_ev(s, "-0.4", "-0.7", "0.2") / s.g)

    show("prop PH(1.2,0.5,0.3)", ph_prop(s, "1.2", "0.5", "0.3"))
    show("prop DK_folded(1.2,0.5,0.3)", 4 * PI * ph_prop(s, "1.2", "0.5", "0.3"))
    show("prop DK_quadrant(1.2,0.5,0.3)", dk_quadrant_prop(s, "1.2", "0.5", "0.3"))
    show("vp stress(1.2,0.5,0.3)", vp_stress(s, "1.2", "0.5", "0.3"))

    f = Scenario("0.5", 1, 1, 0, 1, "0.1", 1, 1, "0.1")
    show("fs DK(w=0.8,x=0.5)", fs_dk(f, "0.8", "0.5"))
    show("fs PH(w=0.8,x=0.5)", fs_ph(f, "0.8", "0.5"))


if __name__ == "__main__":
    main()
