"""Independent high-precision reference values frozen into tests/oracle_values.hpp.

Run: python3 tools/oracle_values.py > tests/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def radial_period(R):
    # u = 1 + (R^2 - 1) ln|z| / ln R, period of the conjugate around |z| = R
    return 2 * mp.pi * (R**2 - 1) / mp.log(R)


def coefficient(R, n):
    return (R ** (n + 1) - R ** (n - 1)) / (R ** (n - 1) - R ** (1 - n))


def annulus_u(R, n, z):
    c = coefficient(R, n)
    return mp.re(c * (z ** (n - 1) - z ** (1 - n)) + z ** (n - 1))


def szego_annulus(R, z, a):
    # orthonormal monomials z^n / sqrt(2 pi (1 + R^(2n+1))) in the arclength Hardy space
    s = mp.mpc(0)
    for n in range(-600, 601):
        s += (z * mp.conj(a)) ** n / (2 * mp.pi * (1 + R ** (2 * n + 1)))
    return s


def emit(name, v):
    print(f"inline constexpr double {name} = {mp.nstr(v, 20)};")


def emit_c(name, v):
    print(f"inline const Complex {name}{{{mp.nstr(mp.re(v), 20)}, {mp.nstr(mp.im(v), 20)}}};")


R = mp.mpf("0.5")
print("#pragma once")
print("// Generated by tools/oracle_values.py (mpmath, 40 digits). Do not edit.")
print('#include "conjp/geometry.hpp"')
print("namespace oracle {")
print("using conjp::Complex;")
emit("kRadialPeriodHalf", radial_period(R))
emit("kRadialPeriodPoint3", radial_period(mp.mpf("0.3")))
emit("kCoefficientN2", coefficient(R, 2))
emit("kCoefficientN0", coefficient(R, 0))
emit("kCoefficientNm3", coefficient(R, -3))
z0 = mp.mpc("0.6", "0.3")
emit("kAnnulusU2", annulus_u(R, 2, z0))
emit("kAnnulusU0", annulus_u(R, 0, z0))
emit("kAnnulusUm2", annulus_u(R, -2, z0))
emit("kInnerMeasure07", mp.log(mp.mpf("0.7")) / mp.log(R))
a = mp.mpc("0.8", "0")
emit_c("kSzegoAA", szego_annulus(R, a, a))
a2 = mp.mpc("0.3", "0.6")
z2 = mp.mpc("-0.7", "0.2")
emit_c("kSzegoZA", szego_annulus(R, z2, a2))
emit_c("kSzegoBoundary", szego_annulus(R, mp.mpc(0, 1), a2))
emit("kSzegoN0Term", 1 / (2 * mp.pi * (1 + R)))
print("}  // namespace oracle")
