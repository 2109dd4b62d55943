"""Higher Specht polynomials, their quotients and stable truncations.

Run with ``python3 notebooks/02_higher_specht_polynomials.py``.
"""

from higher_specht.combinat import Subset, q_tilde, rsk
from higher_specht.specht import classical_specht, f_hom, f_w, f_w_I, specht_quotient, stable_truncation

# Two variables already give a nontrivial polynomial.
print("F_2134 =", f_w((2, 1, 3, 4)).poly.render())

w = (2, 4, 1, 5, 3)
F = f_w(w)
print(f"F_{''.join(map(str, w))}: {len(F.poly.terms)} terms, degree {F.poly.degree()}")
print("  T =", F.T, "  cocharge index =", F.index)

# Dividing by the classical Specht polynomial of T leaves an invariant quotient.
T = rsk(w)[0]
q = specht_quotient(T, q_tilde(w))
print("classical  =", classical_specht(T).render())
print("quotient   =", q.render())

# Multiplying by elementary symmetric polynomials, position-counted or homogeneous.
I = Subset({1, 3}, 4)
for maker in (f_w_I, f_hom):
    poly, h = maker((1, 2, 3, 4), I)
    print(f"{maker.__name__}(1234, {{1,3}}): h={h}, degree {poly.degree()}")

# Truncating the stable limit to more variables restricts back correctly.
# The stabilization index only appears once the tower has saturated.
for N in (5, 6, 7, 8):
    poly, cert = stable_truncation(w, N, samples=10)
    print(f"N={N}: {len(poly.terms)} terms, restricts={cert.substitution_compatible}, "
          f"invariant={cert.invariant}, stabilizes from {cert.stabilization_index}")
