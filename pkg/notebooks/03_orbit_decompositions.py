"""Decomposing permutation modules on ordered set partitions.

Run with ``python3 notebooks/03_orbit_decompositions.py``.
"""

from higher_specht.combinat import Subset, comp_n
from higher_specht.oracle import are_independent, kostka, multinomial, perm_module_character
from higher_specht.repdecomp import build_RnI, build_Rnk, enlarge_I, ext, ind_t, stability_check

n, I = 4, Subset({1, 3}, 4)
dec = build_RnI(n, I)
print("R_(4,{1,3})      =", dec)
print("dimension        =", dec.dimension, "=", multinomial(comp_n(I)), "ordered set partitions")
print("homogeneous      =", build_RnI(n, I, hom=True))

# Realize every summand as polynomials and confirm independence.
basis = dec.basis()
print("realized basis independent:", are_independent(basis), f"({len(basis)} polynomials)")

# Multiplicities agree with Kostka numbers, as the character predicts.
shapes = {}
for s in dec.summands:
    shapes[s.shape] = shapes.get(s.shape, 0) + 1
print("shape multiplicities:", shapes)
print("Kostka numbers      :", {lam: kostka(lam, comp_n(I)) for lam in shapes})
print("permutation character:", list(perm_module_character(n, I).values))

# Operators between levels.
small = build_RnI(3, Subset({1}, 3))
print("Ind_1 R_(3,{1})   =", ind_t(small, 1))
print("Ext   R_(3,{1})   =", ext(small))
print("enlarge by 3      =", enlarge_I(build_RnI(4, Subset({1}, 4)), 3))
print("R_(3,2) summands  =", len(build_Rnk(3, 2).summands))

# Ext is stable for large n and fails for the small counterexample.
print("{1}, n=3 stable:", stability_check(Subset({1}, 3), 3).stable)
print("{2}, n=3 stable:", stability_check(Subset({2}, 3), 3, run_recipe=False).stable)
