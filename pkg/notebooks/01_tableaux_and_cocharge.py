"""Tableaux, evacuation and cocharge on one running example.

Run with ``python3 notebooks/01_tableaux_and_cocharge.py``.
"""

from higher_specht.combinat import (
    Subset,
    add_box_ev,
    asl_dsl,
    ct,
    ct_J,
    delta,
    dsi,
    evacuation,
    external_corners,
    is_cct,
    q_tilde,
    rsk,
)

w = (3, 5, 2, 7, 1, 4, 8, 6)
P, Q = rsk(w)
print("w          =", w)
print("P(w)       =", P)
print("Q(w)       =", Q)

# Descents of the word show up as descents of the recording tableau.
print("Dsl(w)     =", sorted(asl_dsl(w)[1]), " Dsi(Q) =", sorted(dsi(Q)))

# The modified recording tableau is the evacuation of Q.
Qt = q_tilde(w)
print("ev Q       =", evacuation(Q), " equals Q~(w):", Qt == evacuation(Q))

# Cocharge fillings: plain ct is always a cocharge tableau, ct_J usually is not.
print("ct(Q)      =", ct(Q), " is_cct:", is_cct(ct(Q)))
J = Subset({1, 2, 4, 5, 7}, 8)
print("ct_J(Q)    =", ct_J(Q, J), " is_cct:", is_cct(ct_J(Q, J)))

# Adding a box at each external corner, conjugated by evacuation.
S = Qt
for v in external_corners(S.shape):
    print(f"corner {v}: delta={delta(S, v)}  S+v = {add_box_ev(S, v)}")
