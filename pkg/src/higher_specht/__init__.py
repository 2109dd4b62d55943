"""Higher Specht polynomials and decompositions of ordered-set-partition modules."""

from .combinat import OrderedSetPartition, Subset, Tableau, evacuation, rsk, standard_tableaux
from .polyring import Polynomial
from .repdecomp import Decomposition, DecompIndex, build_RnI, build_Rnk, ext, ind_t
from .specht import f_w, f_w_I, f_hom, higher_specht, stable_truncation

__all__ = [
    "Decomposition",
    "DecompIndex",
    "OrderedSetPartition",
    "Polynomial",
    "Subset",
    "Tableau",
    "build_RnI",
    "build_Rnk",
    "evacuation",
    "ext",
    "f_hom",
    "f_w",
    "f_w_I",
    "higher_specht",
    "ind_t",
    "rsk",
    "stable_truncation",
    "standard_tableaux",
]
