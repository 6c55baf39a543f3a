"""
Published values the verification checks compare against.

Nothing in src/ hard-codes these numbers; checks import them from here.
"""

# Fano chamber (n = 7)
FANO_ACTUAL_VERTEX_TYPES = {"7A_1": 2, "A_1⊔3A_2": 56}
FANO_IDEAL_VERTEX_TYPES = {"3A_3": 14}

# Value sets of the four Gosset wall families on the dual vertex families
GOSSET_VALUE_TABLE = {
    "v_{l,p}": {
        "e_p": [-2, -1, 0],
        "e_0-e_p-e_q": [-3, -2, -1, 0],
        "2e_0-Σe+e_p+e_q": [-4, -3, -2, -1],
        "3e_0-Σe-e_p": [-4, -3, -2],
    },
    "u_l": {
        "e_p": [-1, 0],
        "e_0-e_p-e_q": [-2, -1, 0],
        "2e_0-Σe+e_p+e_q": [-2, -1, 0],
        "3e_0-Σe-e_p": [-2, -1],
    },
}
GOSSET_WALL_COUNT = 56
GOSSET_WEYL_VALUE = -1

# PG(2,3) chamber (n = 13)
PG3_ACTUAL_VERTEX_TYPES = {
    "13A_1": 2,
    "4A_1⊔3A_3": 468,
    "A_1⊔4A_3": 234,
    "2A_1⊔A_2⊔3A_3": 936,
    "A_1⊔3A_4": 1872,
    "A_2⊔A_3⊔2A_4": 5616,
    "3A_3⊔A_4": 1872,
}
PG3_IDEAL_VERTEX_TYPES = {"4D_4": 26, "3A_5": 468}
PG3_IDEAL_TOTAL = 494

# (family, elliptic or parabolic type, reduction chain) in the published row order
REDUCTION_TABLE = [
    ("v_P", "13A_1", ["1"]),
    ("v_L", "13A_1", ["41^13"]),
    ("v_pqr", "4A_1⊔3A_3", ["21^3", "1"]),
    ("v_lmn", "4A_1⊔3A_3", ["52^41^6", "421^9"]),
    ("v_{p,l}", "A_1⊔4A_3", ["31^8"]),
    ("v_{l,p}", "A_1⊔4A_3", ["431^4", "321^2", "21"]),
    ("v_{p,q,l}", "2A_1⊔A_2⊔3A_3", ["321^3", "21^2"]),
    ("v_{l,m,p}", "2A_1⊔A_2⊔3A_3", ["73^22^61", "62^71^2"]),
    ("v_{p,qrs}", "A_1⊔3A_4", ["42^31^3", "21^3", "1"]),
    ("v_{k,lmn}", "A_1⊔3A_4", ["743^31^3", "431^4", "321^2", "21"]),
    ("v_{p,qr,s}", "A_2⊔A_3⊔2A_4", ["532^31^2", "321^3", "21^2"]),
    ("v_{k,lm,n}", "A_2⊔A_3⊔2A_4", ["954^232^21", "532^21^2", "31^3"]),
    ("v_{p,q,rs}", "3A_3⊔A_4", ["321^4", "21^3", "1"]),
    ("v_{k,l,mn}", "3A_3⊔A_4", ["63^22^31^3", "42^21^5", "31^6"]),
    ("u_p", "4D_4", ["11"]),
    ("u_l", "4D_4", ["31^9"]),
    ("u_pqrs", "3A_5", ["21^4", "11"]),
    ("u_klmn", "3A_5", ["42^31^4", "21^4", "11"]),
]
TERMINAL_SIGNATURES = sorted({chain[-1] for _, _, chain in REDUCTION_TABLE})
ALLOWED_REDUCTION_INDICES = list(range(13))

# Automorphism groups
AUT_I14_ORDER = 336
AUT_I14_COLOUR_ORDER = 168
AUT_I26_ORDER = 11232
AUT_I26_COLOUR_ORDER = 5616
AUT_T10_ORDER = 24
AUT_T13_ORDER = 24

# W(E7)
E7_ROOT_COUNT = 126
E7_ROOT_SHAPES = {"e_p-e_q": 42, "±(e_0-e_p-e_q-e_r)": 70, "±(2e_0-Σ_6)": 14}
W_E7_ORDER = 2903040
W_A6_ORDER = 5040
GOSSET_VERTEX_RATIO = 576

# T_10 drawn as a subdivided tetrahedron on 1, 3, 5, 8 with midpoints 0, 2, 4, 6, 7, 9
T10_EDGES = [
    (0, 1), (0, 8), (1, 2), (2, 3), (1, 9), (5, 9),
    (3, 7), (7, 8), (6, 8), (5, 6), (3, 4), (4, 5),
]
T10_POSITIVE_PAIRS = [(5, 9), (7, 8)]
OCTAGON_OMITTED_PAIRS = [(0, 4), (2, 6), (7, 9)]
# octagon words a_1..a_8; each relation reads (a_1..a_8 a_7..a_2)^2 = 1
DEFLATION_RELATIONS = [
    [1, 2, 3, 7, 8, 6, 5, 9],
    [1, 9, 5, 4, 3, 7, 8, 0],
    [1, 2, 3, 4, 5, 6, 8, 0],
]
# nodes whose reflections are rewritten as words in s_1..s_7
WORD_ELIMINATION_NODES = [9, 8, 0]

# Allcock lattice
ALLCOCK_RANK = 14
ALLCOCK_KERNEL_RANK = 12
ALLCOCK_DISCRIMINANT_ABS = 3**7
ALLCOCK_SIGNATURE = (13, 1)
ALLCOCK_REALIFIED_INERTIA = (26, 0, 2)
REAL_FORM_DETERMINANT = -1
