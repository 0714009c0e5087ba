"""Published reference values used for self-tests and table diffs.

All counts are exact integers.  Growth values are kept as the strings
that are printed next to them, since some are exact algebraic numbers
quoted to a few digits and others are numerical estimates.
"""
from __future__ import annotations

# Number of rooted planar Eulerian orientations with n edges, n = 0..15.
O_N = [
    1,
    2,
    10,
    66,
    504,
    4216,
    37548,
    350090,
    3380520,
    33558024,
    340670720,
    3522993656,
    37003723200,
    393856445664,
    4240313009272,
    46109094112170,
]

# Rooted planar Eulerian maps, n = 0..7.
EULERIAN_MAPS = [1, 1, 3, 12, 56, 288, 1584, 9152]

# Eulerian maps with an arbitrary orientation of each edge (2^n m_n), n = 1..7.
ORIENTED_MAPS = [2, 12, 96, 896, 9216, 101376, 1171456]

# (family, k) -> counts for n = 1..7.  Family names follow ``systems.FAMILIES``.
TABLE1 = {
    ("subset", 1): [2, 10, 66, 466, 3458, 26650, 211458],
    ("subset", 2): [2, 10, 66, 504, 4008, 32834, 275608],
    ("prime_subset", 1): [2, 10, 66, 490, 3898, 32482, 279882],
    ("prime_subset", 2): [2, 10, 66, 504, 4148, 35794, 319384],
    ("prime_subset", 3): [2, 10, 66, 504, 4216, 37172, 339406],
    ("prime_subset", 4): [2, 10, 66, 504, 4216, 37548, 347850],
    ("prime_subset", 5): [2, 10, 66, 504, 4216, 37548, 350090],
    ("prime_superset", 5): [2, 10, 66, 504, 4216, 37548, 350090],
    ("prime_superset", 4): [2, 10, 66, 504, 4216, 37548, 350538],
    ("prime_superset", 3): [2, 10, 66, 504, 4216, 37620, 352242],
    ("prime_superset", 2): [2, 10, 66, 504, 4228, 37878, 356252],
    ("prime_superset", 1): [2, 10, 66, 506, 4266, 38418, 363194],
    ("superset", 2): [2, 10, 66, 504, 4232, 37970, 357744],
    ("superset", 1): [2, 10, 66, 506, 4266, 38418, 363194],
}

# Printed growth column; "~" marks a numerical estimate.
TABLE1_GROWTH = {
    ("subset", 1): "9.68",
    ("subset", 2): "10.16",
    ("prime_subset", 1): "10.60",
    ("prime_subset", 2): "10.97",
    ("prime_subset", 3): "11.22",
    ("prime_subset", 4): "~11.41",
    ("prime_subset", 5): "~11.56",
    ("prime_superset", 5): "~13.005",
    ("prime_superset", 4): "~13.017",
    ("prime_superset", 3): "~13.031",
    ("prime_superset", 2): "13.047",
    ("prime_superset", 1): "13.065",
    ("superset", 2): "13.057",
    ("superset", 1): "13.065",
}

# Printed algebraic degree of the generating function ("?" when unknown).
TABLE1_DEGREE = {
    ("subset", 1): "2",
    ("subset", 2): "4",
    ("prime_subset", 1): "3",
    ("prime_subset", 2): "6",
    ("prime_subset", 3): "20",
    ("prime_subset", 4): "258",
    ("prime_subset", 5): "?",
    ("prime_superset", 5): "?",
    ("prime_superset", 4): "?",
    ("prime_superset", 3): "?",
    ("prime_superset", 2): "28",
    ("prime_superset", 1): "3",
    ("superset", 2): "27",
    ("superset", 1): "3",
}

# Row order of the printed table: subsets grow toward o_n, supersets shrink.
TABLE1_ORDER = [
    ("subset", 1), ("subset", 2),
    ("prime_subset", 1), ("prime_subset", 2), ("prime_subset", 3),
    ("prime_subset", 4), ("prime_subset", 5),
    ("prime_superset", 5), ("prime_superset", 4), ("prime_superset", 3),
    ("prime_superset", 2), ("prime_superset", 1),
    ("superset", 2), ("superset", 1),
]

# Numerical growth values quoted alongside the counts.
GROWTH = {
    "lambda1": 9.684,        # subset k=1, root of Delta_1
    "lambda2": 10.16,        # subset k=2
    "lambda_bar1": 10.603,   # prime subset k=1
    "lambda_bar2": 10.9759,  # prime subset k=2
    "lambda_bar3": 11.2289,  # prime subset k=3
    "mu1": 13.0659,          # superset k=1
    "mu2": 13.057,           # superset k=2
    "mu_bar2": 13.047,       # prime superset k=2
    "mu_estimate": 12.568,   # series-analysis estimate for o_n
}
