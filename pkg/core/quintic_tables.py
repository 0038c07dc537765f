"""Tabulated data of the del Pezzo quintic threefold.

A_TABLE[(i, j, k)] lists [v_i, eps_jk] in the eps basis and B_TABLE[(i, j, k, l)]
lists 1/2 [eps_ij, eps_kl] in the z basis, both as {label: coefficient}.  The
chart data below are the restrictions to the chart Z8 = 1 with free
coordinates x1, x3, x4.
"""

from typing import Dict, Tuple

from core.exact_algebra import RING, Polynomial, var

A_TABLE: Dict[Tuple[int, int, int], Dict[str, int]] = {
    (1, 0, 1): {},
    (1, 0, 2): {"02": -3},
    (1, 0, 3): {"03": 1},
    (1, 0, 4): {"04": -1},
    (1, 0, 5): {"05": -4},
    (1, 0, 8): {"08": 2},
    (1, 1, 2): {"12": -1},
    (1, 1, 3): {"13": 3},
    (1, 1, 4): {"14": 1},
    (1, 1, 5): {"15": -2},
    (1, 1, 8): {"18": 4},
    (1, 2, 3): {},
    (1, 2, 4): {"24": -2},
    (1, 2, 5): {"25": -5},
    (1, 2, 8): {"28": 1},
    (1, 3, 4): {"34": 2},
    (1, 3, 5): {"35": -1},
    (1, 3, 8): {"38": 5},
    (1, 4, 5): {"45": -3},
    (1, 4, 8): {"48": 3},
    (1, 5, 8): {},
    (2, 0, 1): {"04": 3, "12": -1},
    (2, 0, 2): {"05": 3},
    (2, 0, 3): {"01": -5, "23": 1},
    (2, 0, 4): {"24": 1},
    (2, 0, 5): {"25": 1},
    (2, 0, 8): {"03": -1, "28": 1},
    (2, 1, 2): {"15": 3, "24": -3},
    (2, 1, 3): {"34": -3},
    (2, 1, 4): {"01": -2},
    (2, 1, 5): {"45": 3},
    (2, 1, 8): {"13": -1, "48": 3},
    (2, 2, 3): {"12": 5, "35": -3},
    (2, 2, 4): {"02": -2, "45": -3},
    (2, 2, 5): {},
    (2, 2, 8): {"23": -1, "58": 3},
    (2, 3, 4): {"03": -2, "14": -5},  # corrected: -2 on eps03, from L_v2 eps34
    (2, 3, 5): {"15": -5},
    (2, 3, 8): {"18": -5},
    (2, 4, 5): {"05": 2},
    (2, 4, 8): {"08": 2, "34": 1},  # corrected: 2 on eps08, from L_v2 eps48
    (2, 5, 8): {"35": 1},
    (3, 0, 1): {"03": 1, "14": 3},
    (3, 0, 2): {"24": 3},
    (3, 0, 3): {"08": 3, "34": 3},
    (3, 0, 4): {"01": -2},
    (3, 0, 5): {"02": -1, "45": -3},
    (3, 0, 8): {"48": -3},
    (3, 1, 2): {"01": 5, "23": -1},
    (3, 1, 3): {"18": 3},
    (3, 1, 4): {"34": 1},
    (3, 1, 5): {"12": -1, "35": 1},
    (3, 1, 8): {"38": 1},
    (3, 2, 3): {"03": -5, "28": 3},
    (3, 2, 4): {"04": -5, "12": 2},
    (3, 2, 5): {"05": -5},
    (3, 2, 8): {"08": -5},
    (3, 3, 4): {"13": 2, "48": -3},
    (3, 3, 5): {"23": 1, "58": -3},
    (3, 3, 8): {},
    (3, 4, 5): {"15": -2, "24": 1},
    (3, 4, 8): {"18": -2},
    (3, 5, 8): {"28": -1},
}

B_TABLE: Dict[Tuple[int, int, int, int], Dict[str, int]] = {
    (0, 1, 2, 3): {"01": -1, "23": 1},
    (0, 1, 2, 4): {"15": -1},
    (0, 1, 2, 5): {"25": -1},
    (0, 1, 2, 8): {"03": -2, "28": -1},
    (0, 1, 3, 4): {"08": -1},
    (0, 1, 3, 5): {"12": 2, "35": 1},
    (0, 1, 3, 8): {"38": 1},
    (0, 1, 4, 5): {"45": 1},
    (0, 1, 4, 8): {"48": -1},
    (0, 1, 5, 8): {"01": 2, "58": -2},
    (0, 2, 3, 4): {"12": -1, "35": 1},
    (0, 2, 3, 5): {"05": 1, "22": -1},
    (0, 2, 3, 8): {"08": 1, "11": 3},
    (0, 2, 4, 5): {"55": 1},
    (0, 2, 4, 8): {"01": -1, "58": -1},
    (0, 2, 5, 8): {"02": -1, "45": 2},
    (0, 3, 4, 5): {"00": -1, "15": -2},
    (0, 3, 4, 8): {"18": 2},
    (0, 3, 5, 8): {"03": 3, "28": 4},
    (0, 4, 5, 8): {"12": 1, "35": 1},
    (1, 2, 3, 4): {"03": -1, "28": 1},
    (1, 2, 3, 5): {"00": -3, "15": -1},
    (1, 2, 3, 8): {"18": -1, "33": 1},
    (1, 2, 4, 5): {"05": -2},
    (1, 2, 4, 8): {"08": 2, "11": 1},
    (1, 2, 5, 8): {"12": -3, "35": -4},
    (1, 3, 4, 5): {"01": 1, "58": 1},
    (1, 3, 4, 8): {"88": -1},
    (1, 3, 5, 8): {"13": 1, "48": 2},
    (1, 4, 5, 8): {"03": 1, "28": 1},
    (2, 3, 4, 5): {"02": -2, "45": -1},
    (2, 3, 4, 8): {"13": -2, "48": 1},
    (2, 3, 5, 8): {"01": -5, "23": -1, "58": 2},
    (2, 4, 5, 8): {"00": 2, "15": -1},
    (3, 4, 5, 8): {"08": -1, "11": 2},
}

# Anticanonical basis z_ij = Z_i Z_j: i <= j, i, j not in {6, 7, 9}, ij not in {04, 14, 24, 34, 44}
Z_PAIRS: Tuple[Tuple[int, int], ...] = (
    (0, 0), (0, 1), (0, 2), (0, 3), (0, 5), (0, 8),
    (1, 1), (1, 2), (1, 3), (1, 5), (1, 8),
    (2, 2), (2, 3), (2, 5), (2, 8),
    (3, 3), (3, 5), (3, 8),
    (4, 5), (4, 8),
    (5, 5), (5, 8),
    (8, 8),
)

x1, x3, x4 = var("x1"), var("x3"), var("x4")

# Dependent coordinates on the chart Z8 = 1
CHART_RELATIONS: Dict[str, Polynomial] = {
    "x0": -x1**2 - x3 * x4,
    "x2": -x1 * x4 + x3 * x1**2 + x3**2 * x4,
    "x5": -x1**3 - x4**2 - x1 * x3 * x4,
    "x9": -x4,
    "x7": x1**2 + x3 * x4,
    "x6": -x1,
}

DISPLAYED_VECTOR_FIELDS: Dict[int, Dict[str, Polynomial]] = {
    1: {"x1": -2 * x1, "x3": -x3, "x4": -3 * x4},
    2: {"x1": x1 * x3 + 3 * x4, "x3": x3**2 - 5 * x1, "x4": -(2 * x1**2 + x3 * x4)},
    3: {"x1": x3, "x3": RING(3), "x4": -2 * x1},
}

DISPLAYED_EPSILON: Dict[Tuple[int, int], Dict[str, Polynomial]] = {
    (0, 1): {"x1": x3 * x4 - x1**2, "x3": -x1 * x4, "x4": -x1 * x3},
    (0, 2): {
        "x1": x1**2 * x4 - x3 * x4**2,
        "x3": x1**4 + x3**2 * x4**2 + 2 * x1**2 * x3 * x4 + x1 * x4**2,
        "x4": -x1**3,
    },
    (0, 3): {"x1": -2 * x1 * x3, "x3": x1**2, "x4": -x3**2},
    (0, 4): {"x1": -2 * x1 * x4, "x3": -x4**2, "x4": x1**2},
    (0, 5): {
        "x1": 2 * x1 * x4**2 - 2 * x1**2 * x3 * x4 - x1**4 - x3**2 * x4**2,
        "x3": x4**3,
        "x4": -(x3 * x4**2 + 2 * x1**2 * x4),
    },
    (0, 8): {"x1": -2 * x1, "x3": -x4, "x4": -x3},
    (1, 2): {"x1": x3**2 * x4 - x1**2 * x3, "x3": -(x1**3 + 2 * x1 * x3 * x4), "x4": x1**2 - x1 * x3**2},
    (1, 3): {"x1": x3, "x3": -x1},
    (1, 4): {"x1": x4, "x4": -x1},
    (1, 5): {"x1": 2 * x1**3 - x4**2, "x3": x1**2 * x4, "x4": x1**2 * x3 + 2 * x1 * x4},
    (1, 8): {"x1": RING.one},
    (2, 3): {"x1": 2 * x1 * x3**2 - x3 * x4, "x3": x3**2 * x4 + x1 * x4, "x4": x3**3 - x1 * x3},
    (2, 4): {"x1": 2 * x1 * x3 * x4 - x4**2, "x3": x1**2 * x4 + 2 * x3 * x4**2, "x4": -x1**2 * x3},
    (2, 5): {
        "x1": x1**4 * x3 - 2 * x1 * x3 * x4**2 + x4**3 - 2 * x1**3 * x4 + 2 * x1**2 * x3**2 * x4 + x3**3 * x4**2,
        "x3": -(x1**5 + 2 * x1**2 * x4**2 + 2 * x1**3 * x3 * x4 + 2 * x3 * x4**3 + x1 * x3**2 * x4**2),
        "x4": x1**4 + 2 * x1**2 * x3 * x4 - x1 * x4**2 + x3**2 * x4**2,
    },
    (2, 8): {"x1": 2 * x1 * x3 - x4, "x3": x1**2 + 2 * x3 * x4, "x4": x3**2 - x1},
    (3, 4): {"x3": x4, "x4": -x3},
    (3, 5): {"x1": 3 * x1**2 * x3 + x3**2 * x4, "x3": -(x1**3 + x4**2), "x4": 2 * x3 * x4 + x1 * x3**2},
    (3, 8): {"x3": RING.one},
    (4, 5): {"x1": 3 * x1**2 * x4 + x3 * x4**2, "x3": x1 * x4**2, "x4": x4**2 - x1**3},
    (4, 8): {"x4": RING.one},
    (5, 8): {"x1": -(3 * x1**2 + x3 * x4), "x3": -x1 * x4, "x4": -(2 * x4 + x1 * x3)},
}
