"""Published values used as regression targets.

Rows are p = 1..5, columns n = 1..7.
"""

BELL_TABLE = {
    1: (1, 2, 5, 15, 52, 203, 877),
    2: (1, 3, 12, 60, 358, 2471, 19302),
    3: (1, 4, 22, 154, 1304, 12915, 146115),
    4: (1, 5, 35, 315, 3455, 44590, 660665),
    5: (1, 6, 51, 561, 7556, 120196, 2201856),
}

FUBINI_TABLE = {
    1: (1, 3, 13, 75, 541, 4683, 47293),
    2: (1, 4, 23, 175, 1662, 18937, 251729),
    3: (1, 5, 36, 342, 4048, 57437, 950512),
    4: (1, 6, 52, 594, 8444, 143783, 2854261),
    5: (1, 7, 71, 949, 15775, 313920, 7279795),
}

# C_0..C_7
EIGENSEQUENCE_PREFIX = (0, 1, 1, 2, 6, 26, 152, 1144)
