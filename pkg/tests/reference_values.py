"""Published reference values used by the acceptance tests, transcribed by hand."""

P_TILDE_1_20 = [0, 0, 1, 1, 1, 2, 2, 3, 4, 5, 6, 9, 10, 13, 17, 21, 25, 33, 39, 49]

Q_1_20 = [1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 5, 5, 5, 6, 7]
Q_TILDE_1_20 = [0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 2, 1, 2, 2, 3, 2, 3, 3, 4]

# n -> (epsilon, delta, witnesses); rows not listed have delta = 0 except n = 1
EPS_DELTA_ROWS = {
    9: (1, 1, ["9^1"]),
    10: (1, 1, ["1^1 9^1"]),
    23: (0, 1, ["3^1 5^1 15^1"]),
    24: (0, 1, ["1^1 3^1 5^1 15^1"]),
    25: (1, 1, ["25^1"]),
    26: (1, 1, ["1^1 25^1"]),
    30: (0, 1, ["3^1 27^1"]),
    31: (0, 2, ["1^1 3^1 27^1", "3^1 7^1 21^1"]),
    32: (0, 2, ["1^1 3^1 7^1 21^1", "3^1 5^1 9^1 15^1"]),
    33: (0, 1, ["1^1 3^1 5^1 9^1 15^1"]),
    34: (1, 1, ["9^1 25^1"]),
    35: (1, 1, ["1^1 9^1 25^1"]),
    39: (0, 1, ["3^1 9^1 27^1"]),
    40: (0, 2, ["1^1 3^1 9^1 27^1", "3^1 7^1 9^1 21^1"]),
    41: (0, 1, ["1^1 3^1 7^1 9^1 21^1"]),
    47: (0, 3, ["3^1 11^1 33^1", "5^1 7^1 35^1", "5^1 15^1 27^1"]),
    48: (0, 5, ["1^1 3^1 11^1 33^1", "1^1 5^1 7^1 35^1", "1^1 5^1 15^1 27^1",
                "5^1 7^1 15^1 21^1", "3^1 5^1 15^1 25^1"]),
    49: (1, 3, ["49^1", "1^1 3^1 5^1 15^1 25^1", "1^1 5^1 7^1 15^1 21^1"]),
    50: (1, 2, ["1^1 49^1", "5^1 45^1"]),
    51: (0, 1, ["1^1 5^1 45^1"]),
}

A20_MERGED = [
    ["1^3 3 5 9", "3^2 5 9"],
    ["1 3 7 9", "1 3 7 9"],
    ["1 3 5 11", "1 3 5 11"],
    ["9 11", "9 11"],
    ["1 19", "1 19"],
    ["7 13", "7 13"],
    ["5 15", "5 15"],
    ["1^3 17", "3 17", "3 17"],
]

A27_MERGED = [
    ["1^3 3 5 7 9", "3^2 5 7 9"],
    ["1 3 5 7 11", "1 3 5 7 11"],
    ["7 9 11", "7 9 11"],
    ["5 9 13", "5 9 13"],
    ["1^3 11 13", "3 11 13", "3 11 13"],
    ["5 7 15", "5 7 15"],
    ["1^3 9 15", "3 9 15", "3 9 15"],
    ["1 11 15", "1 11 15"],
    ["1^3 7 17", "3 7 17", "3 7 17"],
    ["1^3 5 19", "3 5 19", "3 5 19"],
    ["1 7 19", "1 7 19"],
    ["1 9 17", "1 9 17"],
    ["1^3 3 21", "3^2 21"],
    ["1 5 21", "1 5 21"],
    ["1 3 23", "1 3 23"],
    ["27", "27"],
]

COUNTS_AN = {20: (324, 315), 27: (1526, 1506)}
