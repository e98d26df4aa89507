"""Reference values frozen before the implementation was written.

Bernoulli and Euler numbers are standard tables (B_1 = -1/2); the
polynomials were expanded by hand from their defining sums.
"""

BERNOULLI = {
    0: "1", 1: "-1/2", 2: "1/6", 3: "0", 4: "-1/30", 5: "0", 6: "1/42", 8: "-1/30",
    10: "5/66", 12: "-691/2730", 14: "7/6", 16: "-3617/510", 18: "43867/798",
    20: "-174611/330", 30: "8615841276005/14322",
}

EULER = {0: "1", 1: "0", 2: "-1", 3: "0", 4: "5", 6: "-61", 8: "1385", 10: "-50521", 12: "2702765"}

# coefficient lists, constant term first
BERNOULLI_POLY = {
    2: ["1/6", "-1", "1"],
    3: ["0", "1/2", "-3/2", "1"],
    4: ["-1/30", "0", "1", "-2", "1"],
}
EULER_POLY = {
    0: ["1"],
    2: ["0", "-1", "1"],
    3: ["1/4", "0", "-3/2", "1"],
    4: ["0", "1", "0", "-2", "1"],
}
HERMITE = {
    0: ["1"],
    1: ["0", "2"],
    2: ["-2", "0", "4"],
    3: ["0", "-12", "0", "8"],
    4: ["12", "0", "-48", "0", "16"],
    5: ["0", "120", "0", "-160", "0", "32"],
}
ZEILBERGER = {(1, 1): ["1", "1"], (2, 2): ["1", "4", "2"], (3, 2): ["1", "6", "6"], (3, 3): ["1", "9", "18", "6"]}

# K_n = sum_i C(n,i) B_{n+i+1}
CHEN_K = {0: "-1/2", 1: "1/6", 2: "-1/15", 3: "4/105"}

POWER_SUMS = {(2, 3): 14, (1, 5): 15, (3, 4): 100, (0, 7): 7, (5, 0): 0}
