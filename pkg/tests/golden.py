"""Reference matrices and vectors for the two golden digraphs.

Basis orders: Gamma_1 of the second example is
(01, 02, 13, 14, 23, 24, 53, 54, 03, 04); Gamma_2 is (013, 014, 023, 024).
"""

EX1_DELTA = {
    3: [[4]],
    2: [[4 * (i == j) for j in range(4)] for i in range(4)],
    1: [[4 * (i == j) for j in range(6)] for i in range(6)],
    0: [[3 if i == j else -1 for j in range(4)] for i in range(4)],
}
EX1_BETTI = [1, 0, 0, 0]
EX1_D3 = [[-1], [1], [-1], [1]]

EX2_D2 = [
    [1, 1, 0, 0],
    [0, 0, 1, 1],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [-1, 0, -1, 0],
    [0, -1, 0, -1],
]
EX2_D1 = [
    [-1, -1, 0, 0, 0, 0, 0, 0, -1, -1],
    [1, 0, -1, -1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, -1, -1, 0, 0],
]
EX2_DELTA = {
    2: [[3, 1, 1, 0], [1, 3, 0, 1], [1, 0, 3, 1], [0, 1, 1, 3]],
    1: [
        [4, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 4, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 3, 1, 1, 0, 1, 0, 0, 0],
        [0, 0, 1, 3, 0, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 3, 1, 1, 0, 0, 0],
        [0, 0, 0, 1, 1, 3, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 0, 2, 1, 1, 0],
        [0, 0, 0, 1, 0, 1, 1, 2, 0, 1],
        [0, 0, 0, 0, 0, 0, 1, 0, 4, 1],
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 4],
    ],
    0: [
        [4, -1, -1, -1, -1, 0],
        [-1, 3, 0, -1, -1, 0],
        [-1, 0, 3, -1, -1, 0],
        [-1, -1, -1, 4, 0, -1],
        [-1, -1, -1, 0, 4, -1],
        [0, 0, 0, -1, -1, 2],
    ],
}
EX2_BETTI = [1, 1, 0]
EX2_GAMMA1_ORDER = ["01", "02", "13", "14", "23", "24", "53", "54", "03", "04"]

# listed generator of ker Delta_1: -01+14-23+24+3*53-3*54-03+04
EX2_KERNEL_1_PRINTED = (-1, 0, 0, 1, -1, 1, 3, -3, -1, 1)
# the same expression with -13 in place of -01; only this one is
# annihilated by EX2_DELTA[1]
EX2_KERNEL_1_CORRECTED = (0, 0, -1, 1, -1, 1, 3, -3, -1, 1)
