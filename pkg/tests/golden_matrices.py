"""Reference reduced matrices per family, columns in class-letter order."""


def three_chain_iii(r, t):
    return "abd", [[r + 2, t, 0], [r, t + 2, t - 1], [0, 2, 2 * t - 1]]


def left4(s, u):
    return "abc", [[2 + s, 1, 0], [1, 2 + s, u], [0, s, 2 + u]]


def mid4_s2t2(r, u):
    return "abcdef", [
        [2 * r, 4, 0, 2 * u, 3, 0],
        [0, 0, 4, 4, 0, 2 * u - 1],
        [3 + r, 2, 0, u, 1, 0],
        [r, 5, u, u, 1, 0],
        [0, 2, u + 3, 2, 0, u - 1],
        [r, 2, 2, u + 3, 1, u - 1],
    ]


def mid4_s2t2u1(r):
    return "abcde", [
        [0, 2, 4, 2, 0],
        [2 * r, 4, 0, 2, 3],
        [3 + r, 2, 0, 1, 1],
        [r, 5, 1, 1, 1],
        [r, 2, 2, 4, 1],
    ]


def mid4_s1u1(r, t):
    return "abcd", [
        [r + 2, t, 0, 1],
        [r, t, t, 3],
        [0, 1, t + 2, 1],
        [r, t + 2, 1, 1],
    ]


def right5(r, u, v):
    return "abcdefghi", [
        [0, 0, 0, 2 * u, 4, 0, 0, 0, 2 * v - 1],
        [2 * r, 2, 0, 0, 2 * v, 2 * u, 3, 0, 0],
        [0, 0, 2, 2 * v, 0, 4, 0, 2 * u - 1, 0],
        [3 + r, 1, 0, 0, v, u, 1, 0, 0],
        [r, 4, u, 0, v, u, 1, 0, 0],
        [0, 2, 2 + u, v, 0, 2, 0, u - 1, 0],
        [r, 1, 0, u, 3 + v, u, 1, 0, v - 1],
        [0, 0, 1, u + v + 1, 2, 2, 0, u - 1, v - 1],
        [r, 1, 1, v, v, 3 + u, 1, u - 1, 0],
    ]


def right5_u1(r, v):
    return "abcdefgi", [
        [0, 0, 0, 2, 4, 0, 0, 2 * v - 1],
        [0, 2, 3, v, 0, 2, 0, 0],
        [2 * r, 2, 0, 0, 2 * v, 2, 3, 0],
        [3 + r, 1, 0, 0, v, 1, 1, 0],
        [r, 4, 1, 0, v, 1, 1, 0],
        [0, 0, 1, 2 + v, 2, 2, 0, v - 1],
        [r, 1, 1, v, v, 4, 1, 0],
        [r, 1, 0, 1, 3 + v, 1, 1, v - 1],
    ]
