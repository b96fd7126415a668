# appendix_data.py
# Эталонные таблицы, перенесённые вручную; сверяются с вычислением в appendix_tables.py

# Horn(d, r, 3) up to permutation of the three components: (representative, edim).
HORN_TRIPLES = {
    (1, 2): [
        (([1], [2], [2]), 0),
        (([2], [2], [2]), 1),
    ],
    (1, 3): [
        (([1], [3], [3]), 0),
        (([2], [2], [3]), 0),
        (([2], [3], [3]), 1),
        (([3], [3], [3]), 2),
    ],
    (1, 4): [
        (([1], [4], [4]), 0),
        (([2], [3], [4]), 0),
        (([2], [4], [4]), 1),
        (([3], [3], [3]), 0),
        (([3], [3], [4]), 1),
        (([3], [4], [4]), 2),
        (([4], [4], [4]), 3),
    ],
    (2, 3): [
        (([1, 2], [2, 3], [2, 3]), 0),
        (([1, 3], [1, 3], [2, 3]), 0),
        (([1, 3], [2, 3], [2, 3]), 1),
        (([2, 3], [2, 3], [2, 3]), 2),
    ],
    (2, 4): [
        (([1, 2], [3, 4], [3, 4]), 0),
        (([1, 3], [2, 4], [3, 4]), 0),
        (([1, 3], [3, 4], [3, 4]), 1),
        (([1, 4], [1, 4], [3, 4]), 0),
        (([1, 4], [2, 4], [2, 4]), 0),
        (([1, 4], [2, 4], [3, 4]), 1),
        (([1, 4], [3, 4], [3, 4]), 2),
        (([2, 3], [2, 3], [3, 4]), 0),
        (([2, 3], [2, 4], [2, 4]), 0),
        (([2, 3], [2, 4], [3, 4]), 1),
        (([2, 3], [3, 4], [3, 4]), 2),
        (([2, 4], [2, 4], [2, 4]), 1),
        (([2, 4], [2, 4], [3, 4]), 2),
        (([2, 4], [3, 4], [3, 4]), 3),
        (([3, 4], [3, 4], [3, 4]), 4),
    ],
    (3, 4): [
        (([1, 2, 3], [2, 3, 4], [2, 3, 4]), 0),
        (([1, 2, 4], [1, 3, 4], [2, 3, 4]), 0),
        (([1, 2, 4], [2, 3, 4], [2, 3, 4]), 1),
        (([1, 3, 4], [1, 3, 4], [1, 3, 4]), 0),
        (([1, 3, 4], [1, 3, 4], [2, 3, 4]), 1),
        (([1, 3, 4], [2, 3, 4], [2, 3, 4]), 2),
        (([2, 3, 4], [2, 3, 4], [2, 3, 4]), 3),
    ],
}

# Representatives of the Horn inequalities for Kirwan(r, 3), grouped by d; each
# stands for itself "and its permutations".
KIRWAN_INEQUALITIES = {
    2: {
        1: [([1], [2], [2])],
    },
    3: {
        1: [([1], [3], [3]), ([2], [2], [3])],
        2: [([1, 2], [2, 3], [2, 3]), ([1, 3], [1, 3], [2, 3])],
    },
    4: {
        1: [([1], [4], [4]), ([2], [3], [4]), ([3], [3], [3])],
        2: [
            ([1, 2], [3, 4], [3, 4]),
            ([1, 3], [2, 4], [3, 4]),
            ([1, 4], [1, 4], [3, 4]),
            ([1, 4], [2, 4], [2, 4]),
            ([2, 3], [2, 3], [3, 4]),
            ([2, 3], [2, 4], [2, 4]),
        ],
        3: [
            ([1, 2, 3], [2, 3, 4], [2, 3, 4]),
            ([1, 2, 4], [1, 3, 4], [2, 3, 4]),
            ([1, 3, 4], [1, 3, 4], [1, 3, 4]),
        ],
    },
}
