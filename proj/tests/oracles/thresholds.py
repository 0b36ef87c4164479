"""Brute-force thresholds for the Turán-type predicates with plain Python integers.

q(n) is counted as partitions into distinct parts with a largest-part recursion, and
p_k(n) by coin-change over parts not divisible by k. Writes JSON.
"""

import json
import sys


def distinct_counts(N):
    # ways[n] after processing parts 1..j = partitions of n into distinct parts <= j
    ways = [1] + [0] * N
    for j in range(1, N + 1):
        for n in range(N, j - 1, -1):
            ways[n] += ways[n - j]
    return ways


def restricted_counts(k, N):
    ways = [1] + [0] * N
    for part in range(1, N + 1):
        if part % k == 0:
            continue
        for n in range(part, N + 1):
            ways[n] += ways[n - part]
    return ways


def by_enumeration(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(by_enumeration(n - p, p - 1) for p in range(min(n, largest), 0, -1))


def log_concave(a, n):
    return a[n] ** 2 >= a[n - 1] * a[n + 1]


def higher_turan(a, n):
    lhs = 4 * (a[n] ** 2 - a[n - 1] * a[n + 1]) * (a[n + 1] ** 2 - a[n] * a[n + 2])
    return lhs >= (a[n] * a[n + 1] - a[n - 1] * a[n + 2]) ** 2


def invariants(a, n):
    a0, a1, a2, a3, a4 = a[n - 1:n + 4]
    A = a0 * a4 - 4 * a1 * a3 + 3 * a2 * a2
    B = -a0 * a2 * a4 + a2 ** 3 + a0 * a3 ** 2 + a1 ** 2 * a4 - 2 * a1 * a2 * a3
    return A, B, A ** 3 - 27 * B ** 2


def last_failure(pred, bound):
    for n in range(bound, 0, -1):
        if not pred(n):
            return n
    return 0


def main(path):
    q = distinct_counts(5010)
    assert all(q[n] == by_enumeration(n) for n in range(40))
    out = {
        "q_small": q[:61],
        "q_1000": str(q[1000]),
        "q_2000": str(q[2000]),
        "q": {
            "logconcave": last_failure(lambda n: log_concave(q, n), 5000),
            "higher_turan": last_failure(lambda n: higher_turan(q, n), 5000),
            "A_pos": last_failure(lambda n: invariants(q, n)[0] > 0, 5000),
            "B_pos": last_failure(lambda n: invariants(q, n)[1] > 0, 5000),
            "I_pos": last_failure(lambda n: invariants(q, n)[2] > 0, 5000),
        },
        "higher_turan_equalities": [
            n for n in range(1, 2000)
            if 4 * (q[n] ** 2 - q[n - 1] * q[n + 1]) * (q[n + 1] ** 2 - q[n] * q[n + 2])
            == (q[n] * q[n + 1] - q[n - 1] * q[n + 2]) ** 2
        ],
        "pk": {},
    }
    for k in (3, 4, 5):
        p = restricted_counts(k, 3005)
        out["pk"][str(k)] = {
            "small": p[:31],
            "logconcave": last_failure(lambda n: log_concave(p, n), 3000),
            "higher_turan": last_failure(lambda n: higher_turan(p, n), 3000),
        }
    with open(path, "w") as fh:
        json.dump(out, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "thresholds.json")
