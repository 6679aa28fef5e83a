"""Independent oracles. These deliberately avoid the package's own line
lists and search code."""

from itertools import combinations, product

import pytest


def grid_points(n):
    return [(0, 0)] + [(r, c) for r in range(1, n) for c in range(1, n + 1)]


def path_pairs(n):
    """Adjacent pairs read off the grid geometry: vertical neighbours in a
    column (apex sits above every column) and horizontal neighbours in a row."""
    pts = grid_points(n)
    out = set()
    for a, b in combinations(pts, 2):
        (r1, c1), (r2, c2) = a, b
        if r1 == 0 and r2 == 1:
            out.add((a, b))
        elif r1 > 0 and c1 == c2 and abs(r1 - r2) == 1:
            out.add((a, b))
        elif r1 > 0 and r1 == r2 and abs(c1 - c2) == 1:
            out.add((a, b))
    return out


def clique_pairs(n):
    out = set()
    for a, b in combinations(grid_points(n), 2):
        (r1, c1), (r2, c2) = a, b
        if r1 == 0 or c1 == c2 or (r1 == r2):
            out.add((a, b))
    return out


def brute_is_proper(edges, colors):
    return all(colors[u] != colors[v] for u, v in edges)


def brute_colorable(vertex_count, edges, k):
    """Some assignment in range(k)**V is proper (plain enumeration)."""
    return any(brute_is_proper(edges, a) for a in product(range(k), repeat=vertex_count))


def brute_chromatic(vertex_count, edges):
    k = 1
    while not brute_colorable(vertex_count, edges, k):
        k += 1
    return k


def brute_prefix_free(words):
    words = list(words)
    if len(set(words)) != len(words):
        return False
    return not any(a != b and b.startswith(a) for a in words for b in words)


def brute_kraft(lengths):
    """(numerator, denominator) over the common denominator 2**max."""
    if not lengths:
        return 0, 1
    top = max(lengths)
    return sum(2 ** (top - l) for l in lengths), 2**top


@pytest.fixture
def paper_words():
    return ["0", "10", "110", "111"]


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
