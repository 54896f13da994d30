"""Pure-Python reference kernels.

Composition tables are square integer arrays ``comp[g, f]`` holding the index
of ``g . f`` or ``-1`` when the pair is not composable.
"""

from itertools import product


def associativity_violations(comp, max_count=64):
    """Triples ``(h, g, f)`` with ``h.(g.f) != (h.g).f``, in index order."""
    m = len(comp)
    rows = [list(map(int, row)) for row in comp]
    found = []
    for f in range(m):
        for g in range(m):
            gf = rows[g][f]
            if gf < 0:
                continue
            for h in range(m):
                hg = rows[h][g]
                if hg < 0:
                    continue
                left = rows[h][gf]
                right = rows[hg][f]
                # ill-typed composites are reported by the typing checks
                if left < 0 or right < 0:
                    continue
                if left != right:
                    found.append((h, g, f))
                    if len(found) >= max_count:
                        return found
    return found


def is_associative_operation(table, n):
    """``table`` is a flat row-major ``n*n`` operation table."""
    for x in range(n):
        for y in range(n):
            xy = table[x * n + y]
            for z in range(n):
                if table[xy * n + z] != table[x * n + table[y * n + z]]:
                    return False
    return True


def count_associative_operations(n):
    """Brute-force count of associative binary operations on ``n`` labels."""
    if n == 0:
        return 1
    count = 0
    for table in product(range(n), repeat=n * n):
        if is_associative_operation(table, n):
            count += 1
    return count
