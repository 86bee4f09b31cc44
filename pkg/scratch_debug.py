import sys

sys.path.insert(0, "src")
from ptgraph._pqtree import PQTree

cases = [
    (5, [[0, 2, 3], [0, 1, 2, 3, 4], [3], [0, 1], [3, 4], [1]]),
    (4, [[1, 3], [2, 3], [0, 1, 3], [0, 1, 3], [0, 1, 2, 3], [0, 1, 2], [0, 2, 3]]),
]

for k, rows in cases:
    print("=" * 50)
    print("k =", k)
    tree = PQTree(k)
    for row in rows:
        ok = tree.reduce(row)
        print(f"row {row} -> {ok}; tree = {tree.root!r}")
        if not ok:
            break
