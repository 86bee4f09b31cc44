import sys

sys.path.insert(0, "src")
import ptgraph._pqtree as pq

tree = pq.PQTree(4)
for row in [[1, 3], [2, 3], [0, 1, 3]]:
    tree.reduce(row)
print("tree:", tree.root)

row = [0, 1, 2]
s = len(row)
cnt = {}
for cid in row:
    node = tree.leaves[cid]
    while node is not None:
        cnt[node] = cnt.get(node, 0) + 1
        node = node.parent
for n, c in cnt.items():
    print("cnt", n, "=", c, "size", n.size)
R = tree.leaves[row[0]]
while cnt[R] != s:
    R = R.parent
print("pertinent root:", R, "cnt", cnt[R], "size", R.size)
