import itertools
import random
import sys

sys.path.insert(0, "src")
from ptgraph._pqtree import PQTree


def brute_c1p(k, rows):
    """All column orders of 0..k-1 where every row is consecutive."""
    sols = []
    for perm in itertools.permutations(range(k)):
        pos = {c: i for i, c in enumerate(perm)}
        ok = True
        for row in rows:
            ps = sorted(pos[c] for c in row)
            if ps and ps[-1] - ps[0] + 1 != len(ps):
                ok = False
                break
        if ok:
            sols.append(perm)
    return sols


def check_frontier(k, rows, frontier):
    pos = {c: i for i, c in enumerate(frontier)}
    for row in rows:
        ps = sorted(pos[c] for c in row)
        if ps and ps[-1] - ps[0] + 1 != len(ps):
            return False
    return True


def run_case(k, rows):
    tree = PQTree(k)
    ok = True
    for row in rows:
        if not tree.reduce(row):
            ok = False
            break
    expect = bool(brute_c1p(k, rows))
    if ok != expect:
        return ("verdict", k, rows, ok, expect)
    if ok:
        f = tree.frontier()
        if sorted(f) != list(range(k)):
            return ("frontier-perm", k, rows, f)
        if not check_frontier(k, rows, f):
            return ("frontier-bad", k, rows, f)
    return None


def main():
    rng = random.Random(12345)
    fails = 0
    trials = 0
    for trial in range(4000):
        k = rng.randint(1, 7)
        nrows = rng.randint(0, 7)
        rows = []
        for _ in range(nrows):
            sz = rng.randint(1, k)
            rows.append(sorted(rng.sample(range(k), sz)))
        trials += 1
        r = run_case(k, rows)
        if r is not None:
            fails += 1
            print("FAIL", r)
            if fails > 5:
                break
    print(f"{trials} trials, {fails} failures")


if __name__ == "__main__":
    main()
