#!/usr/bin/env python3
"""Independent oracle for lattice and le-semigroup counts.

Lattices: every reflexive relation on n points is scanned (all off-diagonal
bit patterns), filtered to partial orders with all binary meets and joins,
and deduplicated by brute force over all n! relabelings.

le-semigroups: on each lattice representative, every row x -> x*_ is a
join-preserving self-map and every column is a join-preserving self-map.
Tables are built row by row from the list of join-preserving maps, columns
are filtered afterwards, then associativity is scanned in full. Isomorphism
classes are found by brute force over all order automorphisms.

Usage: count_le_semigroups.py MAX_N
"""
import itertools
import sys


def is_partial_order(n, leq):
    for a in range(n):
        if not leq[a][a]:
            return False
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                return False
            for c in range(n):
                if leq[a][b] and leq[b][c] and not leq[a][c]:
                    return False
    return True


def bound(n, leq, a, b, upper):
    cands = [c for c in range(n) if (leq[a][c] and leq[b][c] if upper else leq[c][a] and leq[c][b])]
    best = [c for c in cands if all((leq[c][d] if upper else leq[d][c]) for d in cands)]
    return best[0] if len(best) == 1 else None


def lattice_tables(n, leq):
    join = [[None] * n for _ in range(n)]
    meet = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            join[a][b] = bound(n, leq, a, b, True)
            meet[a][b] = bound(n, leq, a, b, False)
            if join[a][b] is None or meet[a][b] is None:
                return None
    return join, meet


def relabel_leq(n, leq, p):
    # p maps old -> new
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[p[a]][p[b]] = leq[a][b]
    return out


def lattices(n):
    reps = []
    seen = set()
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    for bits in range(1 << len(pairs)):
        leq = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        for k, (a, b) in enumerate(pairs):
            if bits >> k & 1:
                leq[a][b] = 1
        if not is_partial_order(n, leq):
            continue
        if lattice_tables(n, leq) is None:
            continue
        key = min(tuple(map(tuple, relabel_leq(n, leq, p))) for p in itertools.permutations(range(n)))
        if key not in seen:
            seen.add(key)
            reps.append([list(r) for r in key])
    return reps


def join_maps(n, join):
    out = []
    for f in itertools.product(range(n), repeat=n):
        if all(f[join[a][b]] == join[f[a]][f[b]] for a in range(n) for b in range(n)):
            out.append(f)
    return out


def le_semigroups(n, leq):
    join, _ = lattice_tables(n, leq)
    maps = join_maps(n, join)
    autos = [p for p in itertools.permutations(range(n))
             if all(leq[a][b] == leq[p[a]][p[b]] for a in range(n) for b in range(n))]
    map_set = set(maps)
    labeled = 0
    classes = set()
    for rows in itertools.product(maps, repeat=n):
        cols_ok = True
        for y in range(n):
            col = tuple(rows[x][y] for x in range(n))
            if col not in map_set:
                cols_ok = False
                break
        if not cols_ok:
            continue
        if not all(rows[rows[a][b]][c] == rows[a][rows[b][c]]
                   for a in range(n) for b in range(n) for c in range(n)):
            continue
        labeled += 1
        key = min(
            tuple(tuple(p[rows[inv(p)[a]][inv(p)[b]]] for b in range(n)) for a in range(n))
            for p in autos)
        classes.add(key)
    return labeled, len(classes)


def inv(p):
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return q


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for n in range(1, max_n + 1):
        lats = lattices(n)
        total_labeled = 0
        total_classes = 0
        for leq in lats:
            labeled, classes = le_semigroups(n, leq)
            print(f"n={n} lattice={leq} labeled={labeled} classes={classes}")
            total_labeled += labeled
            total_classes += classes
        print(f"n={n} lattices={len(lats)} labeled={total_labeled} classes={total_classes}")


if __name__ == "__main__":
    main()
