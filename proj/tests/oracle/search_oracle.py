"""Independent oracle for the search fixtures.

Labeled counts come from brute force over all 3^C(k,2) arc assignments.
Class counts come from extending every class by all 3^k attachments,
filtering by brute-force freeness and deduplicating with networkx
isomorphism tests. Output is pasted into tests/search_fixtures.hpp.
"""

import itertools
import sys

import networkx as nx


def is_free(k, arcs, m, n):
    adj = set(arcs)
    und = adj | {(v, u) for u, v in adj}
    for s in itertools.combinations(range(k), m):
        if all((a, b) not in und for a, b in itertools.combinations(s, 2)):
            return False
    for s in itertools.permutations(range(k), n):
        if all((s[i], s[j]) in adj for i in range(n) for j in range(i + 1, n)):
            return False
    return True


def labeled_count(k, m, n):
    pairs = list(itertools.combinations(range(k), 2))
    total = 0
    for choice in itertools.product(range(3), repeat=len(pairs)):
        arcs = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c]
        total += is_free(k, arcs, m, n)
    return total


def invariant(g):
    return (g.number_of_edges(), tuple(sorted((g.out_degree(v), g.in_degree(v)) for v in g)))


def class_counts(m, n, max_order):
    level = [nx.DiGraph()]
    level[0].add_node(0)
    if not is_free(1, [], m, n):
        return [0]
    counts = [1]
    for k in range(1, max_order):
        buckets = {}
        for parent in level:
            for choice in itertools.product(range(3), repeat=k):
                arcs = list(parent.edges())
                for j, c in enumerate(choice):
                    if c == 1:
                        arcs.append((k, j))
                    elif c == 2:
                        arcs.append((j, k))
                if not is_free(k + 1, arcs, m, n):
                    continue
                g = nx.DiGraph()
                g.add_nodes_from(range(k + 1))
                g.add_edges_from(arcs)
                bucket = buckets.setdefault(invariant(g), [])
                if not any(nx.is_isomorphic(g, h) for h in bucket):
                    bucket.append(g)
        level = [g for b in buckets.values() for g in b]
        counts.append(len(level))
        if not level:
            break
    return counts


if __name__ == "__main__":
    cases = [(2, 3, 5), (2, 4, 8), (3, 3, 9), (4, 3, 6), (3, 4, 5)]
    for m, n, top in cases:
        print(f"classes ({m},{n}):", class_counts(m, n, top))
        sys.stdout.flush()
    for m, n in [(2, 3), (2, 4), (3, 3), (4, 3), (3, 4)]:
        print(f"labeled ({m},{n}):", [labeled_count(k, m, n) for k in range(1, 6)])
        sys.stdout.flush()
