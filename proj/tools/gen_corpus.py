#!/usr/bin/env python3
"""Regenerate the graph6 corpora under tests/data.

Connected graphs are produced by vertex extension with nauty canonical
certificates for deduplication; trees come from networkx.  The graph6
reference file is encoded by networkx, independently of the C++ writer.
"""
import argparse
import pathlib
import random

import networkx as nx
import pynauty

EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
EXPECTED_TREES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47,
                  10: 106, 11: 235, 12: 551}


def to_pynauty(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in range(n)}
    return pynauty.Graph(n, adjacency_dict=adj)


def canonical(g):
    labels = pynauty.canon_label(to_pynauty(g))
    inv = {old: new for new, old in enumerate(labels)}
    h = nx.Graph()
    h.add_nodes_from(range(g.number_of_nodes()))
    h.add_edges_from((inv[u], inv[v]) for u, v in g.edges())
    return h


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def all_graphs(max_n):
    level = {1: [nx.empty_graph(1)]}
    for n in range(1, max_n):
        seen = {}
        for g in level[n]:
            for mask in range(1 << n):
                h = g.copy()
                h.add_node(n)
                h.add_edges_from((n, v) for v in range(n) if mask >> v & 1)
                cert = pynauty.certificate(to_pynauty(h))
                if cert not in seen:
                    seen[cert] = h
        level[n + 1] = list(seen.values())
    return level


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    level = all_graphs(8)
    for n in range(1, 9):
        lines = sorted(g6(canonical(g)) for g in level[n] if nx.is_connected(g))
        assert len(lines) == EXPECTED_CONNECTED[n], (n, len(lines))
        (out / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")

    for n in range(1, 13):
        trees = [nx.empty_graph(1)] if n == 1 else list(nx.nonisomorphic_trees(n))
        lines = sorted(g6(canonical(t)) for t in trees)
        assert len(lines) == EXPECTED_TREES[n], (n, len(lines))
        (out / f"trees_n{n}.g6").write_text("\n".join(lines) + "\n")

    # n<TAB>edge list<TAB>graph6, with edges "i-j" separated by spaces.
    rng = random.Random(20180411)
    rows = []
    sizes = [0, 1, 2, 3, 5, 6, 7, 12, 13, 62, 63, 64, 100, 258, 300]
    sizes += [rng.randint(1, 50) for _ in range(200)]
    for n in sizes:
        p = rng.random()
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))
        edges = " ".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
        rows.append(f"{n}\t{edges}\t{g6(g)}")
    (out / "graph6_reference.tsv").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
