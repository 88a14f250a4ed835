#!/usr/bin/env python3
"""Regenerate data/census.json and data/census.g6 from standard constructions.

The expected_properties recorded here are literature values; the C++ toolkit
re-derives every one of them and flags any disagreement.
"""
import json
import pathlib

import networkx as nx


def generalized_petersen(n, k):
    g = nx.Graph()
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
        g.add_edge(i, n + i)
        g.add_edge(n + i, n + (i + k) % n)
    return g


def coxeter():
    # Three heptagrams {7/1}, {7/2}, {7/3} joined through seven hub vertices.
    g = nx.Graph()
    for i in range(7):
        for ring, step in enumerate((1, 2, 3)):
            g.add_edge(7 * ring + i, 7 * ring + (i + step) % 7)
            g.add_edge(21 + i, 7 * ring + i)
    return g


def holt():
    # Vertices (x, y) in Z9 x Z3; (x, y) ~ (4x +- 1, y + 1).
    g = nx.Graph()
    idx = lambda x, y: 3 * (x % 9) + (y % 3)
    for x in range(9):
        for y in range(3):
            for s in (1, -1):
                g.add_edge(idx(x, y), idx(4 * x + s, y + 1))
    return g


def canonical_ints(g):
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


ENTRIES = [
    ("k4", nx.complete_graph(4), dict(aut_order="24")),
    ("k33", nx.complete_bipartite_graph(3, 3), dict(aut_order="72")),
    ("cube", canonical_ints(nx.hypercube_graph(3)), dict(aut_order="48")),
    ("petersen", nx.petersen_graph(), dict(aut_order="120")),
    ("heawood", nx.heawood_graph(), dict(aut_order="336")),
    ("mobius-kantor", nx.moebius_kantor_graph(), dict(aut_order="96")),
    ("pappus", nx.pappus_graph(), dict(aut_order="216")),
    ("desargues", nx.desargues_graph(), dict(aut_order="240")),
    ("dodecahedron", nx.dodecahedral_graph(), dict(aut_order="120")),
    ("nauru", generalized_petersen(12, 5), dict(aut_order="144")),
    ("coxeter", coxeter(), dict(aut_order="336")),
    ("holt", holt(), dict(aut_order="54", half_arc_transitive=True)),
]


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "data"
    records = []
    for name, g, extra in ENTRIES:
        degrees = {d for _, d in g.degree()}
        assert len(degrees) == 1, name
        valence = degrees.pop()
        props = dict(order=g.number_of_nodes(), valence=valence,
                     bipartite=nx.is_bipartite(g), girth=nx.girth(g),
                     connected=nx.is_connected(g))
        if valence == 3:
            props["two_arc_transitive"] = True
        props.update(extra)
        g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
        records.append(dict(name=name, graph6=g6, expected_properties=props))
    records.sort(key=lambda r: r["name"])
    (root / "census.json").write_text(json.dumps(records, indent=2) + "\n")
    (root / "census.g6").write_text("".join(r["graph6"] + "\n" for r in records))


if __name__ == "__main__":
    main()
