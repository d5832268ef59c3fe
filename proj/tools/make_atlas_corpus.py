"""Writes every connected graph on 1..7 vertices, one per isomorphism class,
as graph6 lines. Source: the networkx graph atlas."""

import sys

import networkx as nx
from networkx.readwrite.graph6 import to_graph6_bytes


def main(path: str) -> None:
    with open(path, "w") as out:
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == 0 or not nx.is_connected(g):
                continue
            out.write(to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_le7.g6")
