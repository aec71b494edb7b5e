"""Regenerate the bundled graph6 corpora from the networkx graph atlas.

The atlas lists every graph on 0..7 vertices up to isomorphism (1253 graphs,
1044 of them on 7 vertices).  Writes

    src/specbounds/data/graphs_upto7.g6   all atlas graphs
    tests/data/connected5.g6              the 21 connected graphs on 5 vertices
"""
from pathlib import Path

import networkx as nx

ROOT = Path(__file__).resolve().parent.parent


def encode(g):
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def main():
    atlas = nx.graph_atlas_g()
    out = ROOT / "src" / "specbounds" / "data" / "graphs_upto7.g6"
    out.write_text("".join(encode(g) + "\n" for g in atlas))
    conn = [g for g in atlas if g.number_of_nodes() == 5 and nx.is_connected(g)]
    tests = ROOT / "tests" / "data"
    tests.mkdir(parents=True, exist_ok=True)
    (tests / "connected5.g6").write_text("".join(encode(g) + "\n" for g in conn))
    print(f"{len(atlas)} graphs -> {out}; {len(conn)} connected n=5 graphs")


if __name__ == "__main__":
    main()
