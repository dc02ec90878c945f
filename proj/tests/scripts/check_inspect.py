#!/usr/bin/env python3
"""Runs `mds inspect` on every fixture cluster and recomputes the classic
measures and the self-avoiding walks from the dumped edge lists with networkx.

usage: check_inspect.py <mds binary> <corpus root> <output dir>
"""

import csv
import math
import pathlib
import subprocess
import sys

import networkx as nx

MEASURES = "Dg,Stg,CC,SP,SP-w1,SP-w2,Btw,Btw-w,PR,PR-w"


def read_edges(path):
    g = nx.Graph()
    with open(path) as f:
        header = f.readline().split()
        g.add_nodes_from(range(int(header[2])))
        for line in f:
            i, j, w = line.split("\t")
            g.add_edge(int(i), int(j), weight=float(w))
    return g


def read_table(path):
    with open(path) as f:
        rows = list(csv.DictReader(f, delimiter="\t"))
    return rows


def mean_distance(g, attr):
    out = {}
    for s in g.nodes:
        lengths = nx.single_source_dijkstra_path_length(g, s, weight=attr)
        others = [d for t, d in lengths.items() if t != s]
        out[s] = sum(others) / len(others) if others else math.nan
    return out


def saw(g, origin, h):
    probs = {}

    def step(u, left, p, seen):
        if left == 0:
            probs[u] = probs.get(u, 0.0) + p
            return
        open_nb = [v for v in g.neighbors(u) if v not in seen]
        for v in open_nb:
            step(v, left - 1, p / len(open_nb), seen | {v})

    step(origin, h, 1.0, {origin})
    return probs


def expected(g):
    wmax = max((d["weight"] for _, _, d in g.edges(data=True)), default=1.0)
    for _, _, d in g.edges(data=True):
        d["w1"] = wmax - d["weight"] + 1.0
        d["w2"] = 1.0 / d["weight"]
    return {
        "Dg": dict(g.degree()),
        "Stg": dict(g.degree(weight="weight")),
        "CC": nx.clustering(g),
        "SP": mean_distance(g, None),
        "SP-w1": mean_distance(g, "w1"),
        "SP-w2": mean_distance(g, "w2"),
        "Btw": nx.betweenness_centrality(g, normalized=False),
        "Btw-w": nx.betweenness_centrality(g, normalized=False, weight="w2"),
        "PR": nx.pagerank(g, alpha=0.85, weight=None, tol=1e-13, max_iter=1000),
        "PR-w": nx.pagerank(g, alpha=0.85, weight="weight", tol=1e-13, max_iter=1000),
    }


TOLERANCE = {"PR": 1e-7, "PR-w": 1e-7}


def close(a, b, rel):
    if math.isnan(b):
        return math.isnan(a)
    return abs(a - b) <= max(rel * abs(b), 1e-12)


def main():
    mds, corpus, out = sys.argv[1:4]
    corpus = pathlib.Path(corpus)
    clusters = sorted(p.name for p in corpus.iterdir() if (p / "docs").is_dir())
    failures = 0
    checked = 0
    for cluster in clusters:
        subprocess.run([mds, "--corpus", str(corpus), "--measures", MEASURES, "--output-dir", out, "inspect", cluster],
                       check=True, stderr=subprocess.DEVNULL)
        [run] = [p for p in pathlib.Path(out).glob(f"*/inspect/{cluster}")]
        for model in ("noun", "tfidf"):
            g = read_edges(run / f"edges-{model}.tsv")
            want = expected(g)
            for row in read_table(run / f"scores-{model}.tsv"):
                node = int(row["node"])
                for name, ref in want.items():
                    got = math.nan if row[name] == "NA" else float(row[name])
                    checked += 1
                    if not close(got, float(ref[node]), TOLERANCE.get(name, 1e-9)):
                        failures += 1
                        print(f"{cluster} {model} {name} node {node}: {got} vs {ref[node]}")
            for h in (2, 3):
                walks = {}
                for row in read_table(run / f"walks-{model}-h{h}.tsv"):
                    walks.setdefault(int(row["origin"]), {})[int(row["target"])] = float(row["probability"])
                for origin in g.nodes:
                    ref = saw(g, origin, h)
                    got = walks.get(origin, {})
                    checked += 1
                    if set(got) != set(ref) or any(not close(got[t], ref[t], 1e-12) for t in ref):
                        failures += 1
                        print(f"{cluster} {model} walk h={h} origin {origin} differs")
    print(f"{checked} values checked against networkx, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
