#!/usr/bin/env python3
"""Independent one-pass dedup count over an edge-list file, applying the
loader's rules (first-appearance relabel, drop self-loops, keep first
weight of duplicate (src,dst) pairs). Prints the numbers frozen into
test_graph_io.cpp."""
import sys

path = sys.argv[1] if len(sys.argv) > 1 else "tests/data/graph_fixture.txt"
label_to_id = {}
edges = {}

def node(label):
    if label not in label_to_id:
        label_to_id[label] = len(label_to_id)
    return label_to_id[label]

with open(path) as f:
    for raw in f:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        a, b = int(toks[0]), int(toks[1])
        w = float(toks[2]) if len(toks) == 3 else 1.0
        if a == b:
            continue
        key = (node(a), node(b))
        if key not in edges:
            edges[key] = w

n = len(label_to_id)
deg = [0] * n
for (u, v) in edges:
    deg[u] += 1
    deg[v] += 1
max_deg = max(deg) if deg else 0
hub = deg.index(max_deg) if deg else 0
print(f"nodes={n} edges={len(edges)} max_degree={max_deg} hub={hub}")
print(f"weight_sum={sum(edges.values()):.10g}")
