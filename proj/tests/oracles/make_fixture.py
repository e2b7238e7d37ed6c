#!/usr/bin/env python3
"""Writes tests/data/graph_fixture.txt: a 100-line edge-list exercising
comments, blank lines, duplicate edges, self-loops and explicit weights.
Run once; the file is committed."""
import random
import os

rng = random.Random(917)
lines = []
lines.append("# synthetic parser fixture")
lines.append("")
while len(lines) < 100:
    r = rng.random()
    if r < 0.05:
        lines.append(f"# comment {len(lines)}")
    elif r < 0.08:
        lines.append("")
    elif r < 0.14:
        v = rng.randrange(0, 40)
        lines.append(f"{v} {v}")  # self-loop
    else:
        a = rng.randrange(0, 40)
        b = rng.randrange(0, 40)
        if rng.random() < 0.4:
            w = round(rng.uniform(0.1, 5.0), 2)
            lines.append(f"{a} {b} {w}")
        else:
            lines.append(f"{a} {b}")

out = os.path.join(os.path.dirname(__file__), "..", "data", "graph_fixture.txt")
os.makedirs(os.path.dirname(out), exist_ok=True)
with open(out, "w") as f:
    f.write("\n".join(lines) + "\n")
print(f"wrote {out}: {len(lines)} lines")
