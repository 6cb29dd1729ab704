"""Writes the 20-polygon corpus used by the CLI and MDS checks."""
import json
import math
import pathlib
import random

out = pathlib.Path(__file__).parent / "corpus"
out.mkdir(exist_ok=True)
rng = random.Random(2024)


def write(name, pts):
    n = len(pts)
    doc = {"vertices": [[round(x, 6), round(y, 6)] for x, y in pts],
           "edges": [[i, (i + 1) % n] for i in range(n)]}
    (out / f"{name}.json").write_text(json.dumps(doc) + "\n")


for k in range(10):
    n = rng.randint(10, 14)
    cx, cy = rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)
    pts = []
    for i in range(n):
        a = 2 * math.pi * (i + rng.uniform(-0.2, 0.2)) / n
        r = 1.0 + rng.uniform(-0.05, 0.05)
        pts.append((cx + r * math.cos(a), cy + r * math.sin(a)))
    write(f"circle_{k:02d}", pts)

for k in range(10):
    w, h = 1.6 + rng.uniform(-0.1, 0.1), 0.4 + rng.uniform(-0.05, 0.05)
    rot = rng.uniform(-0.1, 0.1)
    base = [(-w, -h), (0, -h), (w, -h), (w, 0), (w, h), (0, h), (-w, h), (-w, 0)]
    pts = []
    for x, y in base:
        x += rng.uniform(-0.02, 0.02)
        y += rng.uniform(-0.02, 0.02)
        pts.append((x * math.cos(rot) - y * math.sin(rot), x * math.sin(rot) + y * math.cos(rot)))
    write(f"rect_{k:02d}", pts)
