#!/usr/bin/env python3
"""Regenerates the synthetic fixtures and the golden report files.

The expected tables are computed here by direct scans over the raw edge
tuples, independently of the C++ library. Run from the repository root:

    python3 tests/data/make_goldens.py
"""
import csv
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
GOLDEN = ROOT / "golden"
DAY = 86400


def fmt(v):
    """12 significant digits, positional where reasonable, trailing zeros cut."""
    if v == 0:
        return "0"
    sci = f"{v:.11e}"
    exp = int(sci.split("e")[1])
    rounded = float(sci)
    if -9 <= exp < 15:
        out = f"{rounded:.{max(0, 11 - exp)}f}"
        if "." in out:
            out = out.rstrip("0").rstrip(".")
        return out
    mant = sci.split("e")[0]
    if "." in mant:
        mant = mant.rstrip("0").rstrip(".")
    return f"{mant}e{exp}"


def read_events(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    events = []
    for r in rows:
        w = float(r["weight"]) if r.get("weight") else 1.0
        ts = int(r["timestamp"]) if r.get("timestamp") else None
        events.append((r["source"], r["target"], r["layer"], w, ts))
    return events


def build(events):
    edges = {}
    for s, t, l, w, _ in events:
        edges[(s, t, l)] = edges.get((s, t, l), 0.0) + w
    nodes = sorted({s for s, _, _ in edges} | {t for _, t, _ in edges})
    layers = sorted({l for _, _, l in edges})
    return nodes, layers, edges


def mn_any(net, x, alpha):
    nodes, layers, edges = net
    out = []
    for y in nodes:
        if y == x:
            continue
        k = sum(1 for l in layers if (x, y, l) in edges or (y, x, l) in edges)
        if k >= alpha:
            out.append(y)
    return out


def cdc(net, x, alpha):
    nodes, layers, edges = net
    s = mn_any(net, x, alpha)
    num = sum(edges.get((x, y, l), 0.0) + edges.get((y, x, l), 0.0) for l in layers for y in s)
    return num / ((len(nodes) - 1) * len(layers))


def clcc(net, x, alpha):
    nodes, layers, edges = net
    s = mn_any(net, x, alpha)
    if not s:
        return 0.0
    num = 0.0
    for l in layers:
        for y in s:
            num += sum(edges.get((z, y, l), 0.0) for z in s)
            num += sum(edges.get((y, z, l), 0.0) for z in s)
    return num / (2 * len(s) * len(layers))


def mdc(net, version, x):
    nodes, layers, edges = net
    num = 0.0
    sizes = 0
    union = set()
    for l in layers:
        nb = {y for y in nodes if (x, y, l) in edges or (y, x, l) in edges}
        union |= nb
        sizes += len(nb)
        num += sum(edges.get((x, y, l), 0.0) + edges.get((y, x, l), 0.0) for y in nb)
    if not union:
        return 0.0
    scale = {1: len(layers), 2: len(union), 3: sizes}[version]
    return num / ((len(nodes) - 1) * scale)


def sweep_csv(net, max_alpha):
    lines = ["alpha,mn_nonempty,cdc_nonzero,clcc_nonzero"]
    nodes = net[0]
    for a in range(1, max_alpha + 1):
        mn = sum(1 for x in nodes if mn_any(net, x, a))
        cd = sum(1 for x in nodes if cdc(net, x, a) > 0)
        cl = sum(1 for x in nodes if clcc(net, x, a) > 0)
        lines.append(f"{a},{mn},{cd},{cl}")
    return "\n".join(lines) + "\n"


def windows_csv(events, start, length, count, max_alpha):
    buckets = [[] for _ in range(count)]
    for e in events:
        t = e[4]
        if start <= t < start + count * length:
            buckets[(t - start) // length].append(e)
    nets = [build(b) for b in buckets]
    universe = sorted(set().union(*[set(n[0]) for n in nets]))
    combos = []
    for k in range(count, 0, -1):
        from itertools import combinations
        combos += [c for c in combinations(range(count), k)]
    labels = ["W" + "".join(str(i + 1) for i in c) for c in combos]
    table = {lab: [] for lab in ["none"] + labels}
    for a in range(1, max_alpha + 1):
        counts = {lab: 0 for lab in table}
        for x in universe:
            active = tuple(i for i, n in enumerate(nets) if x in n[0] and mn_any(n, x, a))
            lab = "W" + "".join(str(i + 1) for i in active) if active else "none"
            counts[lab] += 1
        for lab in table:
            table[lab].append(counts[lab])
    lines = ["combination," + ",".join(f"alpha_{a}" for a in range(1, max_alpha + 1))]
    for lab in ["none"] + labels:
        lines.append(lab + "," + ",".join(str(c) for c in table[lab]))
    return "\n".join(lines) + "\n"


def hist_csv(values, edges):
    counts = [0] * len(edges)
    for v in values:
        for i, e in enumerate(edges):
            if v <= e:
                counts[i] += 1
                break
        else:
            raise ValueError(v)
    lines = ["range,frequency,cumulative_percent"]
    run = 0
    for e, c in zip(edges, counts):
        run += c
        pct = 100.0 * run / len(values) if values else 0.0
        lines.append(f"{fmt(e)},{c},{fmt(pct)}")
    return "\n".join(lines) + "\n"


DEFAULT_EDGES = [2 * k / 100000.0 for k in range(16)] + [1.0]
SYNTHETIC_EDGES = [k / 1000.0 for k in range(8)] + [1.0]


def make_synthetic():
    rng = random.Random(20130517)
    nodes = [f"n{i:03d}" for i in range(200)]
    layers = [f"l{i}" for i in range(1, 6)]
    rows = []
    for _ in range(2400):
        s, t = rng.sample(nodes, 2)
        # a few hubs make the alpha columns differ
        if rng.random() < 0.3:
            s = nodes[rng.randrange(10)]
        if s == t:
            continue
        layer = layers[min(int(rng.expovariate(0.6)), 4)]
        w = 0.0 if rng.random() < 0.03 else round(rng.uniform(0.05, 1.0), 3)
        ts = rng.randrange(0, 470 * DAY)
        rows.append((s, t, layer, w, ts))
    with open(DATA / "synthetic200.csv", "w", newline="") as f:
        f.write("source,target,layer,weight,timestamp\n")
        for s, t, l, w, ts in rows:
            f.write(f"{s},{t},{l},{fmt(w)},{ts}\n")


def make_fig1_timed():
    # fig1 edges spread over five 90-day windows (day offsets from 0).
    days = [0, 10, 95, 100, 185, 190, 275, 280, 365, 370, 5, 200, 300]
    events = read_events(DATA / "fig1.csv")
    with open(DATA / "fig1_timed.csv", "w", newline="") as f:
        f.write("source,target,layer,weight,timestamp\n")
        for i, (s, t, l, w, _) in enumerate(events):
            f.write(f"{s},{t},{l},{fmt(w)},{days[i % len(days)] * DAY}\n")


def main():
    GOLDEN.mkdir(exist_ok=True)
    make_synthetic()
    make_fig1_timed()

    fig1 = build(read_events(DATA / "fig1.csv"))
    (GOLDEN / "fig1_sweep.csv").write_text(sweep_csv(fig1, 3))
    fig1_mdc2 = [float(fmt(mdc(fig1, 2, x))) for x in fig1[0]]
    (GOLDEN / "fig1_hist_mdc2.csv").write_text(hist_csv(fig1_mdc2, [0, 0.2, 0.4, 0.6, 0.8, 1.0]))
    timed = read_events(DATA / "fig1_timed.csv")
    (GOLDEN / "fig1_windows.csv").write_text(windows_csv(timed, 0, 90 * DAY, 5, 3))

    syn_events = read_events(DATA / "synthetic200.csv")
    syn = build(syn_events)
    (GOLDEN / "synthetic200_sweep.csv").write_text(sweep_csv(syn, 5))
    (GOLDEN / "synthetic200_windows.csv").write_text(windows_csv(syn_events, 0, 90 * DAY, 5, 5))
    syn_mdc3 = [float(fmt(mdc(syn, 3, x))) for x in syn[0]]
    (GOLDEN / "synthetic200_hist_mdc3.csv").write_text(hist_csv(syn_mdc3, SYNTHETIC_EDGES))
    # values files for the hist goldens, in measure-report layout
    for name, vals, nodes, metric in (("fig1_mdc2.csv", fig1_mdc2, fig1[0], "mdc2"),
                                      ("synthetic200_mdc3.csv", syn_mdc3, syn[0], "mdc3")):
        with open(DATA / name, "w") as f:
            f.write("measure,alpha,node,value\n")
            for x, v in zip(nodes, vals):
                f.write(f"{metric},,{x},{fmt(v)}\n")


if __name__ == "__main__":
    main()
