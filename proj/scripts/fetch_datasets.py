#!/usr/bin/env python3
"""Fetch or convert the two real networks into simple undirected edge lists.

Usage:
  fetch_datasets.py convert SRC OUT      # GML, Pajek .net or edge list -> edge list
  fetch_datasets.py fetch NAME [--url U] [--dir data/external]

Direction, weights and multi-edges are dropped; self-loops are removed.
Prints N, E and the SHA-256 of the written file.
"""

import argparse
import hashlib
import io
import re
import sys
import urllib.request
import zipfile
from pathlib import Path

DEFAULT_URLS = {
    "powergrid": "http://www-personal.umich.edu/~mejn/netdata/power.zip",
    "celegans": "https://deim.urv.cat/~alexandre.arenas/data/xarxes/celegans_metabolic.zip",
}


def read_pairs(text):
    if re.search(r"^\s*graph\s*\[", text, re.M):
        src = re.findall(r"source\s+(\S+)", text)
        dst = re.findall(r"target\s+(\S+)", text)
        return list(zip(src, dst))
    pairs = []
    section = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith(("#", "%")):
            continue
        if line.startswith("*"):
            section = line.split()[0].lower()
            continue
        if section == "*vertices":
            continue
        fields = line.split()
        if len(fields) >= 2:
            pairs.append((fields[0], fields[1]))
    return pairs


def simplify(pairs):
    seen = set()
    edges = []
    for a, b in pairs:
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return edges


def write(edges, out):
    out.parent.mkdir(parents=True, exist_ok=True)
    body = "".join(f"{a} {b}\n" for a, b in edges)
    out.write_text(body)
    nodes = {n for e in edges for n in e}
    digest = hashlib.sha256(body.encode()).hexdigest()
    print(f"{out}: N={len(nodes)} E={len(edges)} sha256={digest}")


def payload_text(raw, name):
    if raw[:2] == b"PK":
        with zipfile.ZipFile(io.BytesIO(raw)) as z:
            members = [m for m in z.namelist() if re.search(r"\.(gml|net|txt|edges)$", m)]
            if not members:
                sys.exit(f"{name}: archive has no graph file")
            return z.read(members[0]).decode("utf-8", "replace")
    return raw.decode("utf-8", "replace")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)
    c = sub.add_parser("convert")
    c.add_argument("src", type=Path)
    c.add_argument("out", type=Path)
    f = sub.add_parser("fetch")
    f.add_argument("name", choices=sorted(DEFAULT_URLS))
    f.add_argument("--url")
    f.add_argument("--dir", type=Path, default=Path("data/external"))
    args = ap.parse_args()

    if args.cmd == "convert":
        raw = args.src.read_bytes()
        write(simplify(read_pairs(payload_text(raw, args.src.name))), args.out)
    else:
        url = args.url or DEFAULT_URLS[args.name]
        with urllib.request.urlopen(url, timeout=60) as r:
            raw = r.read()
        write(simplify(read_pairs(payload_text(raw, args.name))), args.dir / f"{args.name}.txt")


if __name__ == "__main__":
    main()
