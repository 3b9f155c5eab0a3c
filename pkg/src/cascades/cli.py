"""Command line front end: ``cascades genus|classify|census``.

Every flag can also be set through an environment variable named
``CASCADES_<FLAG>``, e.g. ``CASCADES_TIMEOUT=30``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .criticality import classify
from .embed import GenusCache, GenusTimeout, euler_genus, set_default_cache
from .graph import GraphError, augment
from .graph_io import ParseError, format_edge_list, read_graphs, to_graph6

EXIT_OK, EXIT_USAGE, EXIT_TIMEOUT, EXIT_VERIFY = 0, 1, 2, 3
ENV_PREFIX = "CASCADES_"


def _env(name: str, default):
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None:
        return default
    if isinstance(default, bool):
        return raw.lower() in ("1", "true", "yes")
    return raw  # argparse runs ``type`` on string defaults


def _positive(kind):
    def conv(s):
        v = kind(s)
        if v <= 0:
            raise argparse.ArgumentTypeError("must be positive")
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cascades", description=__doc__.splitlines()[0])
    p.add_argument("--timeout", type=_positive(float), default=_env("timeout", 300.0),
                   help="seconds per genus computation")
    p.add_argument("--workers", type=_positive(int), default=_env("workers", 1))
    p.add_argument("--cache", default=_env("cache", None),
                   help="directory holding a persistent genus cache")
    p.add_argument("--out", default=_env("out", None), help="JSON report (census: directory)")
    p.add_argument("--verify", choices=("spot", "full"), default=_env("verify", "spot"))
    p.add_argument("--obstructions", default=_env("obstructions", None),
                   help="projective-plane obstruction file for cross-checks")
    sub = p.add_subparsers(dest="cmd", required=True)
    g = sub.add_parser("genus", help="Euler genus (and augmented genus) of each input graph")
    g.add_argument("files", nargs="+")
    g.add_argument("--witness", action="store_true", default=_env("witness", False))
    c = sub.add_parser("classify", help="criticality report and cascade flags")
    c.add_argument("files", nargs="+")
    s = sub.add_parser("census", help="enumerate the cascades of augmented genus 2")
    s.add_argument("--bases-only", action="store_true", default=_env("bases_only", False))
    s.add_argument("--budget", type=_positive(float), default=_env("budget", 3600.0),
                   help="wall clock budget in seconds")
    return p


def _load(files):
    out = []
    for f in files:
        for i, g in enumerate(read_graphs(f)):
            out.append((f"{f}#{i}", g))
    return out


def _emit(args, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text + "\n")


def cmd_genus(args) -> int:
    rows, code = [], EXIT_OK
    for name, g in _load(args.files):
        row = {"input": name, "n": g.n, "m": g.m}
        try:
            res = euler_genus(g, timeout=args.timeout, witness=args.witness)
            row["genus"] = res.genus
            if args.witness and res.witness is not None:
                row["witness"] = res.witness.to_json()
            if g.terminals is not None:
                row["genus_plus"] = euler_genus(augment(g), timeout=args.timeout).genus
        except GenusTimeout:
            row["error"] = "timeout"
            code = EXIT_TIMEOUT
        rows.append(row)
        plus = f"  genus+ {row['genus_plus']}" if "genus_plus" in row else ""
        print(f"{name}: " + (f"genus {row['genus']}{plus}" if "genus" in row else "timeout"))
    _emit(args, {"graphs": rows})
    return code


def cmd_classify(args) -> int:
    rows, code = [], EXIT_OK
    for name, g in _load(args.files):
        try:
            rep = classify(g, timeout=args.timeout)
        except GenusTimeout:
            rows.append({"input": name, "error": "timeout"})
            print(f"{name}: timeout")
            code = EXIT_TIMEOUT
            continue
        data = rep.to_json()
        data["input"] = name
        rows.append(data)
        flags = " ".join(f"{k}={v}" for k, v in sorted(rep.classes.items()))
        print(f"{name}: genus {rep.genus} genus+ {rep.genus_plus} {flags}")
    _emit(args, {"reports": rows})
    return code


def cmd_census(args) -> int:
    from .enumerate import census_s1, derive_planar_c1plus, load_obstructions
    from .minors import is_minor

    res = census_s1(workers=args.workers, timeout=args.timeout, budget=args.budget,
                    bases_only=args.bases_only)
    verified = []
    todo = res.members if args.verify == "full" else res.members[:3]
    for g in todo:
        verified.append(bool(classify(g, timeout=args.timeout).in_S1))
    cross = None
    if args.obstructions:
        planar = derive_planar_c1plus(load_obstructions(args.obstructions))
        cross = {"planar_c1_plus": len(planar),
                 "members_with_planar_c1_plus_minor": sum(
                     any(is_minor(h, g) for h in planar) for g in res.members)}
    members = []
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for i, (g, prov) in enumerate(zip(res.members, res.provenance)):
        entry = {"id": i, "n": g.n, "m": g.m, "graph6": to_graph6(g), "provenance": prov}
        if out:
            (out / f"member_{i:02d}.txt").write_text(format_edge_list(g))
        members.append(entry)
    manifest = {
        "count": len(res.members),
        "complete": res.complete,
        "bases_only": args.bases_only,
        "families": res.family_counts,
        "verification": {"level": args.verify, "checked": len(verified), "passed": sum(verified)},
        "cross_checks": cross,
        "members": members,
    }
    if out:
        (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    print(f"{'family':<30} {'generated':>9} {'unique':>7} {'members':>8}")
    for fam, c in res.family_counts.items():
        print(f"{fam:<30} {c['generated']:>9} {c['unique']:>7} {c['members']:>8}")
    print(f"census: {len(res.members)} graphs" + ("" if res.complete else " (incomplete)"))
    if not res.complete:
        return EXIT_TIMEOUT
    if not all(verified):
        return EXIT_VERIFY
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.cache:
        cdir = Path(args.cache)
        cdir.mkdir(parents=True, exist_ok=True)
        set_default_cache(GenusCache(cdir / "genus.tsv"))
    try:
        return {"genus": cmd_genus, "classify": cmd_classify, "census": cmd_census}[args.cmd](args)
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
