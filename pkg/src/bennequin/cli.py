"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a resource cap
was hit.  In JSON mode every error is reported as
``{"error": {"reason": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .bounds import bennequin_report, verify_mfw, verify_support
from .corpus import CHECKS, bundled_corpus_path, corpus_run
from .diagram import BraidWord, braid_to_diagram, parse_braid, parse_link, seifert_stats
from .errors import InputError, ResourceCapError
from .homfly import homfly, mfw_degrees, sln_state_sum, sln_vs_homfly_check
from .labeling import enumerate_labelings, split
from .moy import moy, support_check, verify_composition
from .resolution import NAMED_GRAPHS, ResolvedGraph, parse_graph, resolve_all

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    text: str | None = None
    subcommand: str | None = None
    n: int = 2
    m: int = 1
    format: str = "json"
    max_crossings: int = 20
    max_skein: int = 16
    max_dim: int = 4096
    resolution: int = 0
    corpus: str | None = None
    checks: tuple[str, ...] = CHECKS
    extra: dict = field(default_factory=dict)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_input(arg: str | None, stdin=None) -> str:
    if arg is None or arg == "-":
        return (stdin or sys.stdin).read()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _braid(text: str) -> BraidWord:
    link = parse_link(text)
    if not isinstance(link, BraidWord):
        raise InputError("this command needs a braid word '<strands>: <letters>'")
    return link


def _graph(cfg: RunConfig) -> ResolvedGraph:
    text = cfg.text.strip()
    if text in NAMED_GRAPHS or text.startswith("graph"):
        return parse_graph(text)
    b = parse_braid(text)
    resolutions = resolve_all(b, cfg.max_crossings)
    if not 0 <= cfg.resolution < len(resolutions):
        raise InputError(f"resolution index {cfg.resolution} out of range 0..{len(resolutions) - 1}")
    return resolutions[cfg.resolution].graph


def _link(text: str):
    link = parse_link(text)
    return braid_to_diagram(link) if isinstance(link, BraidWord) else link


def _dispatch(cfg: RunConfig) -> tuple[int, object]:
    """Return (exit code, JSON-able payload or preformatted text)."""
    cmd = cfg.command
    if cmd == "stats":
        return EXIT_OK, seifert_stats(_link(cfg.text)).to_json()
    if cmd == "resolve":
        b = _braid(cfg.text)
        return EXIT_OK, {"braid": str(b), "resolutions": [r.to_json() for r in resolve_all(b, cfg.max_crossings)]}
    if cmd == "labelings":
        g = _graph(cfg)
        labs = enumerate_labelings(g)
        return EXIT_OK, {
            "graph": g.to_json(),
            "labelings": [
                {"labels": f.to_json(), "split": split(g, f).to_json()} for f in labs
            ],
        }
    if cmd == "moy":
        g = _graph(cfg)
        rep = support_check(g, cfg.n, cfg.max_dim)
        out = {"moy": moy(g, cfg.n, cfg.max_dim).to_json(), "n": cfg.n}
        out.update(rep.to_json())
        return EXIT_OK, out
    if cmd == "homfly":
        d = _link(cfg.text)
        out = {"homfly": homfly(d, cfg.max_skein).to_json(), "mfw": mfw_degrees(d, cfg.max_skein).to_json()}
        return EXIT_OK, out
    if cmd == "sln":
        b = _braid(cfg.text)
        poly = sln_state_sum(b, cfg.n, max_crossings=cfg.max_crossings, max_dim=cfg.max_dim)
        out = {"sln": {"n": cfg.n, "poly": poly.to_json()}}
        if len(b.letters) <= cfg.max_skein:
            d = braid_to_diagram(b)
            out["homfly"] = homfly(d, cfg.max_skein).to_json()
            out["mfw"] = mfw_degrees(d, cfg.max_skein).to_json()
        return EXIT_OK, out
    if cmd == "bounds":
        rep = bennequin_report(seifert_stats(_link(cfg.text)), cfg.n)
        if cfg.format == "text":
            return EXIT_OK, rep.table()
        return EXIT_OK, rep.to_json()
    if cmd == "verify":
        return _verify(cfg)
    if cmd == "corpus":
        if cfg.corpus:
            with open(cfg.corpus, encoding="utf-8") as fh:
                text = fh.read()
        elif cfg.text is not None:
            text = cfg.text
        else:
            text = bundled_corpus_path().read_text(encoding="utf-8")
        caps = {"max_crossings": cfg.max_crossings, "max_skein": cfg.max_skein, "max_dim": cfg.max_dim}
        res = corpus_run(text, cfg.checks, cfg.n, caps)
        return res.exit_code, (res.table() if cfg.format == "text" else res.to_json())
    raise InputError(f"unknown command {cmd!r}")


def _verify(cfg: RunConfig) -> tuple[int, object]:
    kind = cfg.subcommand
    if kind == "composition":
        rep = verify_composition(_graph(cfg), cfg.m, cfg.n, cfg.max_dim)
        return (EXIT_OK if rep.holds else EXIT_FAIL), rep.to_json()
    if kind == "mfw":
        d = _link(cfg.text)
        rep = mfw_degrees(d, cfg.max_skein)
        ok = verify_mfw(d, cfg.max_skein)
        out = rep.to_json()
        out["holds"] = ok
        return (EXIT_OK if ok else EXIT_FAIL), out
    if kind == "support":
        rep = verify_support(_braid(cfg.text), cfg.n, cfg.max_crossings, cfg.max_dim)
        return (EXIT_OK if rep.holds else EXIT_FAIL), rep.to_json()
    if kind == "sln":
        rep = sln_vs_homfly_check(_braid(cfg.text), cfg.n, max_crossings=cfg.max_skein, max_dim=cfg.max_dim)
        return (EXIT_OK if rep.holds else EXIT_FAIL), rep.to_json()
    raise InputError(f"unknown verification {kind!r}")


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a configuration; returns the exit code and the serialized output."""
    try:
        code, payload = _dispatch(cfg)
    except InputError as exc:
        code, payload = EXIT_INPUT, {"error": {"reason": "input_error", "message": str(exc)}}
    except ResourceCapError as exc:
        code, payload = EXIT_CAP, {"error": {"reason": "resource_cap", "message": str(exc)}}
    except ValueError as exc:
        code, payload = EXIT_INPUT, {"error": {"reason": "input_error", "message": str(exc)}}
    if isinstance(payload, str):
        return code, payload + "\n"
    if cfg.format == "text" and "error" in payload:
        return code, f"error ({payload['error']['reason']}): {payload['error']['message']}\n"
    return code, _dump(payload) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank n of sl(n) (default 2)")
    common.add_argument("--m", type=int, default=1, help="second rank for composition checks")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-crossings", type=int, default=20, help="cap on resolved crossings")
    common.add_argument("--max-skein", type=int, default=16, help="cap on skein-recursion crossings")
    common.add_argument("--max-dim", type=int, default=4096, help="cap on n^strands")
    common.add_argument("--resolution", type=int, default=0, help="resolution index for braid inputs")

    p = argparse.ArgumentParser(prog="bennequin", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    helps = {
        "stats": "Seifert statistics of a braid closure or diagram",
        "resolve": "all resolutions of a braid word",
        "labelings": "labelings and splittings of a graph",
        "moy": "graded dimension of a graph",
        "homfly": "HOMFLY polynomial",
        "sln": "sl(n) polynomial by the resolution state sum",
        "bounds": "Bennequin-type bound report",
    }
    for name, h in helps.items():
        sp = sub.add_parser(name, parents=[common], help=h)
        sp.add_argument("input", nargs="?", help="inline text, file path, or '-' for stdin")
    v = sub.add_parser("verify", help="run a verifier")
    v.add_argument("check", choices=("composition", "mfw", "support", "sln"))
    v.add_argument("input", nargs="?")
    for action in common._actions:
        v._add_action(action)
    c = sub.add_parser("corpus", parents=[common], help="batch-verify a file of braid words")
    c.add_argument("--corpus", help="corpus file (default: bundled 3-strand, 5-letter corpus)")
    c.add_argument("--checks", default=",".join(CHECKS), help="comma-separated subset of mfw,support,sln")
    return p


def main(argv: list[str] | None = None, stdin=None, stdout=None) -> int:
    args = _build_parser().parse_args(argv)
    stdout = stdout or sys.stdout
    cfg = RunConfig(
        command=args.command,
        subcommand=getattr(args, "check", None),
        n=args.n,
        m=args.m,
        format=args.format,
        max_crossings=args.max_crossings,
        max_skein=args.max_skein,
        max_dim=args.max_dim,
        resolution=args.resolution,
    )
    for cap in (cfg.max_crossings, cfg.max_skein, cfg.max_dim):
        if cap <= 0:
            stdout.write(_dump({"error": {"reason": "input_error", "message": "caps must be positive"}}) + "\n")
            return EXIT_INPUT
    if args.command == "corpus":
        cfg.corpus = args.corpus
        cfg.checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    else:
        cfg.text = _read_input(args.input, stdin)
    code, out = run(cfg)
    stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
