"""Command-line front end: ``combrep dim|char|decompose|verify``.

Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from .diagram import brauer_dims, d_2h, tl_character_general, tl_dim
from .glnrep import restrict_gl, tensor_decompose
from .hecke import grpn_data, hecke_roichman_character
from .schur import lr_coeff, lr_table
from .shapes import Partition, hook_content_dim, hook_dim, parse_partition, partitions
from .symgroup import induce_trivial_decompose, kronecker, mn_character, restrict_decompose
from .verify import SUITES, default_bounds, run_suites, workers
from .weyl import build_root_system, weyl_dim

__all__ = ["main", "main_entry", "ResultCache", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Malformed command-line input (exit code 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would print usage and exit 2 itself
        raise UsageError(message)


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------


class ResultCache:
    """Content-addressed store: SHA-256 of the canonical request -> result JSON."""

    def __init__(self, directory: str | os.PathLike | None):
        self.directory = Path(directory) if directory is not None else None

    @staticmethod
    def default_dir() -> Path:
        env = os.environ.get("COMBREP_CACHE_DIR")
        return Path(env) if env else Path.home() / ".cache" / "combrep"

    @staticmethod
    def key(request: dict) -> str:
        blob = json.dumps({"version": __version__, "request": request}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, request: dict) -> dict | None:
        if self.directory is None:
            return None
        path = self.directory / f"{self.key(request)}.json"
        try:
            return json.loads(path.read_text())
        except (OSError, ValueError):
            return None

    def put(self, request: dict, result: dict) -> None:
        if self.directory is None:
            return
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(result, fh)
            os.replace(tmp, self.directory / f"{self.key(request)}.json")
        except OSError:
            pass  # the cache is an optimization only


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _require(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} {args.target}: missing {', '.join(missing)}")


def _nonneg(name: str, value: int) -> int:
    if value < 0:
        raise UsageError(f"--{name} must be nonnegative")
    return value


def _plist(lam) -> list[int]:
    return [int(v) for v in lam]


def _pstr(lam) -> str:
    return "(" + ",".join(str(v) for v in lam) + ")"


# ---------------------------------------------------------------------------
# commands; each returns (request, result) with JSON-native values
# ---------------------------------------------------------------------------


def cmd_dim(args) -> tuple[dict, dict]:
    t = args.target
    if t == "sn":
        if args.shape is not None:
            lam = _partition(args.shape)
            req = {"command": "dim", "target": t, "shape": _plist(lam)}
            return req, {"value": hook_dim(lam)}
        _require(args, "n")
        n = _nonneg("n", args.n)
        req = {"command": "dim", "target": t, "n": n}
        rows = [[str(lam), hook_dim(lam)] for lam in partitions(n)]
        return req, {"columns": ["lambda", "dim"], "rows": rows}
    if t == "gl":
        _require(args, "n")
        n = _nonneg("n", args.n)
        if args.shape is not None:
            lam = _partition(args.shape)
            req = {"command": "dim", "target": t, "shape": _plist(lam), "n": n}
            return req, {"value": hook_content_dim(lam, n)}
        _require(args, "size")
        size = _nonneg("size", args.size)
        req = {"command": "dim", "target": t, "n": n, "size": size}
        rows = [[str(lam), hook_content_dim(lam, n)] for lam in partitions(size) if len(lam) <= n]
        return req, {"columns": ["lambda", "dim"], "rows": rows}
    if t == "grpn":
        _require(args, "r", "n")
        p = args.p if args.p is not None else 1
        req = {"command": "dim", "target": t, "r": args.r, "p": p, "n": args.n}
        data = grpn_data(args.r, p, args.n)
        result = {"order": data["order"]}
        if "dims" in data:
            result["irrep_count"] = data["irrep_count"]
            result["columns"] = ["index", "dim"]
            result["rows"] = [[str(ix), d] for ix, d in data["dims"]]
        return req, result
    if t == "weyl":
        _require(args, "type", "rank", "labels")
        labels = [int(v) for v in args.labels.split(",")] if args.labels.strip() else []
        rs = build_root_system(args.type, args.rank)
        req = {"command": "dim", "target": t, "type": rs.type, "rank": rs.rank, "labels": labels}
        return req, {"value": weyl_dim(rs, rs.weight(labels))}
    if t == "brauer":
        _require(args, "k")
        k = _nonneg("k", args.k)
        req = {"command": "dim", "target": t, "k": k}
        rows = [[str(lam), d] for lam, d in brauer_dims(k).items()]
        return req, {"columns": ["lambda", "dim"], "rows": rows,
                     "total": sum(d * d for _, d in rows)}
    if t == "tl":
        _require(args, "k")
        k = _nonneg("k", args.k)
        if args.l is not None:
            req = {"command": "dim", "target": t, "k": k, "l": args.l}
            return req, {"value": tl_dim(k, args.l)}
        req = {"command": "dim", "target": t, "k": k}
        rows = [[str(Partition((k - l, l))), tl_dim(k, l)] for l in range(k // 2 + 1)]
        return req, {"columns": ["lambda", "dim"], "rows": rows}
    raise UsageError(f"unknown dim target {t!r}")


def cmd_char(args) -> tuple[dict, dict]:
    t = args.target
    if t in ("sn", "hecke"):
        _require(args, "n")
        n = _nonneg("n", args.n)
        parts = partitions(n)
        req = {"command": "char", "target": t, "n": n}
        if t == "sn":
            rows = [[str(lam)] + [mn_character(lam, mu) for mu in parts] for lam in parts]
        else:
            rows = [[str(lam)] + [str(hecke_roichman_character(lam, mu)) for mu in parts]
                    for lam in parts]
        return req, {"columns": ["lambda"] + [str(mu) for mu in parts], "rows": rows}
    if t == "tl":
        _require(args, "k")
        k = _nonneg("k", args.k)
        req = {"command": "char", "target": t, "k": k}
        hs = range(k // 2 + 1)
        rows = []
        for ell in range(k // 2 + 1):
            lam = Partition((k - ell, ell))
            rows.append([str(lam)] + [str(tl_character_general(d_2h(k, h), ell)) for h in hs])
        return req, {"columns": ["lambda"] + [f"d{2 * h}" for h in hs], "rows": rows}
    raise UsageError(f"unknown char target {t!r}")


def _expansion(pairs) -> dict:
    rows = [[_pstr(lam), c] for lam, c in pairs]
    return {"columns": ["lambda", "mult"], "rows": rows,
            "text": ",".join(f"{a}:{c}" for a, c in rows)}


def cmd_decompose(args) -> tuple[dict, dict]:
    kind = args.target
    if kind == "induce":
        _require(args, "mu")
        mu = _partition(args.mu)
        req = {"command": "decompose", "target": kind, "mu": _plist(mu)}
        return req, _expansion(sorted(induce_trivial_decompose(mu).items(), reverse=True))
    if kind in ("tensor", "lr"):
        _require(args, "mu", "nu")
        mu, nu = _partition(args.mu), _partition(args.nu)
        if kind == "lr" and args.la is not None:
            lam = _partition(args.la)
            req = {"command": "decompose", "target": kind, "la": _plist(lam),
                   "mu": _plist(mu), "nu": _plist(nu)}
            if not lam.contains(mu) or lam.size != mu.size + nu.size:
                return req, {"value": 0}
            return req, {"value": lr_coeff(lam, mu, nu)}
        req = {"command": "decompose", "target": kind, "mu": _plist(mu), "nu": _plist(nu)}
        if args.n is not None:
            req["n"] = args.n
        table = tensor_decompose(mu, nu, args.n) if kind == "tensor" else lr_table(mu, nu)
        return req, _expansion(table.sorted_items())
    if kind == "kronecker":
        _require(args, "mu", "nu")
        mu, nu = _partition(args.mu), _partition(args.nu)
        if mu.size != nu.size:
            raise UsageError("--mu and --nu must have the same size")
        req = {"command": "decompose", "target": kind, "mu": _plist(mu), "nu": _plist(nu)}
        if args.la is not None:
            lam = _partition(args.la)
            if lam.size != mu.size:
                raise UsageError("--la must have the same size as --mu")
            req["la"] = _plist(lam)
            return req, {"value": kronecker(mu, nu, lam)}
        pairs = [(lam, kronecker(mu, nu, lam)) for lam in partitions(mu.size)]
        return req, _expansion([(lam, c) for lam, c in pairs if c])
    if kind == "restrict":
        _require(args, "la", "k", "l")
        lam = _partition(args.la)
        group = args.group or "sn"
        req = {"command": "decompose", "target": kind, "group": group, "la": _plist(lam),
               "k": args.k, "l": args.l}
        if group == "sn":
            table = restrict_decompose(lam, args.k, args.l)
        else:
            table = restrict_gl(lam, args.k, args.l)
        rows = [[f"{_pstr(mu)}x{_pstr(nu)}", c] for (mu, nu), c in
                sorted(table.items(), key=lambda kv: (tuple(kv[0][0]), tuple(kv[0][1])), reverse=True)]
        return req, {"columns": ["mu x nu", "mult"], "rows": rows,
                     "text": ",".join(f"{a}:{c}" for a, c in rows)}
    raise UsageError(f"unknown decomposition {kind!r}")


def cmd_verify(args) -> tuple[dict, dict, bool]:
    suite = args.target
    names = [s for s in SUITES] if suite == "all" else [suite]
    bounds = default_bounds(args.quick)
    jobs = []
    for name in names:
        b = bounds[name]
        if name == "diagram" and args.kmax is not None:
            b = args.kmax
        elif name != "diagram" and args.nmax is not None:
            b = args.nmax
        jobs.append((name, _nonneg("nmax/kmax", b)))
    req = {"command": "verify", "target": suite, "bounds": dict(jobs), "quick": bool(args.quick)}
    reports = run_suites(jobs)
    ok = all(r.passed for r in reports)
    rows = []
    for r in reports:
        for c in r.checks:
            rows.append([r.suite, c.id, "pass" if c.passed else "fail",
                         json.dumps(c.expected), json.dumps(c.actual)])
    result = {"pass": ok, "suites": [r.to_json(timing=False) for r in reports],
              "columns": ["suite", "check", "status", "expected", "actual"], "rows": rows}
    return req, result, ok


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _render_text(result: dict) -> str:
    if "value" in result:
        return f"{result['value']}\n"
    if "text" in result:
        return result["text"] + "\n"
    if "suites" in result:
        lines = []
        for s in result["suites"]:
            npass = sum(1 for c in s["checks"] if c["status"] == "pass")
            lines.append(f"{s['suite']}: {'PASS' if s['pass'] else 'FAIL'} "
                         f"({npass}/{len(s['checks'])} checks)")
            for c in s["checks"]:
                if c["status"] != "pass":
                    lines.append(f"  FAIL {c['id']}: expected {json.dumps(c['expected'])}, "
                                 f"got {json.dumps(c['actual'])}")
        lines.append("PASS" if result["pass"] else "FAIL")
        return "\n".join(lines) + "\n"
    out = []
    if "order" in result:
        out.append(f"order {result['order']}")
    if "rows" in result:
        table = [result["columns"]] + [[str(v) for v in row] for row in result["rows"]]
        widths = [max(len(str(r[i])) for r in table) for i in range(len(table[0]))]
        for row in table:
            out.append("  ".join(str(v).rjust(w) for v, w in zip(row, widths)).rstrip())
    if "total" in result:
        out.append(f"sum of squares {result['total']}")
    return "\n".join(out) + "\n"


def _render_csv(result: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    if "rows" in result:
        writer.writerow(result["columns"])
        writer.writerows(result["rows"])
    else:
        writer.writerow(["value"])
        writer.writerow([result["value"]])
    return buf.getvalue()


def _write(path: str, text: str, stdout) -> None:
    if path == "-":
        stdout.write(text)
    else:
        Path(path).write_text(text, newline="")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the JSON document to PATH ('-' for stdout)")
    common.add_argument("--csv", metavar="PATH", help="write the table as CSV to PATH ('-' for stdout)")
    common.add_argument("--cache-dir", metavar="PATH", help="result cache directory")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the cache")
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 so repeated runs are byte-identical")

    parser = _Parser(prog="combrep", description="Exact tableaux, characters and diagram algebras.")
    parser.add_argument("--version", action="version", version=f"combrep {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", parents=[common], help="dimensions of irreducibles")
    p.add_argument("target", choices=["sn", "gl", "grpn", "weyl", "brauer", "tl"])
    p.add_argument("--shape")
    p.add_argument("--n", type=int)
    p.add_argument("--size", type=int, help="with 'gl': all shapes of this size")
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--type", help="A, B, C or D")
    p.add_argument("--rank", type=int)
    p.add_argument("--labels", help="Dynkin labels, comma separated")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)

    p = sub.add_parser("char", parents=[common], help="character tables")
    p.add_argument("target", choices=["sn", "hecke", "tl"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("decompose", parents=[common], help="multiplicities")
    p.add_argument("target", choices=["restrict", "induce", "tensor", "kronecker", "lr"])
    p.add_argument("--mu")
    p.add_argument("--nu")
    p.add_argument("--la")
    p.add_argument("--n", type=int, help="with 'tensor': GL(n), dropping longer shapes")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--group", choices=["sn", "gl"], help="with 'restrict' (default sn)")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("target", choices=["all"] + list(SUITES))
    p.add_argument("--nmax", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--quick", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"combrep: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    start = time.perf_counter()
    ok = True
    try:
        workers()
        if args.command == "verify":
            request, result, ok = cmd_verify(args)
        else:
            handler = {"dim": cmd_dim, "char": cmd_char, "decompose": cmd_decompose}[args.command]
            cache = ResultCache(None if args.no_cache else (args.cache_dir or ResultCache.default_dir()))
            # the request is computed cheaply first only for keyed lookups
            request, result = _cached(handler, args, cache)
    except UsageError as exc:
        stderr.write(f"combrep: error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        stderr.write(f"combrep: error: {exc}\n")
        return EXIT_USAGE
    elapsed = 0 if args.no_timing else int((time.perf_counter() - start) * 1000)
    doc = {"request": request, "result": result,
           "meta": {"version": __version__, "elapsed_ms": elapsed}}
    text = _render_text(result)
    try:
        if args.json:
            _write(args.json, json.dumps(doc, indent=2) + "\n", stdout)
        if args.csv:
            _write(args.csv, _render_csv(result), stdout)
    except OSError as exc:
        stderr.write(f"combrep: error: {exc}\n")
        return EXIT_USAGE
    if args.json != "-" and args.csv != "-":
        stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def _cached(handler, args, cache: ResultCache) -> tuple[dict, dict]:
    key_request = {k: v for k, v in sorted(vars(args).items())
                   if k not in ("json", "csv", "cache_dir", "no_cache", "no_timing")}
    hit = cache.get(key_request)
    if hit is not None:
        return hit["request"], hit["result"]
    request, result = handler(args)
    # normalize through JSON so fresh and cached results are identical objects
    request, result = json.loads(json.dumps(request)), json.loads(json.dumps(result))
    cache.put(key_request, {"request": request, "result": result})
    return request, result


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())


def main_entry() -> None:
    sys.exit(main())
