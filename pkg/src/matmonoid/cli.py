"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad usage, 3 a resource cap or
tier limit was hit.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .boolmat import BoolMat

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
CACHE_ENV = "MATMONOID_CACHE"

# Published values used by ``reproduce``.
TABLE_RANKS = {
    "full": {1: 2, 2: 3, 3: 5, 4: 7, 5: 13, 6: 68, 7: 2142},
    "reflexive": {1: 1, 2: 2, 3: 9, 4: 39, 5: 1415},
    "hall": {1: 1, 2: 2, 3: 4, 4: 6, 5: 12, 6: 67, 7: 2141},
    "ut": {2: 4, 3: 7, 4: 11, 5: 16, 6: 22, 7: 29, 8: 37, 9: 45},
}
TABLE_LCLASSES = {1: 2, 2: 7, 3: 55, 4: 1324, 5: 120633}
TABLE_BREEN = {
    "B": {1: 2, 2: 4, 3: 13, 4: 146, 5: 7549},
    "TB": {1: 2, 2: 3, 3: 5, 4: 12, 5: 141, 6: 15020},
    "phiTB": {1: 2, 2: 3, 3: 5, 4: 10, 5: 32, 6: 394},
}
TABLE_X = {3: 91, 4: 588, 5: 8194}

# Largest n run without --long, per computation.
FAST_TIER = {"full": 5, "reflexive": 4, "hall": 5, "ut": 9, "lclasses": 4, "B": 5, "TB": 5, "phiTB": 5, "X": 5}
LONG_TIER = {"full": 8, "reflexive": 5, "hall": 8, "ut": 9, "lclasses": 5, "B": 5, "TB": 7, "phiTB": 7, "X": 5}


class TierExceeded(Exception):
    pass


# -- cache and manifest -----------------------------------------------------


def _digest(lines: list[str]) -> str:
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()


@dataclass
class ResultCache:
    """Sorted bit-string files with a header holding the count and checksum."""

    directory: Path | None
    hits: int = 0

    @classmethod
    def from_args(cls, path: str | None) -> "ResultCache":
        path = path or os.environ.get(CACHE_ENV)
        return cls(Path(path) if path else None)

    def _path(self, computation: str, n: int, settings: dict) -> Path:
        tag = hashlib.sha256(json.dumps(settings, sort_keys=True).encode()).hexdigest()[:12]
        return self.directory / f"{computation}-n{n}-{tag}.txt"

    def load(self, computation: str, n: int, settings: dict) -> list[BoolMat] | None:
        if self.directory is None:
            return None
        path = self._path(computation, n, settings)
        if not path.exists():
            return None
        header: dict[str, str] = {}
        body = []
        for line in path.read_text().splitlines():
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                header[key.strip()] = value.strip()
            elif line.strip():
                body.append(line.strip())
        if header.get("count") != str(len(body)) or header.get("sha256") != _digest(body):
            return None
        self.hits += 1
        return [BoolMat.from_bitstring(s) for s in body]

    def store(self, computation: str, n: int, settings: dict, mats: list[BoolMat]) -> None:
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        body = sorted(M.to_bitstring() for M in mats)
        head = [
            f"# computation={computation}",
            f"# n={n}",
            f"# settings={json.dumps(settings, sort_keys=True)}",
            f"# count={len(body)}",
            f"# sha256={_digest(body)}",
        ]
        self._path(computation, n, settings).write_text("\n".join(head + body) + "\n")


@dataclass
class RunManifest:
    command: str
    parameters: dict
    started: float = field(default_factory=time.time)
    finished: float | None = None
    cache_hits: int = 0
    digest: str | None = None

    def finish(self, result, cache: ResultCache | None = None) -> "RunManifest":
        self.finished = time.time()
        if cache is not None:
            self.cache_hits = cache.hits
        payload = json.dumps(
            {"command": self.command, "parameters": self.parameters, "result": result},
            sort_keys=True,
            default=str,
        )
        self.digest = hashlib.sha256(payload.encode()).hexdigest()
        return self

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "started": self.started,
            "finished": self.finished,
            "cache_hits": self.cache_hits,
            "digest": self.digest,
        }


# -- helpers ----------------------------------------------------------------


def read_matrices(path: str) -> list[BoolMat]:
    """One bit string per line; blank lines and ``#`` comments are skipped."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(BoolMat.from_bitstring(line.replace(" ", "")))
    return out


def _tier(kind: str, n: int, long: bool) -> None:
    limit = LONG_TIER[kind] if long else FAST_TIER[kind]
    if n > limit:
        hint = "" if long else " (pass --long for the slow tier)"
        raise TierExceeded(f"{kind} at n={n} is beyond the supported tier{hint}")


def _primes(n: int, args, cache: ResultCache, method: str | None = None) -> list[BoolMat]:
    from .primes import extend_prime, prime_representatives

    method = method or getattr(args, "filter", None) or "rows"
    settings = {"filter": method, "prefilter": getattr(args, "prefilter", 0)}
    cached = cache.load("primes", n, settings)
    if cached is not None:
        return cached
    known = []
    if settings["prefilter"] and n > 3:
        known = [extend_prime(P) for P in _primes(n - 1, args, cache, method)]
    primes = prime_representatives(
        n, method=method, prefilter_with=known, keep=settings["prefilter"] or 13,
        workers=max(1, args.threads),
    )
    cache.store("primes", n, settings, primes)
    return primes


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- subcommands ------------------------------------------------------------


def cmd_genset(args, cache: ResultCache) -> tuple[int, dict]:
    from .gensets import GenSetReport, generators_for

    if args.n < 1:
        raise ValueError("--n must be positive")
    if args.monoid in ("full", "hall") and args.n >= 3:
        primes = _primes(args.n, args, cache)
        report = generators_for("full", args.n, primes=primes)
        if args.monoid == "hall":
            from .gensets import F

            report = GenSetReport("hall", args.n, [g for g in report.generators if g != F(args.n)])
    else:
        report = generators_for(args.monoid, args.n)
    if args.certify:
        report.certify(irredundancy=args.n <= 4)
    out = report.to_json()
    text = "\n".join([f"{args.monoid} n={args.n} rank={report.rank}"] + out["generators"])
    if report.certified:
        text += "\ncertified: " + json.dumps(report.certified, sort_keys=True)
    _emit(args, out, text)
    ok = all(v for k, v in report.certified.items() if k in ("generates", "irredundant"))
    return (EXIT_OK if ok else EXIT_FAIL), out


def _row(label: str, n: int, got, want) -> dict:
    return {"quantity": label, "n": n, "computed": got, "expected": want, "pass": got == want}


def reproduce_table(table: int, max_n: int, args, cache: ResultCache) -> list[dict]:
    from .breen import canonical_superset, canonical_trim_breen, enumerate_breen, enumerate_trim_breen
    from .gensets import reflexive_generators, ut_generators
    from .monoid import count_lclasses
    from .primes import filter_by_row_spaces

    rows = []
    if table == 1:
        for n in range(1, max_n + 1):
            if n in TABLE_RANKS["full"] and n <= (LONG_TIER if args.long else FAST_TIER)["full"]:
                rank = 3 if n == 2 else 2 if n == 1 else 4 + len(_primes(n, args, cache))
                rows.append(_row("d(M_n(B))", n, rank, TABLE_RANKS["full"][n]))
                hall = {1: 1, 2: 2}.get(n, rank - 1)
                rows.append(_row("d(M_n^S(B))", n, hall, TABLE_RANKS["hall"][n]))
            if n in TABLE_RANKS["reflexive"] and n <= (LONG_TIER if args.long else FAST_TIER)["reflexive"]:
                rows.append(_row("d(M_n^id(B))", n, reflexive_generators(n).rank, TABLE_RANKS["reflexive"][n]))
            if n in TABLE_RANKS["ut"]:
                rows.append(_row("d(UT_n(B))", n, ut_generators(n).rank, TABLE_RANKS["ut"][n]))
    elif table == 2:
        for n in range(1, max_n + 1):
            _tier("lclasses", n, args.long)
            rows.append(_row("|M_n(B)/L|", n, count_lclasses(n), TABLE_LCLASSES[n]))
    elif table == 3:
        for n in range(1, max_n + 1):
            if n <= (LONG_TIER if args.long else FAST_TIER)["B"]:
                rows.append(_row("|B_n|", n, sum(1 for _ in enumerate_breen(n)), TABLE_BREEN["B"][n]))
            _tier("TB", n, args.long)
            rows.append(_row("|TB_n|", n, sum(1 for _ in enumerate_trim_breen(n)), TABLE_BREEN["TB"][n]))
            phi = len(canonical_trim_breen(n))
            rows.append(_row("|phi(TB_n)|", n, phi, TABLE_BREEN["phiTB"][n]))
    elif table == 4:
        for n in range(3, max_n + 1):
            _tier("X", n, args.long)
            res = filter_by_row_spaces(canonical_superset(n), with_stats=True)
            rows.append(_row("|X|", n, res.x_size, TABLE_X[n]))
    else:
        raise ValueError("--table must be 1, 2, 3 or 4")
    return rows


def cmd_reproduce(args, cache: ResultCache) -> tuple[int, dict]:
    rows = reproduce_table(args.table, args.max_n, args, cache)
    out = {"table": args.table, "rows": rows}
    lines = [f"{r['quantity']:>14} n={r['n']}: computed {r['computed']}, expected {r['expected']}"
             f" [{'PASS' if r['pass'] else 'FAIL'}]" for r in rows]
    if args.table == 1:
        for n in range(2, min(args.max_n, 9) + 1):
            formula = n * (n + 1) // 2 + 1
            if formula != TABLE_RANKS["ut"][n]:
                note = f"d(UT_n(B)) n={n}: closed form n(n+1)/2+1 = {formula} disagrees with table value {TABLE_RANKS['ut'][n]}"
                out.setdefault("discrepancies", []).append(note)
                lines.append("note: " + note)
    _emit(args, out, "\n".join(lines))
    return (EXIT_OK if all(r["pass"] for r in rows) else EXIT_FAIL), out


def cmd_verify(args, cache: ResultCache) -> tuple[int, dict]:
    from .gensets import GenSetReport

    gens = read_matrices(args.gens)
    if not gens:
        raise ValueError("no generators read")
    report = GenSetReport(args.target, gens[0].n, gens)
    report.certify(cap=args.cap, irredundancy=not args.no_irredundancy)
    out = report.to_json()
    c = report.certified
    text = f"generates={c['generates']} closure={c['closure_size']} target={c['target_size']}"
    if "irredundant" in c:
        text += f" irredundant={c['irredundant']}"
    _emit(args, out, text)
    ok = c["generates"] and c.get("irredundant", True)
    return (EXIT_OK if ok else EXIT_FAIL), out


def cmd_closure(args, cache: ResultCache) -> tuple[int, dict]:
    from .monoid import closure, greens_classes

    gens = read_matrices(args.gens)
    res = closure(gens, size_cap=args.cap, include_identity=args.monoid)
    out: dict = {"size": res.size}
    if args.greens:
        out["class_counts"] = {rel: len(greens_classes(res, rel)) for rel in args.greens}
    text = f"size={res.size}"
    if args.greens:
        text += " " + " ".join(f"{k}={v}" for k, v in out["class_counts"].items())
    _emit(args, out, text)
    return EXIT_OK, out


def cmd_tropical(args, cache: ResultCache) -> tuple[int, dict]:
    from . import tropical as tr
    from .monoid import closure, is_irredundant

    gens = tr.minplus_generators(args.t) if args.flavor == "min" else tr.maxplus_generators(args.t)
    out: dict = {"flavor": args.flavor, "t": args.t, "count": len(gens),
                 "generators": [g.to_text() for g in gens]}
    code = EXIT_OK
    if args.verify:
        size = len(closure(gens, size_cap=args.cap, include_identity=True))
        ok, witness = is_irredundant(gens, size_cap=args.cap)
        target = (args.t + 2) ** 4
        out.update(closure_size=size, target_size=target, irredundant=ok)
        if size != target or not ok:
            code = EXIT_FAIL
    text = "\n".join(out["generators"])
    if args.verify:
        text += f"\nclosure={out['closure_size']} target={out['target_size']} irredundant={out['irredundant']}"
    _emit(args, out, text)
    return code, out


def cmd_zn(args, cache: ResultCache) -> tuple[int, dict]:
    from . import zn
    from .monoid import closure

    out: dict = {"n": args.n, "k": args.k}
    code = EXIT_OK
    lines = []
    if args.relative_rank:
        out["relative_rank"] = zn.relative_rank(args.n)
        lines.append(f"relative_rank={out['relative_rank']}")
    if args.diag:
        text = sys.stdin.read() if args.diag == "-" else Path(args.diag).read_text()
        A = zn.ZnMat.from_text(text, args.n)
        D = zn.standard_diagonal_form(A)
        out.update(diag=list(D.diag), left_unit=[list(r) for r in D.left_unit.rows],
                   right_unit=[list(r) for r in D.right_unit.rows])
        lines += ["diag " + " ".join(map(str, D.diag)), "left", D.left_unit.to_text(),
                  "right", D.right_unit.to_text()]
    if args.verify:
        units = zn.enumerate_units(args.n, args.k)
        xs = zn.xp_generators(args.n, args.k)
        size = len(closure(units + xs, size_cap=args.cap))
        target = args.n ** (args.k * args.k)
        irr = all(len(closure(units + [y for y in xs if y != x], size_cap=args.cap)) < size for x in xs)
        out.update(units=len(units), closure_size=size, target_size=target, irredundant=irr)
        lines.append(f"units={len(units)} closure={size} target={target} irredundant={irr}")
        if size != target or not irr:
            code = EXIT_FAIL
    _emit(args, out, "\n".join(lines))
    return code, out


def cmd_enumerate(args, cache: ResultCache) -> tuple[int, dict]:
    from .breen import enumerate_breen, enumerate_reflexive_breen, enumerate_trim_breen

    gen = {"trim": enumerate_trim_breen, "all": enumerate_breen, "reflexive": enumerate_reflexive_breen}[args.kind]
    mats = list(gen(args.n))
    out = {"kind": args.kind, "n": args.n, "count": len(mats)}
    if not args.count:
        out["matrices"] = [M.to_bitstring() for M in mats]
    _emit(args, out, str(len(mats)) if args.count else "\n".join(out["matrices"]))
    return EXIT_OK, out


def cmd_primes(args, cache: ResultCache) -> tuple[int, dict]:
    primes = _primes(args.n, args, cache)
    out = {"n": args.n, "filter": args.filter, "count": len(primes),
           "primes": [P.to_bitstring() for P in primes]}
    if args.out:
        Path(args.out).write_text(
            f"# n={args.n}\n# count={len(primes)}\n# filter={args.filter}\n# prefilter={args.prefilter}\n"
            + "".join(p + "\n" for p in out["primes"])
        )
    _emit(args, out, "\n".join(out["primes"]))
    return EXIT_OK, out


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # Subcommands repeat the flags with suppressed defaults so either position works.
        g = argparse.ArgumentParser(add_help=False)

        def d(value):
            return argparse.SUPPRESS if suppress else value

        g.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
        g.add_argument("--long", action="store_true", default=d(False), help="allow the slow tier")
        g.add_argument("--threads", type=int, default=d(os.cpu_count() or 1))
        g.add_argument("--cache", default=d(None), help=f"result cache directory (or ${CACHE_ENV})")
        g.add_argument("--seed", type=int, default=d(0))
        return g

    common = global_flags(True)
    p = argparse.ArgumentParser(prog="matmonoid", description="Ranks and generating sets of matrix monoids.",
                                parents=[global_flags(False)])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("genset", parents=[common], help="a minimal generating set")
    s.add_argument("--monoid", required=True, choices=["full", "reflexive", "hall", "ut", "lt", "gossip"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--certify", action="store_true")
    s.add_argument("--filter", choices=["rows", "embeddings"], default="rows")
    s.add_argument("--prefilter", type=int, default=0, help="prefilter with this many extended primes")
    s.set_defaults(func=cmd_genset)

    s = sub.add_parser("reproduce", parents=[common], help="recompute a published table")
    s.add_argument("--table", type=int, required=True, choices=[1, 2, 3, 4])
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--filter", choices=["rows", "embeddings"], default="rows")
    s.add_argument("--prefilter", type=int, default=0)
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("verify", parents=[common], help="check a generating set file")
    s.add_argument("--gens", required=True)
    s.add_argument("--target", required=True, choices=["full", "reflexive", "hall", "ut", "lt", "gossip"])
    s.add_argument("--cap", type=int, default=5 * 10**7)
    s.add_argument("--no-irredundancy", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("closure", parents=[common], help="size and Green's classes of a closure")
    s.add_argument("--gens", required=True)
    s.add_argument("--cap", type=int, default=5 * 10**7)
    s.add_argument("--greens", nargs="*", choices=["L", "R", "J", "H"], default=[])
    s.add_argument("--monoid", action="store_true", help="add the identity")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("tropical", parents=[common], help="2x2 min-plus and max-plus generators")
    s.add_argument("--flavor", required=True, choices=["min", "max"])
    s.add_argument("--t", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--list-gens", action="store_true")
    g.add_argument("--verify", action="store_true")
    s.add_argument("--cap", type=int, default=10**7)
    s.set_defaults(func=cmd_tropical)

    s = sub.add_parser("zn", parents=[common], help="matrices over Z_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--diag", help="file with k rows of k residues ('-' for stdin)")
    s.add_argument("--relative-rank", action="store_true")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--cap", type=int, default=10**7)
    s.set_defaults(func=cmd_zn)

    s = sub.add_parser("enumerate", parents=[common], help="matrices in Breen form")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--kind", choices=["trim", "all", "reflexive"], default="trim")
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("primes", parents=[common], help="prime J-class representatives")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--filter", choices=["rows", "embeddings"], default="rows")
    s.add_argument("--prefilter", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_primes)
    return p


def run(argv: list[str] | None = None) -> tuple[int, dict | None]:
    from .monoid import ClosureCapExceeded

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (EXIT_OK if e.code == 0 else EXIT_USAGE), None
    params = {k: v for k, v in vars(args).items() if k != "func"}
    manifest = RunManifest(args.command, params)
    cache = ResultCache.from_args(args.cache)
    try:
        code, result = args.func(args, cache)
    except (ClosureCapExceeded, TierExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP, None
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE, None
    manifest.finish(result, cache)
    if args.json:
        print(json.dumps({"manifest": manifest.to_json()}, sort_keys=True), file=sys.stderr)
    return code, result


def main(argv: list[str] | None = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
