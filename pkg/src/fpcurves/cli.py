"""Command-line surface: seeded constructions, certification, Betti tables.

Subcommands
-----------
points            ideal of k random distinct plane points + Betti table
curve plane       nodal plane curve of genus 0..10 + nodal certificate
curve g11-search  search for a plane decic with two ordinary triple points
curve g12-space   smooth genus-12 degree-13 curve in P^3 + module report
curve g14         genus-14 degree-18 curve in P^6 (optionally certified)
curve g7d14       genus-7 degree-14 curve in P^7 + N_2 verdict
betti             minimal free resolution Betti table of an ideal from a file
tally             factor-degree census of a plane curve along random lines

Results go to stdout (or --output FILE) as JSON or text; retries and timings
are logged to stderr.  Identical command lines produce byte-identical JSON.
Exit codes: 0 success / certified, 2 not found / not certified, 1 usage or
input error.

Ideal file format: first non-blank line `char p vars n`, then one polynomial
per line in the variables x0..x{n-1}; blank lines and `#` comments ignored.
"""

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .arith import SeededRng, is_prime
from .constructions import (
    brill_noether,
    random_curve_genus14,
    random_distinct_plane_points,
    random_genus7_degree14_curve,
    random_nodal_plane_curve,
    random_space_curve_genus12_degree13,
    search_plane_genus11_curve,
)
from .geometry import CertificateReport, RetryExhausted, decomposition_tally
from .groebner import Ideal
from .homology import BettiTable, free_resolution, hilbert_data, satisfies_np
from .ring import Ring

logger = logging.getLogger("fpcurves.cli")

ENV_CHAR = "FPCURVES_CHAR"
ENV_SEED = "FPCURVES_SEED"
DEFAULT_CHAR = 10007
DEFAULT_SEED = 0
MAX_VARS = 16


class CliError(Exception):
    """Usage or input error; message goes to stderr, exit code is 1."""


class NotCertified(Exception):
    """Search exhausted or certificate failed; exit code is 2."""


@dataclass
class JobConfig:
    """Resolved settings shared by the construction commands."""

    char: int
    seed: int
    attempts: int | None
    certify: bool
    fmt: str
    output: str | None

    def __post_init__(self):
        if not is_prime(self.char):
            raise CliError(f"characteristic {self.char} is not prime")
        if self.attempts is not None and self.attempts < 1:
            raise CliError("attempts must be at least 1")

    @property
    def rng(self):
        return SeededRng(self.seed)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(f"{self.prog}: {message}")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _env_int(name):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"{name} must be an integer, got {raw!r}")


def _config(args, default_char=DEFAULT_CHAR):
    char = getattr(args, "char", None)
    if char is None:
        char = _env_int(ENV_CHAR)
    if char is None:
        char = default_char
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = _env_int(ENV_SEED)
    if seed is None:
        seed = DEFAULT_SEED
    return JobConfig(
        char=char,
        seed=seed,
        attempts=getattr(args, "attempts", None),
        certify=getattr(args, "certify", False),
        fmt=args.format,
        output=args.output,
    )


# ---------------------------------------------------------------------------
# Ideal files


def _is_homogeneous(poly):
    degs = {poly.ring.wdeg(e) for _, e in poly.terms}
    return len(degs) <= 1


def read_ideal_file(path):
    """Parse `char p vars n` + one polynomial per line into an Ideal."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}")
    ring = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ring is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "char" or parts[2] != "vars":
                raise CliError(f"{path}:{lineno}: expected header 'char p vars n'")
            try:
                p, n = int(parts[1]), int(parts[3])
            except ValueError:
                raise CliError(f"{path}:{lineno}: p and n must be integers")
            if not is_prime(p):
                raise CliError(f"{path}:{lineno}: characteristic {p} is not prime")
            if not 1 <= n <= MAX_VARS:
                raise CliError(f"{path}:{lineno}: vars must be between 1 and {MAX_VARS}")
            ring = Ring(p, n)
            continue
        try:
            poly = ring.parse(line)
        except ValueError as exc:
            raise CliError(f"{path}:{lineno}: {exc}")
        if not poly.is_zero and not _is_homogeneous(poly):
            raise CliError(f"{path}:{lineno}: polynomial is not homogeneous")
        polys.append(poly)
    if ring is None:
        raise CliError(f"{path}: empty file (expected 'char p vars n' header)")
    gens = tuple(f for f in polys if not f.is_zero)
    if not gens:
        raise CliError(f"{path}: no nonzero generators")
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# Payloads


def _payload(ideal, *, betti=None, report=None, seed=None, attempts=None, genus=None):
    """JSON-shaped result: char/vars/generators plus whatever applies."""
    ring = ideal.ring
    out = {
        "char": ring.p,
        "vars": list(ring.names),
        "generators": [str(g) for g in ideal.gens if not g.is_zero],
    }
    hd = hilbert_data(ideal)
    out["degree"] = hd.degree
    out["dim"] = hd.dimension
    if genus is not None:
        out["genus"] = genus
    elif hd.dimension == 1:
        out["genus"] = hd.genus
    if betti is not None:
        out["betti"] = betti.to_json()
    if report is not None:
        out["certificate"] = report.to_json()["checks"]
    if seed is not None:
        out["seed"] = seed
    if attempts is not None:
        out["attempts"] = attempts
    return out


def _render_text(payload):
    """Human rendering of the JSON payload (the Betti block round-trips)."""
    lines = []
    if "char" in payload:
        lines.append(f"char {payload['char']}  vars {' '.join(payload['vars'])}")
    facts = [
        f"{key} {payload[key]}"
        for key in ("degree", "dim", "genus", "delta", "seed", "attempts", "trials")
        if key in payload
    ]
    if facts:
        lines.append("  ".join(facts))
    gens = payload.get("generators")
    if gens is not None:
        lines.append(f"generators ({len(gens)}):")
        lines.extend(f"  {g}" for g in gens)
    if "betti" in payload:
        lines.append("betti:")
        lines.extend(
            "  " + row for row in BettiTable.from_json(payload["betti"]).render().splitlines()
        )
    if "certificate" in payload:
        checks = payload["certificate"]
        verdict = "pass" if all(c["pass"] for c in checks) else "FAIL"
        lines.append(f"certificate ({len(checks)} checks): {verdict}")
        for c in checks:
            mark = "ok " if c["pass"] else "FAIL"
            lines.append(f"  [{mark}] {c['check']}: expected {json.dumps(c['expected'])}, observed {json.dumps(c['observed'])}")
    if "tally" in payload:
        lines.append("tally (factor degrees: count):")
        for key, count in sorted(payload["tally"].items()):
            lines.append(f"  [{key}]: {count}")
        lines.append(f"with a linear factor: {payload['with_linear_factor']}")
    return "\n".join(lines)


def _emit(payload, fmt, output):
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        text = _render_text(payload)
    text += "\n"
    if output:
        Path(output).write_text(text)
        logger.info("wrote %s", output)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Commands


def _cmd_points(args):
    cfg = _config(args)
    ring = Ring(cfg.char, 3)
    ideal = random_distinct_plane_points(args.count, ring, cfg.rng)
    betti = free_resolution(ideal).betti()
    return _payload(ideal, betti=betti, seed=cfg.seed), cfg


def _cmd_plane(args):
    cfg = _config(args)
    ring = Ring(cfg.char, 3)
    curve, report = random_nodal_plane_curve(
        args.genus, ring, cfg.rng, max_attempts=cfg.attempts or 32
    )
    bn = brill_noether(args.genus, 2)
    payload = _payload(
        curve,
        betti=free_resolution(curve).betti(),
        report=report,
        seed=cfg.seed,
        genus=args.genus,
    )
    payload["delta"] = bn.nodes
    return payload, cfg


def _cmd_g11_search(args):
    cfg = _config(args, default_char=5)
    ring = Ring(cfg.char, 3)
    curve, report, used = search_plane_genus11_curve(
        ring, cfg.rng, attempts=cfg.attempts, jobs=args.jobs
    )
    if curve is None:
        payload = {
            "char": cfg.char,
            "vars": list(ring.names),
            "generators": [],
            "certificate": [],
            "seed": cfg.seed,
            "attempts": used,
        }
        _emit(payload, cfg.fmt, cfg.output)
        raise NotCertified(f"no genus-11 decic found in {used} attempts")
    payload = _payload(
        curve,
        betti=free_resolution(curve).betti(),
        report=report,
        seed=cfg.seed,
        attempts=used,
        genus=11,
    )
    return payload, cfg


def _cmd_g12_space(args):
    cfg = _config(args)
    ring = Ring(cfg.char, 4)
    curve, report = random_space_curve_genus12_degree13(
        ring, cfg.rng, max_attempts=cfg.attempts or 32
    )
    betti = free_resolution(curve).betti()
    return _payload(curve, betti=betti, report=report, seed=cfg.seed), cfg


def _cmd_g14(args):
    cfg = _config(args)
    ring = Ring(cfg.char, 7)
    curve, report = random_curve_genus14(
        ring, cfg.rng, certify=cfg.certify, max_attempts=cfg.attempts or 32
    )
    betti = free_resolution(curve).betti()
    return _payload(curve, betti=betti, report=report, seed=cfg.seed), cfg


def _cmd_g7d14(args):
    cfg = _config(args)
    curve, table = random_genus7_degree14_curve(
        cfg.rng, p=cfg.char, max_attempts=cfg.attempts or 32
    )
    hd = hilbert_data(curve)
    report = CertificateReport("genus-7 degree-14 curve")
    report.add("codimension", 6, hd.codim)
    report.add("degree", 14, hd.degree)
    if hd.dimension == 1:
        report.add("genus", 7, hd.genus)
    report.add("quadrics and cubics with linear syzygies (N_2)", True, satisfies_np(table, 2))
    payload = _payload(curve, betti=table, report=report, seed=cfg.seed, genus=7)
    if not report.passed:
        _emit(payload, cfg.fmt, cfg.output)
        raise NotCertified("genus-7 degree-14 certificate failed")
    return payload, cfg


def _cmd_betti(args):
    ideal = read_ideal_file(args.input)
    betti = free_resolution(ideal).betti()
    payload = _payload(ideal, betti=betti)
    cfg = JobConfig(
        char=ideal.ring.p,
        seed=0,
        attempts=None,
        certify=False,
        fmt=args.format,
        output=args.output,
    )
    return payload, cfg


def _cmd_tally(args):
    ideal = read_ideal_file(args.input)
    seed = args.seed if args.seed is not None else _env_int(ENV_SEED)
    if seed is None:
        seed = DEFAULT_SEED
    try:
        counts = decomposition_tally(ideal, args.trials, SeededRng(seed), jobs=args.jobs)
    except ValueError as exc:
        raise CliError(f"{args.input}: {exc}")
    ring = ideal.ring
    payload = {
        "char": ring.p,
        "vars": list(ring.names),
        "generators": [str(g) for g in ideal.gens if not g.is_zero],
        "seed": seed,
        "trials": args.trials,
        "tally": {",".join(map(str, part)): c for part, c in sorted(counts.items())},
        "with_linear_factor": sum(c for part, c in counts.items() if 1 in part),
    }
    cfg = JobConfig(
        char=ring.p, seed=seed, attempts=None, certify=False, fmt=args.format, output=args.output
    )
    return payload, cfg


# ---------------------------------------------------------------------------
# Argument parsing


def _add_output_opts(parser):
    parser.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format (default json)"
    )
    parser.add_argument("--output", metavar="PATH", help="write the result to PATH instead of stdout")
    parser.add_argument("--quiet", action="store_true", help="only log warnings to stderr")


def _add_seeded_opts(parser, attempts_help):
    parser.add_argument("--char", type=_positive, help=f"field characteristic (default ${ENV_CHAR} or {DEFAULT_CHAR})")
    parser.add_argument("--seed", type=int, help=f"random seed (default ${ENV_SEED} or {DEFAULT_SEED})")
    parser.add_argument("--attempts", type=_positive, help=attempts_help)
    _add_output_opts(parser)


def build_parser():
    parser = _Parser(prog="fpcurves", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    p_points = sub.add_parser("points", help="ideal of random distinct plane points")
    p_points.add_argument("--count", type=_positive, required=True, help="number of points")
    _add_seeded_opts(p_points, "retries for distinctness (default 32)")
    p_points.set_defaults(handler=_cmd_points)

    p_curve = sub.add_parser("curve", help="seeded curve constructions")
    curve_sub = p_curve.add_subparsers(dest="pipeline", metavar="PIPELINE", parser_class=_Parser)

    p_plane = curve_sub.add_parser("plane", help="nodal plane curve of genus 0..10")
    p_plane.add_argument("--genus", type=int, required=True, help="geometric genus (0..10)")
    _add_seeded_opts(p_plane, "construction retries (default 32)")
    p_plane.set_defaults(handler=_cmd_plane)

    p_g11 = curve_sub.add_parser(
        "g11-search", help="search for a genus-11 plane decic (two triple points)"
    )
    _add_seeded_opts(p_g11, "search attempts (default 2*char^4)")
    p_g11.add_argument("--jobs", type=_positive, default=1, help="parallel workers (default 1)")
    p_g11.set_defaults(handler=_cmd_g11_search)

    p_g12 = curve_sub.add_parser("g12-space", help="genus-12 degree-13 space curve")
    _add_seeded_opts(p_g12, "construction retries (default 32)")
    p_g12.set_defaults(handler=_cmd_g12_space)

    p_g14 = curve_sub.add_parser("g14", help="genus-14 degree-18 curve in P^6")
    p_g14.add_argument(
        "--certify", action="store_true", help="run the full smoothness certificate"
    )
    _add_seeded_opts(p_g14, "construction retries (default 32)")
    p_g14.set_defaults(handler=_cmd_g14)

    p_g7 = curve_sub.add_parser("g7d14", help="genus-7 degree-14 curve in P^7")
    _add_seeded_opts(p_g7, "construction retries (default 32)")
    p_g7.set_defaults(handler=_cmd_g7d14)

    p_betti = sub.add_parser("betti", help="Betti table of an ideal read from a file")
    p_betti.add_argument("--input", required=True, metavar="FILE", help="ideal file")
    _add_output_opts(p_betti)
    p_betti.set_defaults(handler=_cmd_betti)

    p_tally = sub.add_parser("tally", help="factor-degree census along random lines")
    p_tally.add_argument("--input", required=True, metavar="FILE", help="plane curve file")
    p_tally.add_argument("--trials", type=_positive, default=1000, help="number of lines (default 1000)")
    p_tally.add_argument("--jobs", type=_positive, default=1, help="parallel workers (default 1)")
    p_tally.add_argument("--seed", type=int, help=f"random seed (default ${ENV_SEED} or {DEFAULT_SEED})")
    _add_output_opts(p_tally)
    p_tally.set_defaults(handler=_cmd_tally)

    return parser


def _run(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_usage(sys.stderr)
        raise CliError("a command is required")
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    start = time.time()
    try:
        payload, cfg = args.handler(args)
    except ValueError as exc:
        raise CliError(str(exc))
    _emit(payload, cfg.fmt, cfg.output)
    logger.info("finished in %.1fs", time.time() - start)
    return 0


def main(argv=None):
    try:
        return _run(argv)
    except CliError as exc:
        print(f"fpcurves: {exc}", file=sys.stderr)
        return 1
    except (NotCertified, RetryExhausted) as exc:
        print(f"fpcurves: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
