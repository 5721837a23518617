"""Command-line front end: full analysis runs and the elimination benchmark.

`stabtopo analyze SOURCE` resolves a code (builtin name or code file),
runs the whole pipeline, and emits an AnalysisReport as text or JSON.
Exit code 0 means the code is topologically ordered, 2 means it is not
(witnesses are in the report), 1 means the invocation itself failed.

`stabtopo bench-mge` times row reduction on random dense matrices and
fits the growth exponent of time versus row count.
"""

import json
import math
import os
import statistics
import time
from dataclasses import dataclass

import click
import numpy as np

from .codelib import CodeFileError, builtin, format_code, parse_code_file
from .laurent import PolyParseError, poly_format
from .matrixlab import Region, RegionTooSmall, mge
from .oracle import instantiate_torus, torus_gsd, verify_string_endpoints
from .pipeline import DEFAULT_REGION, analyze


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


def _pauli_text(p, w):
    parts = []
    for slot in range(w):
        if p.entries[slot]:
            parts.append("X%d: %s" % (slot, poly_format(p.entries[slot])))
    for slot in range(w):
        if p.entries[w + slot]:
            parts.append("Z%d: %s" % (slot, poly_format(p.entries[w + slot])))
    return "; ".join(parts) if parts else "identity"


def _syndrome_text(s):
    return [poly_format(f) for f in s.entries]


def _dedupe_translates(ops):
    """Keep one representative per translation class, anchored at the
    origin by its lexicographically smallest support monomial."""
    seen = set()
    out = []
    for op in ops:
        sup = set()
        for f in op.entries:
            sup |= f.support()
        if sup:
            a0, b0 = min(sup)
            op = op.shift(-a0, -b0)
        if op not in seen:
            seen.add(op)
            out.append(op)
    return out


@dataclass(frozen=True)
class AnalysisReport:
    """JSON-compatible payload of one analysis run.

    The payload holds only ints, strings, bools, lists, and dicts, so a
    report survives a JSON round trip unchanged and compares by value.
    """

    payload: dict

    def to_json(self):
        return json.dumps(self.payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text):
        return cls(payload=json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, AnalysisReport):
            return NotImplemented
        return self.payload == other.payload

    def to_text(self):
        p = self.payload
        out = []
        c = p["code"]
        out.append(
            "code: %s (d=%d, %d qudits/cell, %d stabilizers)"
            % (c["name"], c["d"], c["qudits"], c["stabilizers"])
        )
        pr = p["parameters"]
        out.append(
            "parameters: kx=%d ky=%d m=%d m'=%d nmax=%d q=%d"
            % (pr["kx"], pr["ky"], pr["m"], pr["mprime"], pr["nmax"], pr["q"])
        )
        if p["to_condition"]:
            out.append("topological order: PASS")
        else:
            out.append("topological order: FAIL")
            out.append(
                "witnesses (local, excitation-free, not generated; "
                "%d on the window, distinct up to translation):"
                % p["witness_window_count"]
            )
            for wtext in p["witnesses"]:
                out.append("  %s" % wtext)
            return "\n".join(out) + "\n"
        out.append(
            "anyon solutions per step n: %s"
            % " ".join(str(v) for v in p["counts"])
        )
        out.append("chosen step: n=%d ny=%d" % (p["chosen_n"], p["ny"]))
        out.append(
            "basis anyons: %d (%d anyon types)"
            % (len(p["basis"]), p["anyon_types"])
        )
        for a in p["basis"]:
            out.append(
                "  v%d: order %d, spin exponent %d  [%s]"
                % (a["index"], a["order"], a["spin"], ", ".join(a["syndrome"]))
            )
            out.append("      x-string: %s" % a["px"])
            out.append("      y-string: %s" % a["py"])
        out.append("braiding exponent matrix (mod d):")
        for row in p["braiding"]:
            out.append("  " + " ".join("%2d" % v for v in row))
        if p["em_pairs"] is not None:
            out.append("e/m pairs: %d" % len(p["em_pairs"]))
            for i, pair in enumerate(p["em_pairs"], start=1):
                for role, member in zip(("e", "m"), pair):
                    tag = (
                        "v%d" % member["basis_index"]
                        if member["basis_index"] is not None
                        else "combo"
                    )
                    out.append(
                        "  pair %d %s: %s [%s]"
                        % (i, role, tag, ", ".join(member["syndrome"]))
                    )
        elif p["em_note"] is not None:
            out.append("e/m rearrangement skipped: %s" % p["em_note"])
        o = p["oracle"]
        if o is not None:
            out.append(
                "oracle: L=%d gsd=%d anyon types=%d match=%s strings(l=%d)=%s"
                % (
                    o["L"],
                    o["gsd"],
                    o["anyon_types"],
                    o["match"],
                    o["string_length"],
                    o["strings_ok"],
                )
            )
        return "\n".join(out) + "\n"


def build_report(code, name, region, nmax, q, theory, oracle):
    payload = {
        "code": {
            "name": name,
            "d": code.d,
            "qudits": code.w,
            "stabilizers": code.t,
            "definition": format_code(code),
        },
        "parameters": {
            "kx": region.kx,
            "ky": region.ky,
            "m": region.m,
            "mprime": region.mprime,
            "nmax": nmax,
            "q": q,
        },
        "to_condition": bool(theory.to_condition),
        "witnesses": [
            _pauli_text(wop, code.w)
            for wop in _dedupe_translates(theory.witnesses)
        ],
        "witness_window_count": len(theory.witnesses),
        "chosen_n": theory.chosen_n,
        "counts": [int(v) for v in theory.counts],
        "ny": theory.ny,
        "basis": [],
        "orders": [int(a.order) for a in theory.basis],
        "anyon_types": int(math.prod(a.order for a in theory.basis)),
        "spins": [int(v) for v in theory.spins],
        "braiding": (
            [[int(v) for v in row] for row in np.asarray(theory.braiding)]
            if theory.braiding is not None
            else []
        ),
        "em_pairs": None,
        "em_note": theory.em_error,
        "oracle": oracle,
    }
    for i, a in enumerate(theory.basis, start=1):
        payload["basis"].append(
            {
                "index": i,
                "order": int(a.order),
                "spin": int(theory.spins[i - 1]),
                "syndrome": _syndrome_text(a.anyon),
                "px": _pauli_text(a.string.px, code.w),
                "py": _pauli_text(a.string.py, code.w),
            }
        )
    if theory.em_pairs is not None:
        by_syndrome = {a.anyon: i + 1 for i, a in enumerate(theory.basis)}
        pairs = []
        for b, cc in theory.em_pairs:
            pairs.append(
                [
                    {
                        "basis_index": by_syndrome.get(member.anyon),
                        "syndrome": _syndrome_text(member.anyon),
                    }
                    for member in (b, cc)
                ]
            )
        payload["em_pairs"] = pairs
    return AnalysisReport(payload=payload)


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------


@click.group()
def cli():
    """Anyon extraction from translation-invariant qudit stabilizer codes."""


def _resolve_code(source, dim):
    if os.path.sep in source or os.path.isfile(source):
        if dim is not None:
            raise click.UsageError("--d applies to builtin codes, not files")
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as e:
            raise click.ClickException("cannot read %r: %s" % (source, e))
        try:
            return parse_code_file(text), os.path.basename(source)
        except (CodeFileError, PolyParseError) as e:
            raise click.ClickException("parse error in %r: %s" % (source, e))
    try:
        return builtin(source, d=dim), source
    except ValueError as e:
        raise click.UsageError(str(e))


def _oracle_check(code, theory, L):
    try:
        inst = instantiate_torus(code, L)
    except ValueError as e:
        raise click.ClickException("oracle: %s" % e)
    gsd = torus_gsd(inst)
    ntypes = 1
    for a in theory.basis:
        ntypes *= a.order
    steps = [a.string.nx for a in theory.basis] + [a.string.ny for a in theory.basis]
    lmax = max(steps) if steps else 1
    # longest stack that still leaves the two endpoints separated on the torus
    ell = max(1, min(3, (L - 1) // (2 * lmax)))
    ok = True
    for a in theory.basis:
        if not verify_string_endpoints(inst, a.string, ell, axis="x"):
            ok = False
        if not verify_string_endpoints(inst, a.string, ell, axis="y"):
            ok = False
    return {
        "L": L,
        "gsd": int(gsd),
        "anyon_types": int(ntypes),
        "match": bool(gsd == ntypes),
        "string_length": ell,
        "strings_ok": ok,
    }


@cli.command("analyze")
@click.argument("source")
@click.option("--d", "dim", type=int, default=None, help="Parameter for parametric builtins (e.g. toric).")
@click.option("--k", type=int, default=None, help="Truncation half-width, both directions.")
@click.option("--kx", type=int, default=None, help="Truncation half-width, x.")
@click.option("--ky", type=int, default=None, help="Truncation half-width, y.")
@click.option("--m", "m_opt", type=int, default=None, help="Translation half-width for operators.")
@click.option("--mprime", type=int, default=None, help="Translation half-width for stabilizers.")
@click.option("--nmax", type=int, default=8, show_default=True, help="Largest string step to sweep.")
@click.option("--q", type=int, default=2, show_default=True, help="Starting junction arm length.")
@click.option("--oracle", "oracle_l", type=int, default=None, help="Torus size L for a brute-force cross-check.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.pass_context
def cmd_analyze(ctx, source, dim, k, kx, ky, m_opt, mprime, nmax, q, oracle_l, fmt):
    """Analyze SOURCE (a builtin code name or a code file path)."""
    code, name = _resolve_code(source, dim)
    rkx = kx if kx is not None else (k if k is not None else DEFAULT_REGION.kx)
    rky = ky if ky is not None else (k if k is not None else DEFAULT_REGION.ky)
    rm = m_opt if m_opt is not None else DEFAULT_REGION.m
    rmp = mprime if mprime is not None else DEFAULT_REGION.mprime
    try:
        region = Region(rkx, rky, rm, rmp)
    except ValueError as e:
        raise click.UsageError(str(e))
    try:
        theory = analyze(code, region=region, nmax=nmax, qstart=q)
    except RegionTooSmall as e:
        raise click.ClickException("%s (try a larger --k)" % e)
    oracle = None
    if oracle_l is not None and theory.to_condition:
        oracle = _oracle_check(code, theory, oracle_l)
    report = build_report(code, name, region, nmax, q, theory, oracle)
    click.echo(report.to_json() if fmt == "json" else report.to_text(), nl=False)
    if not theory.to_condition:
        ctx.exit(2)


@cli.command("bench-mge")
@click.option("--rows", default="64,91,128,181,256", show_default=True, help="Comma-separated row counts.")
@click.option("--cols", type=int, default=1024, show_default=True)
@click.option("--d", "dim", type=int, default=8, show_default=True, help="Matrix entry modulus.")
@click.option("--samples", type=int, default=3, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Benchmark RNG seed.")
@click.option(
    "--arithmetic",
    type=click.Choice(["exact", "mod"]),
    default="exact",
    show_default=True,
    help="exact: integer entries grow between reductions (the regime whose "
    "time is cubic in r below the column count); mod: entries stay in [0, d).",
)
def cmd_bench_mge(rows, cols, dim, samples, seed, arithmetic):
    """Time row reduction on random dense matrices and fit the growth rate."""
    try:
        rlist = [int(tok) for tok in rows.split(",") if tok.strip()]
    except ValueError:
        raise click.UsageError("--rows wants comma-separated integers")
    if cols < 1 or any(r < 1 for r in rlist):
        raise click.UsageError("matrix sizes must be positive")
    if samples < 0:
        raise click.UsageError("--samples must be >= 0")
    rng = np.random.default_rng(seed)
    click.echo("r,c,d,samples,mean_ms,stddev_ms")
    measured = []
    for r in rlist:
        if samples == 0:
            continue
        times = []
        for _ in range(samples):
            mat = rng.integers(1, dim, size=(r, cols), dtype=np.int64)
            t0 = time.perf_counter()
            mge(mat, dim, exact=(arithmetic == "exact"), check=False)
            times.append((time.perf_counter() - t0) * 1e3)
        mean = statistics.fmean(times)
        sd = statistics.stdev(times) if len(times) > 1 else 0.0
        measured.append((r, mean))
        click.echo(
            "%d,%d,%d,%d,%.3f,%.3f" % (r, cols, dim, samples, mean, sd)
        )
    for label, keep in (("r<c", lambda r: r < cols), ("r>c", lambda r: r > cols)):
        pts = [(r, ms) for r, ms in measured if keep(r) and ms > 0]
        if len(pts) >= 2:
            xs = np.log([r for r, _ in pts])
            ys = np.log([ms for _, ms in pts])
            slope = float(np.polyfit(xs, ys, 1)[0])
            click.echo("# fit %s: slope=%.2f over %d points" % (label, slope, len(pts)))
        else:
            click.echo("# fit %s: n/a (need >= 2 points)" % label)


def main(argv=None):
    try:
        rv = cli.main(args=argv, standalone_mode=False)
        return 0 if rv is None else int(rv)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.UsageError as e:
        click.echo("error: %s" % e.format_message(), err=True)
        return 1
    except click.ClickException as e:
        e.show()
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
