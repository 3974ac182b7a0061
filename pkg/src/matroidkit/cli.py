"""Command-line surface.

Exit codes: 0 when the property holds or a verification passes, 1 when it
fails, 2 for usage and input errors.  Reports go to stdout; status lines
go to stderr.
"""
from __future__ import annotations

import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from .config import Settings, load_settings
from .construct import PointedMatroid, as_matroid, named_matroid
from .core import Matroid, elements, format_subset, has_u24_minor, is_binary
from .errors import ConfigError, InputError, MatroidKitError
from .props import (
    axiom_check,
    has_k_skew,
    has_series_minor,
    is_circuit_difference,
    is_unbreakable,
    skew_circuit_pairs,
    ssce_check,
)
from .textio import emit_matroid, encode_instance, parse_input
from .verify import (
    CatalogSpec,
    VerificationReport,
    catalog,
    verify_axiom_equivalence,
    verify_lemma_suite,
    verify_theorem1,
    verify_theorem3,
)

logger = logging.getLogger(__name__)

SYSTEMS = {
    "c3": "C3",
    "c3s": "C3-strong",
    "c3pp": "C3pp",
    "c3pp-unique": "C3pp-unique",
    "c3pp-weak": "C3pp-weak",
}
PROPERTIES = ("ssce", "skew", "k-skew:K", "unbreakable", "circuit-difference", "binary")
# theorem3 sweeps above this many edges need --allow-large
THEOREM3_SAFE_EDGES = 9


@dataclass
class CliState:
    settings: Settings
    as_json: bool = False
    max_witnesses: int = 100


# -------------------------------------------------
# Helpers
# -------------------------------------------------
def _status(symbol: str, text: str) -> None:
    click.echo(f"{symbol} {text}", err=True)


def _configure_logging(settings: Settings, verbose: int) -> None:
    level = {0: settings.log_level, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(
        level=level,
        format="%(levelname)-5.5s [%(name)s] %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _load(path: str) -> Matroid:
    return _document(path).to_matroid()


def _document(path: str):
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path} is not an ASCII file") from None
    return parse_input(text)


def _emit(state: CliState, check: str, instance: str | None, holds: bool, witnesses: list, params: dict,
          lines: list[str]) -> int:
    if state.as_json:
        record = {"check": check, "instance": instance, "verdict": "pass" if holds else "fail",
                  "witnesses": witnesses, "params": params}
        click.echo(json.dumps(record, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)
    return 0 if holds else 1


def _output_options(func):
    func = click.option("--max-witnesses", type=int, default=None, help="Cap on listed witnesses.")(func)
    func = click.option("--json", "as_json", is_flag=True, help="Emit structured records.")(func)
    return func


def _state(ctx: click.Context, as_json: bool, max_witnesses: int | None) -> CliState:
    state: CliState = ctx.obj
    state.as_json = state.as_json or as_json
    if max_witnesses is not None:
        if max_witnesses < 0:
            raise InputError("--max-witnesses must be non-negative")
        state.max_witnesses = max_witnesses
    return state


# -------------------------------------------------
# Group
# -------------------------------------------------
@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG.")
@_output_options
@click.pass_context
def cli(ctx: click.Context, verbose: int, as_json: bool, max_witnesses: int | None):
    """Exact matroid toolkit."""
    settings = load_settings()
    _configure_logging(settings, verbose)
    ctx.obj = CliState(settings, as_json, settings.max_witnesses)
    _state(ctx, False, max_witnesses)


@cli.command()
@click.argument("file")
@_output_options
@click.pass_context
def info(ctx, file, as_json, max_witnesses):
    """Summary of a matroid file."""
    state = _state(ctx, as_json, max_witnesses)
    m = _load(file)
    classes = [format_subset(b, m.labels) for b in m.series_classes().blocks]
    facts = {
        "n": m.n,
        "rank": m.rank(),
        "connected": m.is_connected(),
        "circuits": len(m.circuits),
        "series_classes": [elements(b) for b in m.series_classes().blocks],
        "binary": is_binary(m),
    }
    lines = [
        f"n: {m.n}",
        f"rank: {facts['rank']}",
        f"connected: {'yes' if facts['connected'] else 'no'}",
        f"circuits: {facts['circuits']}",
        f"series classes: {' '.join(classes)}",
        f"binary: {'yes' if facts['binary'] else 'no'}",
    ]
    _emit(state, "info", encode_instance(m), True, [], facts, lines)
    return 0


def _check_property(m: Matroid, prop: str, limit: int) -> tuple[bool, list, list[str]]:
    if prop == "ssce":
        result = ssce_check(m, limit)
        lines = [f"ssce: {'holds' if result.holds else 'fails'} ({result.total} failing instances)"]
        for w in result.violations:
            lines.append(
                f"  C1={format_subset(w.c1)} C2={format_subset(w.c2)} e1={w.e1} e2={w.e2} e={w.e}"
            )
        return result.holds, [w.as_dict() for w in result.violations], lines
    if prop == "skew":
        pairs = skew_circuit_pairs(m)
        lines = [f"skew: {len(pairs)} pairs"]
        lines += [f"  {format_subset(p.circuits[0])} {format_subset(p.circuits[1])}" for p in pairs[:limit]]
        return bool(pairs), [p.as_dict() for p in pairs[:limit]], lines
    if prop.startswith("k-skew:"):
        try:
            k = int(prop.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad property {prop!r}; expected k-skew:K") from None
        found, family = has_k_skew(m, k)
        lines = [f"k-skew({k}): {'found' if found else 'none'}"]
        if found:
            lines.append("  " + " ".join(format_subset(c) for c in family.circuits))
        return found, [family.as_dict()] if found else [], lines
    if prop == "unbreakable":
        holds = is_unbreakable(m)
        return holds, [], [f"unbreakable: {'yes' if holds else 'no'}"]
    if prop == "circuit-difference":
        holds = is_circuit_difference(m)
        return holds, [], [f"circuit-difference: {'yes' if holds else 'no'}"]
    if prop == "binary":
        minor = has_u24_minor(m)
        lines = [f"binary: {'yes' if minor is None else 'no'}"]
        witnesses = []
        if minor is not None:
            contract, delete = minor
            lines.append(f"  U(2,4) minor: contract {format_subset(contract)} delete {format_subset(delete)}")
            witnesses.append({"contract": elements(contract), "delete": elements(delete)})
        return minor is None, witnesses, lines
    raise InputError(f"unknown property {prop!r}; expected one of {', '.join(PROPERTIES)}")


@cli.command()
@click.option("--property", "prop", required=True, help="|".join(PROPERTIES))
@click.argument("file")
@_output_options
@click.pass_context
def check(ctx, prop, file, as_json, max_witnesses):
    """Evaluate one property of a matroid."""
    state = _state(ctx, as_json, max_witnesses)
    m = _load(file)
    holds, witnesses, lines = _check_property(m, prop, state.max_witnesses)
    _status("✅" if holds else "❌", f"{prop}: {'holds' if holds else 'fails'}")
    return _emit(state, prop, encode_instance(m), holds, witnesses, {"property": prop}, lines)


@cli.command()
@click.option("--system", type=click.Choice(sorted(SYSTEMS)), required=True)
@click.argument("file")
@_output_options
@click.pass_context
def axiom(ctx, system, file, as_json, max_witnesses):
    """Evaluate a circuit axiom on a circuit family (need not be a matroid)."""
    state = _state(ctx, as_json, max_witnesses)
    doc = _document(file)
    family = doc.family()
    result = axiom_check(family, doc.n, SYSTEMS[system], limit=state.max_witnesses)
    lines = [f"{SYSTEMS[system]}: {'holds' if result.holds else 'fails'} ({result.total} violations)"]
    for v in result.violations:
        extra = " ".join(f"{k}={v.as_dict()[k]}" for k in ("e1", "e2", "e", "f") if k in v.as_dict())
        lines.append(f"  C1={format_subset(v.c1)} C2={format_subset(v.c2)} {extra}".rstrip())
        if v.note:
            lines.append(f"    {v.note}")
    instance = f"{doc.n}:" + ";".join(",".join(map(str, elements(c))) for c in family.members)
    return _emit(state, SYSTEMS[system], instance, result.holds, [v.as_dict() for v in result.violations],
                 {"system": SYSTEMS[system]}, lines)


@cli.command()
@click.option("--series", is_flag=True, help="Series minors (the only supported kind).")
@click.option("--allow-large", is_flag=True, help="Search hosts above the size cap.")
@click.argument("host")
@click.argument("target")
@_output_options
@click.pass_context
def minor(ctx, series, allow_large, host, target, as_json, max_witnesses):
    """Series-minor containment with the move sequence."""
    state = _state(ctx, as_json, max_witnesses)
    if not series:
        raise click.UsageError("only series minors are supported; pass --series")
    h, t = _load(host), _load(target)
    if allow_large and h.n > state.settings.series_minor_max:
        logger.warning("series-minor search on %d elements above the cap of %d", h.n, state.settings.series_minor_max)
    result = has_series_minor(h, t, cap=state.settings.series_minor_max, allow_large=allow_large)
    moves = "; ".join(f"{op} {label}" for op, label in result.moves)
    lines = [f"series minor: {'yes' if result.found else 'no'}"]
    if result.found:
        lines.append(f"moves: {moves or '(none)'}")
    witnesses = [{"moves": [list(m) for m in result.moves]}] if result.found else []
    return _emit(state, "series-minor", encode_instance(h), result.found, witnesses,
                 {"target": encode_instance(t)}, lines)


@cli.command(name="named")
@click.argument("ident")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def named_cmd(ctx, ident, out):
    """Emit a registry matroid (N5, MK4, K23, U:r,n, SU:k,l, G:i, L:i)."""
    value = named_matroid(ident)
    tags = {"e": value.basepoint} if isinstance(value, PointedMatroid) else None
    text = emit_matroid(as_matroid(value), tags)
    if out:
        Path(out).write_text(text, encoding="ascii")
        _status("✅", f"wrote {ident} to {out}")
    else:
        click.echo(text, nl=False)
    return 0


def _bound(value: int | None, default: int) -> int:
    return default if value is None else value


@cli.command()
@click.argument("which", type=click.Choice(["theorem1", "theorem3", "axiom", "lemmas"]))
@click.option("--graphic-max-edges", type=int, default=None)
@click.option("--binary-max-cols", type=int, default=None)
@click.option("--binary-max-rank", type=int, default=None)
@click.option("--uniform-max", type=int, default=None)
@click.option("--clutter-n", type=int, default=None)
@click.option("--allow-large", is_flag=True)
@click.option("--workers", type=int, default=None)
@click.option("--record", "record_url", default=None, help="Database URL for the run archive.")
@_output_options
@click.pass_context
def verify(ctx, which, graphic_max_edges, binary_max_cols, binary_max_rank, uniform_max, clutter_n,
           allow_large, workers, record_url, as_json, max_witnesses):
    """Run a verification sweep."""
    state = _state(ctx, as_json, max_witnesses)
    s = state.settings
    limit = state.max_witnesses
    workers = max(1, _bound(workers, s.workers))
    if allow_large:
        logger.warning("size caps lifted for %s", which)
        _status("⚠️", f"--allow-large: {which} may run for a long time")
    binary = CatalogSpec(
        "binary",
        max_rank=_bound(binary_max_rank, s.binary_max_rank),
        max_cols=_bound(binary_max_cols, s.binary_max_cols),
        allow_large=allow_large,
    )
    if which == "theorem1":
        specs = [
            CatalogSpec("graphic", max_edges=_bound(graphic_max_edges, s.graphic_max_edges), allow_large=allow_large),
            binary,
            CatalogSpec("uniform", max_n=_bound(uniform_max, s.uniform_max)),
            CatalogSpec("named"),
        ]
        report = verify_theorem1(specs, workers=workers, limit=limit)
    elif which == "theorem3":
        edges = _bound(graphic_max_edges, s.theorem3_max_edges)
        if edges > THEOREM3_SAFE_EDGES and not allow_large:
            raise InputError(f"theorem3 above {THEOREM3_SAFE_EDGES} edges needs --allow-large")
        specs = [CatalogSpec("graphic", max_edges=edges, allow_large=allow_large), binary]
        report = verify_theorem3(specs, workers=workers, limit=limit)
    elif which == "axiom":
        report = verify_axiom_equivalence(_bound(clutter_n, s.clutter_n), allow_large=allow_large, limit=limit)
    else:
        report = verify_lemma_suite(
            graphic_max_edges=_bound(graphic_max_edges, min(s.graphic_max_edges, 7)),
            binary_max_rank=binary.max_rank,
            binary_max_cols=min(binary.max_cols, 6) if binary_max_cols is None else binary.max_cols,
            uniform_max=_bound(uniform_max, s.uniform_max),
            limit=limit,
        )
    _print_report(state, report)
    url = record_url or s.database_url
    if url:
        from .store import get_engine, init_db, record_report

        engine = get_engine(url)
        init_db(engine)
        run_id = record_report(engine, report)
        _status("✅", f"recorded as run {run_id}")
    _status("✅" if report.passed else "❌", report.summary())
    return 0 if report.passed else 1


def _print_report(state: CliState, report: VerificationReport) -> None:
    if state.as_json:
        for record in report.as_records():
            click.echo(json.dumps(record, sort_keys=True, default=str))
        return
    _print_text(report, indent="")


def _print_text(report: VerificationReport, indent: str) -> None:
    click.echo(indent + report.summary())
    if report.counts:
        click.echo(indent + "  counts: " + ", ".join(f"{k}={v}" for k, v in report.counts.items()))
    for note in report.notes:
        click.echo(indent + f"  note: {note}")
    for v in report.violations:
        click.echo(indent + f"  violation {v['instance']}: {json.dumps(v['witness'], sort_keys=True, default=str)}")
    for part in report.parts:
        _print_text(part, indent + "  ")


@cli.command(name="catalog")
@click.option("--family", type=click.Choice(["graphic", "binary", "uniform", "named", "clutter"]), required=True)
@click.option("--max-edges", type=int, default=None)
@click.option("--max-rank", type=int, default=None)
@click.option("--max-cols", type=int, default=None)
@click.option("--max-n", type=int, default=None)
@click.option("--all", "include_disconnected", is_flag=True, help="Keep disconnected matroids.")
@click.option("--allow-large", is_flag=True)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), required=True)
@click.pass_context
def catalog_cmd(ctx, family, max_edges, max_rank, max_cols, max_n, include_disconnected, allow_large, out_dir):
    """Write every catalog instance as a matroid file."""
    s: Settings = ctx.obj.settings
    default_n = s.clutter_n if family == "clutter" else s.uniform_max
    spec = CatalogSpec(
        family,
        max_edges=_bound(max_edges, s.graphic_max_edges),
        max_rank=_bound(max_rank, s.binary_max_rank),
        max_cols=_bound(max_cols, s.binary_max_cols),
        max_n=_bound(max_n, default_n),
        connected_only=not include_disconnected,
        allow_large=allow_large,
    )
    os.makedirs(out_dir, exist_ok=True)
    count = 0
    for count, m in enumerate(catalog(spec), start=1):
        Path(out_dir, f"{family}-{count:05d}.matroid").write_text(emit_matroid(m), encoding="ascii")
    click.echo(f"{family}: {count} matroids written to {out_dir}")
    _status("✅", f"catalog {family} done")
    return 0


@cli.command()
@click.option("--limit", type=int, default=20)
@click.pass_context
def history(ctx, limit):
    """Recent archived verification runs."""
    url = ctx.obj.settings.database_url
    if not url:
        raise ConfigError("DATABASE_URL is not set; nothing to read")
    from .store import build_history_report, get_engine, init_db

    engine = get_engine(url)
    init_db(engine)
    click.echo(build_history_report(engine, limit))
    return 0


# -------------------------------------------------
# Entry
# -------------------------------------------------
def run(argv: list[str] | None = None) -> int:
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="matroidkit", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 2
    except click.Abort:
        return 2
    except MatroidKitError as exc:
        _status("❌", str(exc))
        return 2
    return rv if isinstance(rv, int) else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
