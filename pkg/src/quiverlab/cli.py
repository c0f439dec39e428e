"""Command-line front door.

Exit codes: 0 success, 1 domain error, 2 usage error.  Output is byte-stable
across runs: every enumeration is canonically ordered.
"""

import json
import sys

import click

from quiverlab import barcode as barcode_mod
from quiverlab import character, mgs, repmod, seed, silting, stability
from quiverlab.errors import QuiverLabError
from quiverlab.quiver import (
    Quiver,
    fan_quiver,
    from_arrows,
    linear_quiver,
    mutate_matrix,
    to_exchange_matrix,
)


def _quiver_from_options(quiver_json, qtype, orientation, arrows):
    if quiver_json:
        return Quiver.from_json(quiver_json)
    if qtype:
        if not qtype.upper().startswith("A"):
            raise click.UsageError(f"unsupported type {qtype!r}; only A<n>")
        n = int(qtype[1:])
        if arrows:
            pairs = []
            for chunk in arrows.split(","):
                s, t = chunk.split(">")
                pairs.append((int(s), int(t)))
            return from_arrows(n, pairs)
        if orientation == "linear":
            return linear_quiver(n)
        if orientation == "fan":
            return fan_quiver(n)
        raise click.UsageError(f"unknown orientation {orientation!r}")
    raise click.UsageError("provide --quiver JSON or --type A<n>")


def _fail(exc):
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


quiver_options = [
    click.option("--quiver", "quiver_json", default=None, help="Quiver JSON."),
    click.option("--type", "qtype", default=None, help="Named type, e.g. A3."),
    click.option(
        "--orientation",
        default="linear",
        help="linear | fan (with --type).",
    ),
    click.option("--arrows", default=None, help="Arrow list '2>1,3>1' (with --type)."),
]


def with_quiver_options(fn):
    for opt in reversed(quiver_options):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Cluster-algebra workbench: mutation, characters, silting, stability,
    maximal green sequences, barcodes."""


@main.command()
@with_quiver_options
@click.option("--matrix", "matrix_json", default=None, help="Mutate a raw matrix instead.")
@click.option("--at", "directions", type=int, multiple=True, required=True)
def mutate(quiver_json, qtype, orientation, arrows, matrix_json, directions):
    """Mutate a quiver (or framed/exchange matrix) along a direction list."""
    try:
        if matrix_json:
            m = json.loads(matrix_json)
            for k in directions:
                m = mutate_matrix(m, k)
            click.echo(json.dumps(m))
            return
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        from quiverlab.quiver import mutate_quiver

        for k in directions:
            q = mutate_quiver(q, k)
        click.echo(q.to_json())
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="seed-walk")
@with_quiver_options
@click.option("--at", "directions", type=int, multiple=True, required=True)
def seed_walk(quiver_json, qtype, orientation, arrows, directions):
    """Final cluster after a mutation walk, one variable per line."""
    try:
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        s = seed.initial_seed(q)
        for k in directions:
            s = seed.mutate_seed(s, k)
        for poly in s.cluster:
            click.echo(poly.render("display"))
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="exchange-graph")
@with_quiver_options
@click.option("--max-nodes", default=10000, show_default=True)
@click.option("--max-depth", default=64, show_default=True)
@click.option("--dot", "dot_path", default=None, help="Write Graphviz dot here.")
def exchange_graph_cmd(quiver_json, qtype, orientation, arrows, max_nodes, max_depth, dot_path):
    """Exchange-graph closure: cluster/variable counts and optional export."""
    try:
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        graph = seed.exchange_graph(q, max_nodes=max_nodes, max_depth=max_depth)
        click.echo(f"clusters: {graph.cluster_count}")
        click.echo(f"variables: {len(graph.variables)}")
        click.echo(f"complete: {str(graph.complete).lower()}")
        if dot_path:
            with open(dot_path, "w", encoding="utf-8") as fh:
                fh.write(graph.to_dot())
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="char")
@with_quiver_options
@click.option("--module", "literal", required=True, help="M[a,b], P[i], S[i], I[i], P[i][1].")
def char_cmd(quiver_json, qtype, orientation, arrows, literal):
    """Cluster character of a module literal."""
    try:
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        table = None
        if repmod.is_type_a(q):
            table = character.char_frieze(q)
        poly = character.char_of_literal(q, literal, table)
        click.echo(poly.render("display"))
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="char-table")
@with_quiver_options
def char_table_cmd(quiver_json, qtype, orientation, arrows):
    """Full character table as a JSON map from module literal to polynomial."""
    try:
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        table = character.char_frieze(q)
        click.echo(json.dumps(table.to_json_map(), indent=2))
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="silting")
@with_quiver_options
@click.option("--tilting-only", is_flag=True, help="Only pairs with empty shifted part.")
@click.option("--graph-json", is_flag=True, help="Print the extended compatibility graph.")
def silting_cmd(quiver_json, qtype, orientation, arrows, tilting_only, graph_json):
    """Silting pairs, one canonical literal per line."""
    try:
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        if graph_json:
            click.echo(silting.compatibility_graph(q).to_json())
            return
        pairs = (
            silting.tilting_modules(q) if tilting_only else silting.silting_pairs(q)
        )
        for pair in pairs:
            click.echo(pair.literal())
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="chambers")
@with_quiver_options
@click.option("--theta", default=None, help="Comma-separated direction to locate.")
def chambers_cmd(quiver_json, qtype, orientation, arrows, theta):
    """Chamber count, plus membership lookup for --theta."""
    try:
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        chs = stability.chambers(q)
        click.echo(f"chambers: {len(chs)}")
        if theta:
            vec = [int(x) for x in theta.split(",")]
            hit = stability.chamber_of(q, vec)
            if isinstance(hit, stability.WallHit):
                mods = ",".join(m.literal() for m in hit.semistables)
                click.echo(f"wall: {mods}")
            else:
                click.echo(f"chamber: {hit.silting.literal()}")
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="stability-svg")
@with_quiver_options
@click.option("--rank", type=int, required=True)
@click.option("--out", "out_path", default="-", help="Output file, '-' for stdout.")
def stability_svg_cmd(quiver_json, qtype, orientation, arrows, rank, out_path):
    """Stability picture as SVG (rank 2: plane; rank 3: stereographic)."""
    try:
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        svg = stability.render_svg(q, rank)
        if out_path == "-":
            click.echo(svg)
        else:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(svg)
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="mgs")
@with_quiver_options
@click.option("--max-depth", default=64, show_default=True)
@click.option("--max-states", default=100000, show_default=True)
@click.option("--trace", is_flag=True, help="Print the framed-matrix chain per sequence.")
def mgs_cmd(quiver_json, qtype, orientation, arrows, max_depth, max_states, trace):
    """Maximal green sequences, one per line (directions space-separated)."""
    try:
        q = _quiver_from_options(quiver_json, qtype, orientation, arrows)
        b = to_exchange_matrix(q)
        result = mgs.find_mgs(b, max_depth=max_depth, max_states=max_states)
        for sequence in result.sequences:
            click.echo(" ".join(str(k) for k in sequence))
            if trace:
                for state in mgs.replay(b, sequence):
                    click.echo(f"  {json.dumps(state.stacked())}")
        if not result.complete:
            click.echo("incomplete: budget exhausted", err=True)
    except QuiverLabError as exc:
        _fail(exc)


@main.command(name="barcode")
@click.argument("dims")
@click.option("--svg", "svg_path", default=None, help="Write bar rendering here.")
def barcode_cmd(dims, svg_path):
    """Stable barcode of a dimension vector like '3,4,2'."""
    try:
        v = tuple(int(x) for x in dims.split(","))
        code = barcode_mod.stable_barcode(v)
        click.echo(code.literal())
        if svg_path:
            with open(svg_path, "w", encoding="utf-8") as fh:
                fh.write(barcode_mod.barcode_svg(v))
    except (QuiverLabError, ValueError) as exc:
        _fail(exc)


@main.command(name="serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8765, show_default=True)
@click.option("--static", "static_dir", default=None, help="Directory of UI assets.")
def serve_cmd(host, port, static_dir):
    """Start the exploration session service."""
    from quiverlab.service import run_server

    run_server(host, port, static_dir)


if __name__ == "__main__":
    main()
