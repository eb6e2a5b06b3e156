"""Thin command-line client for the HTTP service.

By default every command talks to an in-process instance of the app over
an ASGI transport, so no server has to be running; pass --server to
target a live one.  Exit codes: 0 success, 1 failed verification,
2 usage or parse errors, 3 exceeded bounds.
"""

from __future__ import annotations

import asyncio
import json as jsonlib
import sys

import click
import httpx

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

FLAVORS = {"d": "directed", "u": "undirected", "q": "quotient"}


def _request(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.post(path, json=payload)
    from .service.app import app

    async def call() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://endomaps.internal", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(call())


def _post(server: str | None, path: str, payload: dict) -> dict:
    response = _request(server, path, payload)
    if response.status_code == 200:
        return response.json()
    detail = response.json().get("detail")
    if isinstance(detail, dict):
        kind = detail.get("kind")
        message = detail.get("message", str(detail))
    else:
        kind = None
        message = str(detail)
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_BOUND if kind == "bound-exceeded" else EXIT_USAGE)


@click.group()
@click.option(
    "--server",
    default=None,
    metavar="URL",
    help="Base URL of a running service; by default commands run in process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Analyze finite self-maps of {1..n}."""
    ctx.obj = server


_MAP_HELP = 'Map text, e.g. "4: 2 3 1 1" or "(1 2 3)(4->1)"; "-" reads stdin.'


def _resolve_text(text: str) -> str:
    if text == "-":
        return click.get_text_stream("stdin").read()
    return text


@main.command()
@click.option("-f", "--endofunction", "text", required=True, help=_MAP_HELP)
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON report.")
@click.pass_obj
def analyze(server: str | None, text: str, as_json: bool) -> None:
    """Full structural report for one map."""
    data = _post(server, "/analyze", {"endofunction": _resolve_text(text)})
    if as_json:
        click.echo(jsonlib.dumps(data, indent=2))
    else:
        from .reporting import render_report_text

        click.echo(render_report_text(data))


@main.command()
@click.option("-f", "--endofunction", "text", required=True, help=_MAP_HELP)
@click.option(
    "--flavor",
    type=click.Choice(["d", "u", "q"]),
    default="d",
    show_default=True,
    help="d: directed graph, u: undirected graph, q: quotient forest.",
)
@click.pass_obj
def dot(server: str | None, text: str, flavor: str) -> None:
    """Graphviz DOT export of the functional graph."""
    data = _post(
        server, "/dot", {"endofunction": _resolve_text(text), "flavor": FLAVORS[flavor]}
    )
    click.echo(data["dot"], nl=False)


@main.command()
@click.option("-f", "--endofunction", "text", required=True, help=_MAP_HELP)
@click.option(
    "--mode",
    type=click.Choice(["components", "word"]),
    default="components",
    show_default=True,
)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def factor(server: str | None, text: str, mode: str, as_json: bool) -> None:
    """Factor a map into disjoint forests on a cycle, or into a word of
    moves and transpositions."""
    data = _post(server, "/factor", {"endofunction": _resolve_text(text), "mode": mode})
    if as_json:
        click.echo(jsonlib.dumps(data, indent=2))
        return
    if mode == "components":
        factors = data["factors"]
        if not factors:
            click.echo("(empty product: the identity)")
        for images in factors:
            click.echo(f"{len(images)}: " + " ".join(str(v) for v in images))
    else:
        from .reporting import word_text

        word = data["word"]
        click.echo(word_text(word))
        click.echo(
            f"core={word['core_size']} moves={word['move_count']}"
            f" transpositions={word['transposition_count']}"
        )


@main.command()
@click.option("--dom", required=True, help="Domain map text.")
@click.option("--cod", required=True, help="Codomain map text.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def hom(server: str | None, dom: str, cod: str, as_json: bool) -> None:
    """Enumerate every structure-preserving map between two objects."""
    data = _post(server, "/hom", {"dom": dom, "cod": cod})
    if as_json:
        click.echo(jsonlib.dumps(data, indent=2))
        return
    click.echo(f"count: {data['count']}")
    for table in data["morphisms"]:
        click.echo(" ".join(str(v) for v in table))


@main.command()
@click.option("--bound", type=int, default=4, show_default=True, help="Maximum universe size for the sweeps.")
@click.option(
    "--suite",
    type=click.Choice(["all", "factorization", "monoid", "pretorsion", "bridges"]),
    default="all",
    show_default=True,
)
@click.option("--force", is_flag=True, help="Allow bounds above the default limit.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def verify(server: str | None, bound: int, suite: str, force: bool, as_json: bool) -> None:
    """Run the exhaustive property suites; exit 1 on any violation."""
    data = _post(server, "/verify", {"bound": bound, "suite": suite, "force": force})
    if as_json:
        click.echo(jsonlib.dumps(data, indent=2))
    else:
        for result in data["results"]:
            status = "PASS" if result["passed"] else "FAIL"
            click.echo(
                f"{status}  {result['name']:<34} instances={result['instances']:<8}"
                f" {result['elapsed_seconds']:8.3f}s"
            )
            if result.get("witness"):
                click.echo(f"      witness: {result['witness']}")
        passed = sum(1 for r in data["results"] if r["passed"])
        click.echo(f"{passed}/{len(data['results'])} checks passed")
    if not data["passed"]:
        sys.exit(EXIT_VERIFICATION_FAILED)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service with uvicorn."""
    import uvicorn

    uvicorn.run("endomaps.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
