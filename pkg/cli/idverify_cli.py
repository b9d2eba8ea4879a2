# Copyright 2023 Julian Knutsen
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the “Software”), to deal in
# the Software without restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the
# Software, and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
import dataclasses
import logging
import os
import sys
import typing

import click

from idverify import config, exceptions, serialize
from idverify.corpus import identity, registry, report, verifier
from idverify.corpus.identity_filter import IdentityFilter

COMMANDS = ("list", "show", "verify")
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
LOG_LEVEL = os.environ.get("IDVERIFY_LOG_LEVEL", "WARNING")


@dataclasses.dataclass(frozen=True)
class CliConfig:
    command: str
    filter: str = ""
    profile: typing.Optional[str] = None
    jobs: typing.Optional[int] = None
    json_path: typing.Optional[str] = None
    md_path: typing.Optional[str] = None
    tol_scale: float = 1.0
    seed: typing.Optional[int] = None
    identity_id: typing.Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise exceptions.ValidationError(f"unknown command {self.command!r}")
        if self.jobs is not None and self.jobs < 1:
            raise exceptions.ValidationError(f"jobs must be at least 1, not {self.jobs}")
        if not self.tol_scale > 0:
            raise exceptions.ValidationError(f"tol-scale must be positive, not {self.tol_scale}")
        if self.profile is not None and self.profile not in config.PROFILES:
            raise exceptions.ValidationError(f"unknown profile {self.profile!r}")
        if self.command == "show" and not self.identity_id:
            raise exceptions.ValidationError("show needs an identity id")


def _list(cfg: CliConfig) -> int:
    for entry in registry.builtin_manifest().select(IdentityFilter.parse(cfg.filter)):
        click.echo(f"{entry.id:<16} {entry.category.value:<20} {entry.source}")
    return EXIT_OK


def _show(cfg: CliConfig) -> int:
    entry = registry.builtin_manifest().get(typing.cast(str, cfg.identity_id))
    click.echo(f"id:        {entry.id}")
    click.echo(f"source:    {entry.source}")
    click.echo(f"category:  {entry.category.value}")
    click.echo(f"statement: {entry.statement}")
    click.echo(f"expected:  {entry.rhs_text()}")
    click.echo(f"tol:       {entry.tol:g}")
    click.echo(f"tags:      {', '.join(entry.tags)}")
    click.echo(f"quote:     {entry.quote}")
    if entry.notes:
        click.echo(f"notes:     {entry.notes}")
    return EXIT_OK


def _outcome_line(o: report.VerificationOutcome) -> str:
    return (
        f"{o.id:<16} {o.status.value:<5} {serialize.format_real(o.computed):>24} "
        f"{serialize.format_real(o.expected):>24} {o.abs_err:9.2e} {o.tol:7.0e} {o.seconds:8.2f}s"
    )


def _verify(cfg: CliConfig) -> int:
    engine = config.load_config()
    flt = IdentityFilter.parse(cfg.filter)
    ctx = identity.EvalContext.from_engine(engine, cfg.profile, cfg.seed, cfg.tol_scale)
    jobs = cfg.jobs if cfg.jobs is not None else engine.jobs
    rep = verifier.verify_all(flt, jobs=jobs, ctx=ctx, engine=engine)

    for outcome in rep.outcomes:
        click.echo(_outcome_line(outcome))
        if outcome.message:
            click.echo(f"    {outcome.message}")
    click.echo(rep.summary_line())

    if cfg.json_path:
        report.write_json(rep, cfg.json_path)
    if cfg.md_path:
        report.write_markdown(rep, cfg.md_path)
    return EXIT_OK if rep.ok else EXIT_FAILED


_HANDLERS = {"list": _list, "show": _show, "verify": _verify}


def run(cfg: CliConfig) -> int:
    """Execute one command; 0 when everything selected passes, 1 on failures, 2 on bad input."""
    try:
        return _HANDLERS[cfg.command](cfg)
    except (
        exceptions.ParseError,
        exceptions.ValidationError,
        exceptions.UnknownNameError,
        OSError,
    ) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE


def _exit_with(ctx: click.Context, **kwargs) -> None:
    try:
        cfg = CliConfig(**kwargs)
    except exceptions.ValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(EXIT_USAGE)
    ctx.exit(run(cfg))


filter_option = click.option(
    "--filter", "filter_", default="", help="KEY=VALUE[,...] with keys id, category, source, tag"
)


@click.group("idverify")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=LOG_LEVEL,
    show_default=True,
)
def cli(log_level: str):
    logging.basicConfig(
        stream=sys.stderr, level=log_level.upper(), format="%(asctime)s %(levelname)s %(message)s"
    )


@click.command("list")
@filter_option
@click.pass_context
def list_cmd(ctx: click.Context, filter_: str):
    _exit_with(ctx, command="list", filter=filter_)


@click.command()
@click.argument("identity_id")
@click.pass_context
def show(ctx: click.Context, identity_id: str):
    _exit_with(ctx, command="show", identity_id=identity_id)


@click.command()
@filter_option
@click.option("--profile", type=click.Choice(config.PROFILES), default=None)
@click.option("--jobs", type=int, default=None)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--md", "md_path", type=click.Path(dir_okay=False), default=None)
@click.option("--tol-scale", type=float, default=1.0, show_default=True)
@click.option("--seed", type=int, default=None)
@click.pass_context
def verify(
    ctx: click.Context,
    filter_: str,
    profile: typing.Optional[str],
    jobs: typing.Optional[int],
    json_path: typing.Optional[str],
    md_path: typing.Optional[str],
    tol_scale: float,
    seed: typing.Optional[int],
):
    _exit_with(
        ctx,
        command="verify",
        filter=filter_,
        profile=profile,
        jobs=jobs,
        json_path=json_path,
        md_path=md_path,
        tol_scale=tol_scale,
        seed=seed,
    )


cli.add_command(list_cmd)
cli.add_command(show)
cli.add_command(verify)


def main():
    cli(prog_name="idverify")  # pylint: disable=no-value-for-parameter


if __name__ == "__main__":
    main()
