"""Command line front door: ``orbitalgebra run <config> [options]``."""

from __future__ import annotations

import argparse
import pathlib
import sys

from .config import ConfigError, JobConfig, parse_config
from .report import run
from .scalars import rational_from_string


def _apply_overrides(job: JobConfig, args) -> JobConfig:
    changes = {}
    if args.level is not None:
        if args.level < 0:
            raise ConfigError("--level: expected a nonnegative integer")
        changes["bound"] = args.level
    if args.emit is not None:
        emits = tuple(e.strip() for e in args.emit.split(",") if e.strip())
        from .config import KNOWN_EMITS

        for e in emits:
            if e not in KNOWN_EMITS:
                raise ConfigError(f"--emit: unknown target {e!r}")
        changes["emit"] = emits
    if args.specialize is not None:
        key, _, value = args.specialize.partition("=")
        if key.strip() != "lambda" or not value:
            raise ConfigError("--specialize: expected lambda=<rational>")
        changes["specialize"] = rational_from_string(value)
    if not changes:
        return job
    from dataclasses import replace

    return replace(job, **changes)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="orbitalgebra",
        description="Exact orbit-basis operators for oligomorphic groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="run a declarative job config")
    runp.add_argument("config", help="path to a JSON job config")
    runp.add_argument("--level", type=int, default=None, help="override the level bound N")
    runp.add_argument("--emit", default=None, help="comma list from: json,table,dot")
    runp.add_argument("--out", default=None, help="directory for emitted files")
    runp.add_argument("--specialize", default=None, help="lambda=<rational>")
    args = parser.parse_args(argv)

    try:
        text = pathlib.Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    try:
        job = parse_config(text)
        job = _apply_overrides(job, args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    report, artifacts = run(job)

    outputs: dict[str, str] = {}
    if "json" in job.emit:
        outputs["job.json"] = report.to_json()
    if "table" in job.emit:
        outputs["job.txt"] = report.to_table()
    if "dot" in job.emit:
        outputs.update(artifacts)

    if args.out is not None:
        outdir = pathlib.Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for name, text_out in outputs.items():
            (outdir / name).write_text(text_out, encoding="utf-8")
            print(f"wrote {outdir / name}")
    else:
        for name, text_out in outputs.items():
            if len(outputs) > 1:
                print(f"--- {name} ---")
            print(text_out, end="")
    return 1 if report.failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
