"""Run every CLI invocation in corpus/commands.txt and dump the results.

Usable in-process (``run_corpus``) or as a script that prints one block per
command, so separate interpreter runs can be compared byte for byte.
"""

import shlex
import sys
from pathlib import Path

from hilbert_resources.cli import build_parser, config_from_args, run

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def corpus_commands():
    lines = (CORPUS / "commands.txt").read_text(encoding="utf-8").splitlines()
    return [line for line in lines if line.strip() and not line.startswith("#")]


def run_command(line):
    argv = shlex.split(line)
    for i, tok in enumerate(argv[:-1]):
        if tok in ("--spec", "--constants"):
            argv[i + 1] = str(CORPUS / argv[i + 1])
    return run(config_from_args(build_parser().parse_args(argv)))


def run_corpus():
    return {line: run_command(line) for line in corpus_commands()}


def dump():
    parts = []
    for line, result in run_corpus().items():
        parts.append(f"$ hra {line}\nexit {result.status}\n{result.output}{result.error}\n")
    return "".join(parts)


if __name__ == "__main__":
    sys.stdout.write(dump())
