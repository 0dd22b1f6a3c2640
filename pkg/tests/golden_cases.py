"""The CLI golden corpus: cases.txt lists name | arguments | exit code."""
from __future__ import annotations

import contextlib
import io
import os
import shlex
from dataclasses import dataclass
from pathlib import Path

from zforms.cli import main

GOLDEN = Path(__file__).parent / "golden"


@dataclass(frozen=True)
class Case:
    name: str
    argv: list[str]
    exit: int


def load_cases() -> list[Case]:
    out = []
    for line in (GOLDEN / "cases.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, args, code = (s.strip() for s in line.split("|"))
        out.append(Case(name, shlex.split(args), int(code)))
    return out


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process from the golden directory; (exit code, stdout)."""
    buf, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(GOLDEN)
    try:
        with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
            code = main(argv)
    finally:
        os.chdir(cwd)
    return code, buf.getvalue()


def expected_path(case: Case, json_mode: bool) -> Path:
    return GOLDEN / "expected" / f"{case.name}.{'json' if json_mode else 'txt'}"
