"""Rewrite the expected outputs from the current build (review the diff before committing)."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
from golden_cases import expected_path, load_cases, run  # noqa: E402

for case in load_cases():
    for json_mode in (False, True):
        code, out = run((["--json"] if json_mode else []) + case.argv)
        if code != case.exit:
            print(f"{case.name}: exit {code}, listed {case.exit}")
        p = expected_path(case, json_mode)
        p.parent.mkdir(exist_ok=True)
        p.write_text(out)
