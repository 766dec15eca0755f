"""Validate the --json output of every subcommand, and the golden records,
against schema/loopcoh.schema.json.

usage: validate_schema.py CLI SOURCE_DIR
"""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def run(cli, *args, expect=0):
    proc = subprocess.run([cli, *args, "--json"], capture_output=True, text=True)
    if proc.returncode != expect:
        raise SystemExit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    cli, root = sys.argv[1], Path(sys.argv[2])
    schema = json.loads((root / "schema" / "loopcoh.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema)
    corpus = root / "corpus"

    records = {
        "adem": run(cli, "adem", "Sq2 Sq2"),
        "adem zero": run(cli, "adem", "Sq1 Sq1"),
        "apply": run(cli, "apply", str(corpus / "bspin9.ualg"), "7", "w8*e16"),
        "derive": run(cli, "derive", "--bound", "32", str(corpus / "bspin7.ualg")),
        "verify": run(cli, "verify", "--bound", "20", str(corpus / "bf4.ualg")),
        "verify corrupted": run(cli, "verify", "--bound", "16", str(corpus / "fixtures/corrupted-bspin7.ualg"), expect=1),
        "poincare": run(cli, "poincare", "--bound", "12", str(corpus / "bdi4.ualg")),
        "poincare loop": run(cli, "poincare", "--bound", "12", str(corpus / "golden/lbdi4.json")),
    }
    for path in sorted((corpus / "golden").glob("*.json")):
        records[path.name] = json.loads(path.read_text())

    failed = 0
    for label, record in records.items():
        errors = list(validator.iter_errors(record))
        status = "ok" if not errors else f"{len(errors)} errors"
        print(f"{label}: {status}")
        for e in errors[:5]:
            print(f"  {e.json_path}: {e.message[:200]}")
        failed += bool(errors)
    if not records["verify corrupted"]["coherence"]["violations"]:
        print("verify corrupted: no violations listed")
        failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
