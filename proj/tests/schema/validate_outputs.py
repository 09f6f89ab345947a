#!/usr/bin/env python3
# Copyright 2026 The coeval Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the synthetic pipeline through the CLI and validates every emitted
record and report against the JSON schemas shipped in schemas/."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(tool, *args):
    proc = subprocess.run([tool, *args], capture_output=True, text=True)
    if proc.returncode != 0:
        sys.exit(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return proc


def validator(root, definition):
    schema = dict(root)
    schema["$ref"] = f"#/$defs/{definition}"
    return jsonschema.Draft202012Validator(schema)


def check_lines(path, v):
    count = 0
    for line in Path(path).read_text().splitlines():
        if line.strip():
            v.validate(json.loads(line))
            count += 1
    if count == 0:
        sys.exit(f"{path} is empty")
    return count


def main():
    tool, schema_dir = sys.argv[1], Path(sys.argv[2])
    records = json.loads((schema_dir / "records.schema.json").read_text())
    report_schema = json.loads((schema_dir / "report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(records)
    jsonschema.Draft202012Validator.check_schema(report_schema)
    report_validator = jsonschema.Draft202012Validator(report_schema)

    with tempfile.TemporaryDirectory() as tmp:
        d = Path(tmp)
        run(tool, "simulate", "--out-dir", str(d), "--num-scenes", "15", "--seed", "11")
        check_lines(d / "scenes.jsonl", validator(records, "scene"))
        check_lines(d / "real.jsonl", validator(records, "trajectory_set"))
        check_lines(d / "gen.jsonl", validator(records, "trajectory_set"))
        check_lines(d / "predictions.jsonl", validator(records, "prediction"))

        run(tool, "bpt", "--real", str(d / "real.jsonl"), "--gen", str(d / "gen.jsonl"),
            "--permutations", "100", "--keep-stats", "--results", str(d / "results.jsonl"),
            "--summary", str(d / "summary.json"))
        check_lines(d / "results.jsonl", validator(records, "bpt_result"))

        rows = "\n".join(f"{i % 7},{(i * 3) % 5},{i % 2}" for i in range(40))
        (d / "real.csv").write_text(rows + "\n")
        (d / "gen.csv").write_text(rows + "\n")

        run(tool, "report", "--scenes", str(d / "scenes.jsonl"), "--predictions",
            str(d / "predictions.jsonl"), "--real", str(d / "real.jsonl"), "--gen",
            str(d / "gen.jsonl"), "--real-features", str(d / "real.csv"), "--gen-features",
            str(d / "gen.csv"), "--permutations", "100", "--output", str(d / "full.json"))
        full = json.loads((d / "full.json").read_text())
        report_validator.validate(full)
        for key in ("ade_table", "bpt_summary", "frechet_value"):
            if full[key] is None:
                sys.exit(f"full report is missing {key}")

        run(tool, "report", "--scenes", str(d / "scenes.jsonl"), "--predictions",
            str(d / "predictions.jsonl"), "--output", str(d / "ade_only.json"))
        partial = json.loads((d / "ade_only.json").read_text())
        report_validator.validate(partial)
        if partial["bpt_summary"] is not None or partial["frechet_value"] is not None:
            sys.exit("partial report should carry explicit nulls")
        if len(partial["warnings"]) != 2:
            sys.exit("partial report should carry two warnings")

    # Exit codes of the installed binary: usage 1, validation 2.
    corpus = Path(__file__).resolve().parent.parent / "fixtures" / "malformed"
    codes = {
        1: [tool, "bpt", "--alpha", "2", "--real", "x", "--gen", "y"],
        2: [tool, "validate", "--scenes", str(corpus / "scenes.jsonl")],
    }
    for expected, argv in codes.items():
        got = subprocess.run(argv, capture_output=True, text=True).returncode
        if got != expected:
            sys.exit(f"{argv[1]} exited {got}, expected {expected}")
    print("schema validation passed")


if __name__ == "__main__":
    main()
