#!/usr/bin/env python3
"""Validate input files and freshly generated reports against the JSON schemas.

Usage: validate_reports.py <path-to-lemlab> <schemas-dir> <data-dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def load(path):
    with open(path) as fh:
        return json.load(fh)


def main():
    cli = sys.argv[1]
    schemas = pathlib.Path(sys.argv[2])
    data = pathlib.Path(sys.argv[3])

    input_schema = jsonschema.Draft7Validator(load(schemas / "input.schema.json"))
    report_schema = jsonschema.Draft7Validator(load(schemas / "report.schema.json"))

    inputs = sorted(data.glob("*.json"))
    if not inputs:
        print("no input files found under", data)
        sys.exit(1)
    for path in inputs:
        input_schema.validate(load(path))
        print("input ok:", path.name)

    runs = [
        ["cartan", "--input", data / "poly_quad.json", "--eps", "0.3", "--grid", "128"],
        ["minmod", "--input", data / "poly_deg5.json", "--eta", "0.2", "--grid", "128"],
        ["capacity", "--input", data / "disc.json"],
        ["capcompare", "--input", data / "segment.json"],
        ["green-lb", "--input", data / "green2.json", "--samples", "400"],
        ["essential-lb", "--input", data / "poly_quad.json", "--eps", "0.1"],
        ["verify", "--check", "robin", "--input", data / "measure3.json"],
        ["verify", "--check", "robin", "--input", data / "measure_mass08.json"],
    ]

    with tempfile.TemporaryDirectory(prefix="lemlab-schema-") as tmp:
        tmp = pathlib.Path(tmp)
        for i, args in enumerate(runs):
            out = tmp / f"run-{i}"
            cmd = [cli, *map(str, args), "--seed", "7", "--no-artifacts", "--out", str(out)]
            proc = subprocess.run(cmd, capture_output=True, text=True, timeout=240)
            if proc.returncode == 1:
                print("run errored:", " ".join(map(str, args)))
                print(proc.stderr)
                sys.exit(1)
            report = out / f"report-{args[0]}.json"
            report_schema.validate(load(report))
            print("report ok:", args[0], f"(exit {proc.returncode})")

        # The replay report uses the second branch of the schema.
        src = tmp / "run-0" / "report-cartan.json"
        out = tmp / "replayed"
        proc = subprocess.run([cli, "replay", "--report", str(src), "--out", str(out)],
                              capture_output=True, text=True, timeout=240)
        if proc.returncode != 0:
            print("replay errored:", proc.stderr)
            sys.exit(1)
        report_schema.validate(load(out / "report-replay.json"))
        print("report ok: replay")

    print("schema validation passed")


if __name__ == "__main__":
    main()
