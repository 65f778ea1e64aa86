"""Run the rstar CLI and validate its JSON output against the published schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def run(tool, *args):
    proc = subprocess.run([tool, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    tool, schema_dir, out_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    out_dir.mkdir(parents=True, exist_ok=True)
    report_schema = json.loads((schema_dir / "theorem-report.schema.json").read_text())
    class_schema = json.loads((schema_dir / "classification.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(report_schema)
    jsonschema.Draft202012Validator.check_schema(class_schema)

    failures = 0

    report_path = out_dir / "report.json"
    code, _, err = run(tool, "suite", "--max-order", "24", "--out", str(report_path))
    if code != 0:
        print(f"suite exited {code}: {err}")
        failures += 1
    report = json.loads(report_path.read_text())
    jsonschema.validate(report, report_schema)
    if not report_path.with_suffix(".txt").exists():
        print("text sibling report missing")
        failures += 1
    print(f"report: {len(report['rings'])} rings validate")

    code, out, _ = run(tool, "suite", "--ring", "Z/1", "--ring", "F2[x]/(x^2+x+1)", "--format", "json")
    degenerate = json.loads(out)
    jsonschema.validate(degenerate, report_schema)
    if code != 0 or not degenerate["rings"][0]["degenerate"]:
        print("degenerate corpus did not report cleanly")
        failures += 1

    for spec in ["Z/1", "Z/4", "Z/6", "Z/12", "F2[x]/(x^2+x+1)", "F3[x]/(x^3) x Z/2"]:
        code, out, err = run(tool, "classify", spec, "--format", "json")
        if code != 0:
            print(f"classify {spec} exited {code}: {err}")
            failures += 1
            continue
        jsonschema.validate(json.loads(out), class_schema)
    print("classification reports validate")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
