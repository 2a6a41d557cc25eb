"""Runs every invocation in specs/suite.txt and validates its JSON report."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def invocations(specs):
    for line in (specs / "suite.txt").read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield [a.replace("SPECS", str(specs)) for a in line.split()]


def main():
    binary, specs, schema_path = sys.argv[1], pathlib.Path(sys.argv[2]), sys.argv[3]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for args in invocations(specs):
            for extra in ([], ["--timing"]):
                out = pathlib.Path(tmp) / "r.json"
                proc = subprocess.run([binary, "--json", str(out), *extra, *args], capture_output=True, text=True)
                doc = json.loads(out.read_text())
                errors = list(validator.iter_errors(doc))
                if doc["exit_code"] != proc.returncode:
                    errors.append(f"exit code {proc.returncode} but report says {doc['exit_code']}")
                if ("timing" in doc) != bool(extra):
                    errors.append("timing present iff --timing")
                label = " ".join(extra + args)
                if errors:
                    failures += 1
                    print(f"FAIL {label}")
                    for e in errors:
                        print(f"  {getattr(e, 'message', e)}")
                else:
                    print(f"ok   {label} (exit {proc.returncode})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
