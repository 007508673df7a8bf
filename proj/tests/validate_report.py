"""Validate paper-suite JSON reports against the schema."""
import json
import subprocess
import sys

import jsonschema

pvk, schema_path, work = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)

for name, extra in [("timed", []), ("untimed", ["--no-timing"]), ("class2", ["--class", "2", "--no-timing"])]:
    path = f"{work}/schema_{name}.json"
    rc = subprocess.run([pvk, "paper-suite", "--json", path, *extra], stdout=subprocess.DEVNULL).returncode
    if rc not in (0, 1):
        sys.exit(f"{name}: paper-suite exited {rc}")
    with open(path) as f:
        report = json.load(f)
    jsonschema.validate(report, schema, cls=jsonschema.Draft202012Validator)
    if report["summary"]["passed"] != (rc == 0):
        sys.exit(f"{name}: summary.passed disagrees with exit code {rc}")
    print(f"{name}: valid, {report['summary']}")
