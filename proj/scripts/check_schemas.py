#!/usr/bin/env python3
"""Validate the sample documents in data/ against the action schemas."""
import json
import pathlib
import sys

import jsonschema


def main(root):
    root = pathlib.Path(root)
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
    failures = 0
    for sample in sorted((root / "data").glob("*.json")):
        doc = json.loads(sample.read_text())
        cmd, action = doc["_command"].split(" ", 1)
        schema = schemas[cmd]
        wrapped = {"$schema": schema["$schema"], "$defs": schema["$defs"], "allOf": [schema["actions"][action]["input"]]}
        try:
            jsonschema.validate(doc, wrapped)
            print(f"ok   {sample.name}")
        except jsonschema.ValidationError as e:
            failures += 1
            print(f"FAIL {sample.name}: {e.message}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent))
