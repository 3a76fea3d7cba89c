"""Validate `lsk certify --json` output against the published schema."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    checked = 0
    for g in range(2, 5):
        for n in range(0, 11):
            out = subprocess.run([cli, "certify", "-g", str(g), "-n", str(n), "--json"],
                                 check=True, capture_output=True, text=True).stdout
            errors = list(validator.iter_errors(json.loads(out)))
            if errors:
                print(f"g={g} n={n}: {errors[0].message}")
                return 1
            checked += 1
    print(f"{checked} certificates valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
