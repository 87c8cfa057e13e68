#!/usr/bin/env python3
# Runs every CLI subcommand once and validates its JSON output against schemas/.
# usage: validate_schemas.py <cli> <source dir>

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def registry(schema_dir):
    resources = []
    for p in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(p.read_text())
        Draft202012Validator.check_schema(doc)
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def main():
    cli, src = sys.argv[1], pathlib.Path(sys.argv[2])
    reg = registry(src / "schemas")
    corpus = src / "corpus"
    tmp = pathlib.Path(tempfile.mkdtemp())
    (tmp / "bad.map").write_text("(x + , y)\n")
    small = json.dumps({"n_samples": 1500, "radii": [1e3, 1e4]})

    runs = [
        ("classify.schema.json", 0, ["classify", corpus / "ex41iii.map"]),
        ("classify.schema.json", 0, ["--emit-ast", "classify", corpus / "ex41ii.map"]),
        ("classify.schema.json", 0, ["classify", "--mode", "numeric", corpus / "ex35.map"]),
        ("limit.schema.json", 0, ["limit", corpus / "prop42.map", "--path", "(2/t, 1/t)"]),
        ("bridge.schema.json", 0,
         ["bridge", corpus / "ex41i.map", "--alpha", "(t, 1/t)", "--beta", "(1/t, t)"]),
        ("bridge.schema.json", 0, ["qp-bridge", corpus / "ex35.map", "--alpha", "(t^-6, 1)"]),
        ("sample.schema.json", 0, ["sample-infinity", "--map", corpus / "ex41i.map", "--config", small]),
        ("sample.schema.json", 0,
         ["sample-infinity", "--set", corpus / "sec1.set", "--config", small, "--directions"]),
        ("examples.schema.json", 0, ["examples", "--corpus", corpus / "corpus.json", "list"]),
        ("examples.schema.json", 0, ["examples", "--corpus", corpus / "corpus.json", "run", "--no-sample"]),
        ("parse.schema.json", 0, ["compose", corpus / "lemma43_h.map", corpus / "lemma43_g.map"]),
        ("parse.schema.json", 0, ["parse", corpus / "ex41iii.map"]),
        ("parse.schema.json", 0, ["parse", "--kind", "set", corpus / "sec1.set"]),
        ("error.schema.json", 1, ["classify", tmp / "bad.map"]),
        ("error.schema.json", 1, ["limit", corpus / "ex35.map", "--path", "(1/t)"]),
    ]

    failures = 0
    for schema, want_exit, args in runs:
        cmd = [cli] + [str(a) for a in args]
        label = " ".join(str(a) for a in args)
        proc = subprocess.run(cmd, capture_output=True, text=True, cwd=src)
        if proc.returncode != want_exit:
            print(f"FAIL {label}: exit {proc.returncode}, want {want_exit}\n{proc.stderr}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e})")
            failures += 1
            continue
        validator = Draft202012Validator(reg.contents(schema), registry=reg)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label} against {schema}")
            for e in errors[:5]:
                print("   ", "/".join(map(str, e.path)), e.message[:300])
        else:
            print(f"ok   {label}")
    print(f"{len(runs) - failures} of {len(runs)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
