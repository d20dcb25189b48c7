"""Validate CLI outputs against the shipped JSON schemas.

Usage: validate_schemas.py <segre binary> <schema dir> <scratch dir>
"""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def main() -> int:
    binary, schema_dir, scratch = (pathlib.Path(p) for p in sys.argv[1:4])
    scratch.mkdir(parents=True, exist_ok=True)
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

    def run(*args: str) -> str:
        return subprocess.run([str(binary), *map(str, args)], check=True, capture_output=True, text=True).stdout

    tensor = scratch / "tensor.json"
    run("realize", "--n", "2", "--r", "7", "-o", tensor)
    matrix = scratch / "matrix.json"
    matrix.write_text(json.dumps({"w": [["1", "2"], ["3", "5/2"]]}))
    data = scratch / "data.json"
    data.write_text(json.dumps({"u": [[[3, 5, 2], [7, 2, 1]], [[4, 9, 6], [6, 8, 3]]]}))
    atlas, signs = scratch / "atlas.json", scratch / "signs.json"
    run("atlas", "-o", atlas)
    run("signs", "--samples", "500", "-o", signs)

    documents = {
        "tensor.schema.json": json.loads(tensor.read_text()),
        "matrix.schema.json": json.loads(matrix.read_text()),
        "data.schema.json": json.loads(data.read_text()),
        "analysis.schema.json": json.loads(run("analyze", tensor, "--json")),
        "pattern.schema.json": json.loads(tensor.read_text())["verification"]["pattern"],
        "count.schema.json": json.loads(run("oracle", matrix)),
        "atlas.schema.json": json.loads(atlas.read_text()),
        "signs.schema.json": json.loads(signs.read_text()),
    }
    failed = 0
    for name, doc in documents.items():
        errors = list(Draft202012Validator(schemas[name], registry=registry).iter_errors(doc))
        for e in errors:
            print(f"{name}: {e.message}")
        failed += bool(errors)
        print(f"{'ok  ' if not errors else 'FAIL'} {name}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
