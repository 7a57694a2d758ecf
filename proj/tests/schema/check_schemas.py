"""Run a corpus of jobs through the CLI and validate jobs and outputs against schemas/."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

CORPUS = [
    ("dual", {"type": "B3", "isogeny": "adjoint"}),
    ("dual", {"root_datum": {"rank": 2, "simple_roots": [[1, -1]], "simple_coroots": [[1, -1]]}}),
    ("pi1", {"type": "A1+T1", "isogeny": "sc"}),
    ("outer", {"type": "D4", "isogeny": "sc"}),
    ("classify-quasisplit", {"type": "D4", "gamma": {"symmetric": 3}}),
    ("classify-quasisplit", {"gamma": {"cyclic": 2}, "out": {"cyclic": 2}}),
    ("coinvariants", {"type": "A2", "isogeny": "adjoint", "gamma": {"cyclic": 2}, "rho": [0, 1], "height": 2}),
    ("h1", {"gamma": {"cyclic": 2}, "group": {"symmetric": 3}}),
    ("h2", {"gamma": {"product": [{"cyclic": 2}, {"cyclic": 2}]}, "moduli": [2]}),
    ("h2", {"gamma": {"cyclic": 2}, "moduli": [4], "action": [[[1]], [[-1]]], "cocycle": [[0, 0], [0, 2]],
            "p_orders": [2]}),
    ("boundary", {"gamma": {"cyclic": 2}, "z": {"group": {"cyclic": 2}}, "b": {"group": {"cyclic": 4}},
                  "c": {"group": {"cyclic": 2}}, "inclusion": [0, 2], "projection": [0, 1, 0, 1], "cocycle": [0, 1]}),
    ("hilbert", {"a": -1, "b": -1}),
    ("hilbert", {"a": "-3/5", "b": 14, "place": "inf"}),
    ("brauer-class", {"a": 2, "b": 5}),
    ("brauer-class", {"invariants": {"2": "1/2", "inf": "1/2"}}),
    ("crossed-product", {"d": -1, "c": -1, "structure_constants": True}),
    ("crossed-product", {"d": 2, "c": 7}),
    ("crossed-product", {"extension": {"field": {"kind": "cyclotomic", "n": 5}}}),
    ("crossed-product", {"extension": {"field": {"kind": "cyclotomic", "n": 8}, "subgroup": [0, 3]}, "c": 3}),
    ("descend", {"extension": {"field": {"kind": "quadratic", "d": -1}}, "dim": 2,
                 "maps": [[[[1, 0], [0, 0]], [[0, 0], [1, 0]]], [[[0, 1], [0, 0]], [[0, 0], [0, -1]]]]}),
    ("descend", {"extension": {"field": {"kind": "quadratic", "d": -1}}, "dim": 1,
                 "cocycle": [[1, 0], [1, 0], [1, 0], [-1, 0]], "maps": [[[[1, 0]]], [[[0, 1]]]]}),
    ("inner-invariant", {"type": "D4", "isogeny": "adjoint", "assignments": [{"d": -1, "c": -1}, {"d": -1, "c": 3}]}),
    ("inner-invariant", {"type": "A2", "isogeny": "adjoint", "c": ["-1"]}),
]

# Jobs the CLI must reject with an error document; they need not match a job schema.
MALFORMED = [
    ("pi1", {"type": "Q9"}),
    ("hilbert", {"a": 0, "b": 1}),
]


def main():
    cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
    resources = []
    for path in root.rglob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    registry = Registry().with_resources(resources)

    def validator(rel):
        doc = json.loads((root / rel).read_text())
        Draft202012Validator.check_schema(doc)
        return Draft202012Validator(doc, registry=registry)

    error_validator = validator("error.schema.json")
    failures = 0
    cases = [(c, j, True) for c, j in CORPUS] + [(c, j, False) for c, j in MALFORMED]
    for command, job, well_formed in cases:
        job = {"schema": "gforms/job/v1", "command": command, **job}
        problems = []
        if well_formed:
            problems += [e.message for e in validator(f"jobs/{command}.schema.json").iter_errors(job)]
        run = subprocess.run([cli, command, "--job", "-"], input=json.dumps(job), capture_output=True, text=True)
        out = json.loads(run.stdout)
        target = validator(f"results/{command}.schema.json") if run.returncode == 0 else error_validator
        problems += [e.message for e in target.iter_errors(out)]
        if run.returncode not in ((0, 1) if well_formed else (2,)):
            problems.append(f"exit code {run.returncode}")
        status = "ok" if not problems else "INVALID"
        print(f"{status:8} {command:20} exit {run.returncode}")
        for p in problems[:3]:
            print("         ", p[:200])
        failures += bool(problems)
    print(f"{len(cases) - failures}/{len(cases)} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
