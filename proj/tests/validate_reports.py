#!/usr/bin/env python3
# Copyright 2026 The colexwidth Authors
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

"""Runs every subcommand with --json and validates the output against the schema.

Usage: validate_reports.py <colexwidth> <fixtures dir> <report.schema.json>
"""

import json
import os
import subprocess
import sys

import jsonschema

FIXTURES = ["a1.dfa", "a2.dfa", "a3.dfa", "acstar.dfa", "one_state.dfa", "aloop.dfa"]
CHAINS = {
    "a2.dfa": "0,1,4|2,3,5,6",
    "a3.dfa": "0,1,3|2,4,5,6",
    "acstar.dfa": "0,1,2",
}


def main():
    exe, fixtures, schema_path = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = []
    count = 0

    def run(args, expect):
        result = subprocess.run([exe] + args + ["--json"], capture_output=True, text=True)
        if result.returncode not in expect:
            failures.append(f"{args}: exit {result.returncode}, stderr {result.stderr.strip()}")
            return None
        try:
            doc = json.loads(result.stdout)
        except json.JSONDecodeError as e:
            failures.append(f"{args}: not JSON ({e})")
            return None
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            failures.append(f"{args}: {'/'.join(map(str, e.path))}: {e.message}")
        return doc

    for name in FIXTURES:
        path = os.path.join(fixtures, name)
        for cmd in ["order", "width-dfa", "minimize"]:
            run([cmd, path], {0})
            count += 1
        run(["check-wheeler", path], {0, 1})
        count += 1
        lang = run(["width-lang", path], {0})
        count += 1
        if lang is not None and lang["certificate"] is not None:
            cert = json.dumps(lang["certificate"])
            check = run(["verify-witness", path, "--cert", cert], {0})
            count += 1
            if check is not None and not check["valid"]:
                failures.append(f"{name}: certificate does not re-verify: {check['reasons']}")
        if name in CHAINS:
            for cmd in ["psort-check", "psort-min"]:
                run([cmd, path, "--chains", CHAINS[name]], {0})
                count += 1

    # A deliberately broken certificate still yields a schema-valid report.
    bad = json.dumps({"k": 2, "states": [1, 2], "mus": ["a", "b"], "gamma": "d",
                      "direction": "mus_below_gamma"})
    doc = run(["verify-witness", os.path.join(fixtures, "a1.dfa"), "--cert", bad], {1})
    count += 1
    if doc is not None and (doc["valid"] or not doc["reasons"]):
        failures.append("broken certificate accepted or reported without reasons")

    for f in failures:
        print("FAIL", f)
    print(f"{count} reports checked, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
