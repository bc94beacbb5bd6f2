"""Run the full verification pipeline on a small suite and summarize."""

import json

from reesaci.report import default_suite, run_suite

entries = [e for e in default_suite(max_a=3)] + [{"m": 3, "a": [3, 3, 3], "b": [0, 0, 1]}]
summary, results = run_suite(entries)
print(json.dumps(summary, sort_keys=True))
for r in results:
    if r["status"] == "invalid":
        print("rejected:", r["input"], "-", r["error"])
