"""Reports: fan analysis, randomized verification suites, CLI round trip.

analyze() classifies a fan over a root datum (validity, chamber support,
smoothness, properness, per-chart data); run_suite() drives the seeded
property suites that back the command-line `verify` subcommand.  Both
reports serialize to JSON with exact rationals as "p/q" strings.
"""

import json

from toroidal.analysis import analyze, report_status
from toroidal.cones import Cone, Fan
from toroidal.rootdata import RootDatum
from toroidal.serialize import dumps_report
from toroidal.suites import SUITE_NAMES, run_suite

rd = RootDatum([[2, 0], [0, 2]])
fan = Fan([Cone([(-1, 0), (-1, -2)])], dim=2)
report = analyze(rd, fan)
print("status:", report_status(report))
print("charts:", report["chart_count"], "| smooth:", report["smooth"], "| proper:", report["proper"])
for cone in report["cones"]:
    print(
        "  cone",
        cone["rays"],
        "index",
        cone["index"],
        "basis",
        cone["hilbert_basis"],
    )

bad = analyze(rd, Fan([Cone([(1, 0)])], dim=2))
print("\npositive ray fan status:", report_status(bad))

print("\navailable suites:", SUITE_NAMES)
suite = run_suite("theta", rank=2, cases=5, seed=42)
print("suite", suite.suite, "rank", suite.rank, "all_pass:", suite.all_pass)
for prop in suite.properties:
    print(f"  {prop.name}: {prop.cases} cases, passed={prop.passed}")

# identical seeds reproduce the serialized report byte for byte
again = run_suite("theta", rank=2, cases=5, seed=42)
assert [p.name for p in again.properties] == [p.name for p in suite.properties]
assert all(
    (a.passed, a.cases, a.counterexample) == (b.passed, b.cases, b.counterexample)
    for a, b in zip(suite.properties, again.properties)
)
print("rerun with the same seed reproduces the report")

payload = dumps_report(report)
print("\nserialized analysis report:", len(payload), "bytes of JSON")
print("first cone as JSON:", json.dumps(json.loads(payload)["cones"][0]["rays"]))
print("\nthe same reports are available from the command line:")
print("  toroidal analyze --root-datum rd.json --fan fan.json --out report.json")
print("  toroidal verify --suite all --rank 2 --cases 25 --seed 0")
print("  toroidal hilbert --rays '[[1,0],[1,2]]'")
