"""One-shot analysis reports, as emitted by the command line tool.

Run with: python3 demos/07_reports.py
"""

import json

from subtiling import cli

spec = cli.corpus_lookup("rauzy2-gamma")
report = cli.run_analysis(spec)

summary = {
    "input": report["input"]["name"],
    "pisot": report["facts"]["pisot"],
    "irreducible": report["facts"]["characteristic_irreducible"],
    "admissible": report["facts"]["admissible"],
    "height_group": report["checks"]["height_group"]["group"]["display"],
    "simultaneous": report["checks"]["simultaneous"]["status"],
    "overlap": report["checks"]["overlap_coincidence"]["status"],
    "spectral": report["checks"]["spectral"]["status"],
}
print(json.dumps(summary, indent=2))

print("\nexit code:", cli.report_exit_code(report))
print("witness replay:", cli.verify_report(report)["passed"])

print("\nthe full report is plain JSON; the same document comes from:")
print("  subtiling analyze rauzy2-gamma")
