"""
Checking the extremal statements
================================

verify_claims runs every ordering check at one n and reports each one
with what was expected and what was observed.
"""

from skewenergy import verify_claims

for n in (5, 6):
    report = verify_claims(n)
    print(f"n={n}: all passed = {report.all_passed}")
    for c in report.claims:
        mark = "ok  " if c.passed else "FAIL"
        print(f"  {mark} {c.name}: expected {c.expected}; observed {c.observed}")
