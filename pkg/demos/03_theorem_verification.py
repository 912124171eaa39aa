"""Mechanical verification of the polar/polynomial comparison identities.

Three families of exact identities are checked symbolically:

1. the sharp transport of the odd polar solutions equals the singulator
   value on the monomial moulds, depth by depth;
2. the sharp transport of the weight -1 polar solution equals the
   mu-logarithm of paj divided by x_1 + ... + x_d;
3. the depth-3 comparison of the two polynomial families, including the
   vanishing of the discrepancy moulds in the tested range.

Every check is exact; failures would carry the nonzero residual.
"""

import json

from mouldcalc import (
    verify_comparison_theorem,
    verify_psi_minus1_theorem,
    verify_psi_odd_theorem,
)
from mouldcalc.verify import run_claim


def show(report):
    print(f"{report['claim']}: {report['status'].upper()}")
    for check in report["checks"]:
        mark = "ok " if check["status"] == "pass" else "FAIL"
        print(f"   [{mark}] {check['claim']}")
        if check["status"] != "pass":
            print("        residual:", check.get("residual"))


show(verify_psi_odd_theorem(1, 4))
show(verify_psi_odd_theorem(2, 3))
show(verify_psi_minus1_theorem(4))
for n in (1, 2, 3):
    show(verify_comparison_theorem(n))

print()
print("named claims also run through run_claim (as the CLI does):")
report = run_claim("pal-symmetral", depth=5)
print(json.dumps(report, sort_keys=True)[:120], "...")
