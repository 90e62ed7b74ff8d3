"""Cross-validate the operator kernels against the dimension formulas.

Two fully independent routes to dim M_k: the exact nullspace of the assembled
first-order operator on degree-k spinors, and the sum of classical dimension
formulas over the summand labels.  Any mismatch is a bug in one of them.

Usage: python scripts/kernel_audit.py [--max-degree K]
"""

import argparse
import time
from dataclasses import dataclass

from monogenic.calibration import build_calibrated, find_calibration
from monogenic.dirac import graded_kernel_dim
from monogenic.repn import decompose_Mk


@dataclass(frozen=True)
class AuditConfig:
    max_degree: int = 5


def run(config: AuditConfig) -> bool:
    calibration, _ = find_calibration()
    op = build_calibrated(calibration)
    print(f"calibration: epsilon={calibration.epsilon:+d}, norm={calibration.clifford_norm}")
    all_ok = True
    for k in range(config.max_degree + 1):
        t0 = time.time()
        nullity = graded_kernel_dim(op, k)
        weyl = sum(desc.dimension for _, desc in decompose_Mk(k))
        ok = nullity == weyl
        all_ok &= ok
        print(
            f"degree {k}: nullspace {nullity:>6}  formulas {weyl:>6}  "
            f"{'ok' if ok else 'MISMATCH'}  ({time.time() - t0:.2f}s)"
        )
    return all_ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-degree", type=int, default=5)
    args = parser.parse_args()
    return 0 if run(AuditConfig(max_degree=args.max_degree)) else 1


if __name__ == "__main__":
    raise SystemExit(main())
