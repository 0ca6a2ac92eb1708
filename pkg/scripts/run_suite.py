#!/usr/bin/env python3
"""Run the full verification suite and print a summary table.

Usage:
    python scripts/run_suite.py [--max-order N] [--json out.json]
"""

import argparse
import json
import time

from grouplie.verify import run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=24)
    ap.add_argument("--json", default=None, help="write the full report here")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    result = run_suite(max_order=args.max_order, seed=args.seed)
    elapsed = time.perf_counter() - t0

    by_group: dict[str, list] = {}
    for r in result.reports:
        by_group.setdefault(r.group_name, []).append(r)
    for name, reports in sorted(by_group.items()):
        ok = all(r.all_ok for r in reports)
        dims = ", ".join(f"{r.alpha_label}/{r.tau_label}:{r.dim_l_rank}" for r in reports)
        print(f"{'ok ' if ok else 'FAIL'} {name:>14} [{dims}]")
    print(
        f"\n{result.contexts} contexts, {len(result.clifford)} clifford, "
        f"{len(result.kawanaka)} kawanaka checks in {elapsed:.1f}s: "
        + ("all pass" if result.all_ok else "FAILURES PRESENT")
    )
    if args.json:
        payload = {
            "contexts": result.contexts,
            "all_ok": result.all_ok,
            "reports": [r.to_json_dict() for r in result.reports],
        }
        with open(args.json, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
        print(f"wrote {args.json}")
    return 0 if result.all_ok else 2


if __name__ == "__main__":
    raise SystemExit(main())
