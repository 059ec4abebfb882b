"""Exhaustive Z_n sweep: uniqueness, index agreement and additive laws."""

import argparse
import sys
import time
from dataclasses import replace

from weakcore.oracle import (
    ScanConfig,
    abelian_cross_check,
    additive_law_scan,
    brute_force,
    build_ring,
    uniqueness_violations,
    zn_drazin_index,
)
from weakcore.verify import InverseKind


def scan(cfg: ScanConfig) -> dict:
    violations, mismatches, non_abelian = [], [], []
    for n in cfg.moduli:
        ring = build_ring(n)
        violations += uniqueness_violations(ring, list(cfg.kinds), cfg.k_max)
        for a in ring.elements:
            if brute_force(ring, a, InverseKind.WEAK_CORE, cfg.k_max).k != zn_drazin_index(ring, a, cfg.k_max):
                mismatches.append((n, a))
        if not abelian_cross_check(ring, cfg.k_max):
            non_abelian.append(n)
    additive = {n: additive_law_scan(build_ring(n), cfg.k_max) for n in cfg.additive_moduli}
    return {
        "violations": violations,
        "index_mismatches": mismatches,
        "cross_check_failures": non_abelian,
        "additive": {n: (len(c), sum(not x.holds for x in c)) for n, c in additive.items()},
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-modulus", type=int, default=ScanConfig.max_modulus)
    p.add_argument("--kmax", type=int)
    a = p.parse_args(argv)
    cfg = replace(ScanConfig(max_modulus=a.max_modulus), k_max=a.kmax)
    start = time.perf_counter()
    out = scan(cfg)
    print(f"{len(cfg.moduli)} squarefree moduli up to {cfg.max_modulus}, {time.perf_counter() - start:.1f} s")
    print(f"uniqueness violations: {len(out['violations'])}")
    print(f"index mismatches: {len(out['index_mismatches'])}")
    print(f"abelian cross-check failures: {out['cross_check_failures'] or 'none'}")
    for n, (total, bad) in out["additive"].items():
        print(f"additive laws on Z_{n}: {total} checked, {bad} counterexamples")
    clean = not (out["violations"] or out["index_mismatches"] or out["cross_check_failures"])
    clean = clean and all(bad == 0 for _, bad in out["additive"].values())
    return 0 if clean else 3


if __name__ == "__main__":
    sys.exit(main())
