"""Run the full consistency report over a batch of random rational matrices.

    python scripts/identity_sweep.py --count 500 --max-size 6 --seed 1
"""

import argparse
import collections
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from weakcore.report import consistency_report
from weakcore.sampling import SampleConfig, random_matrices


@dataclass
class SweepConfig:
    count: int = 200
    sample: SampleConfig = field(default_factory=SampleConfig)
    json_out: str | None = None


def run(cfg: SweepConfig) -> dict:
    start = time.perf_counter()
    mats = random_matrices(cfg.count, cfg.sample)
    failures = []
    by_index = collections.Counter()
    for m in mats:
        rep = consistency_report(m)
        by_index[rep.drazin_index] += 1
        if not rep.all_pass:
            failures.append({"matrix": m.to_strings(), "failed": rep.failures()})
    return {
        "config": asdict(cfg),
        "matrices": len(mats),
        "drazin_index_histogram": dict(sorted(by_index.items())),
        "failures": failures,
        "seconds": round(time.perf_counter() - start, 2),
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--min-size", type=int, default=2)
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--bound", type=int, default=9)
    p.add_argument("--seed", type=int, default=SampleConfig.seed)
    p.add_argument("--json-out")
    a = p.parse_args(argv)
    cfg = SweepConfig(a.count, SampleConfig(a.min_size, a.max_size, a.bound, a.seed), a.json_out)
    result = run(cfg)
    print(f"{result['matrices']} matrices in {result['seconds']} s")
    print("Drazin index histogram:", result["drazin_index_histogram"])
    print(f"{len(result['failures'])} matrices with failing identities")
    for f in result["failures"][:5]:
        print("  ", f["matrix"], f["failed"])
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(result, fh, indent=2)
    return 1 if result["failures"] else 0


if __name__ == "__main__":
    sys.exit(main())
