"""Run every verification sweep and write a JSON summary.

    python3 scripts/run_sweeps.py --seed 7 --out sweeps.json
    python3 scripts/run_sweeps.py --t1-max-n 7      # push the exhaustive sweep one size further
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, fields

from roughmat import verify


@dataclass
class SweepConfig:
    seed: int = 42
    t1_max_n: int = 6
    t2_samples: int = 200
    t2_max_n: int = 8
    t3_max_n: int = 6
    t4_max_n: int = 5
    random_samples: int = 500
    approx_max_n: int = 5
    out: str | None = None


def run_all(cfg: SweepConfig) -> list[verify.VerifyReport]:
    s = cfg.random_samples
    return [
        verify.check_t1(max_n=cfg.t1_max_n),
        verify.check_t2(samples=cfg.t2_samples, seed=cfg.seed, max_n=cfg.t2_max_n),
        verify.check_t3(max_n=cfg.t3_max_n),
        verify.check_t4(max_n=cfg.t4_max_n),
        verify.check_field_axioms(),
        verify.check_approximations(max_n=cfg.approx_max_n),
        verify.check_kernel_supports_dependent(samples=s // 2, seed=cfg.seed),
        verify.check_min_stability(samples=s, seed=cfg.seed),
        verify.check_partition_circuit_axioms(),
        verify.check_gf2_relation_equivalence(samples=s, seed=cfg.seed),
        verify.check_equal_matroids_equal_relations(samples=s // 2, seed=cfg.seed),
        verify.check_partition_roundtrip(),
        verify.check_bdm_roundtrip(samples=s, seed=cfg.seed),
        verify.check_bdm_criterion(samples=s // 2, seed=cfg.seed),
    ]


def parse_args(argv=None) -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        flag = "--" + f.name.replace("_", "-")
        kind = str if f.name == "out" else int
        ap.add_argument(flag, type=kind, default=f.default)
    return SweepConfig(**vars(ap.parse_args(argv)))


def main(argv=None) -> int:
    cfg = parse_args(argv)
    reports = run_all(cfg)
    for r in reports:
        print(f"{r.theorem:<36} {r.instances:>7} instances  {len(r.failures):>3} failures  {r.wall_time:7.2f}s")
        for msg in r.failures[:5]:
            print("    " + msg)
    total = sum(r.wall_time for r in reports)
    ok = all(r.ok for r in reports)
    print(f"{'total':<36} {sum(r.instances for r in reports):>7} instances  {total:7.2f}s  {'PASS' if ok else 'FAIL'}")
    if cfg.out:
        summary = {
            "config": asdict(cfg),
            "reports": [
                {"theorem": r.theorem, "instances": r.instances, "failures": r.failures, "wall_time": r.wall_time}
                for r in reports
            ],
        }
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
