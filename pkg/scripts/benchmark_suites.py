#!/usr/bin/env python
"""
Benchmark script for the polyhopf property suites.

Runs every registered property several times at a fixed trial count and collects wall-clock
timings and residuals per property.

Usage:
    python scripts/benchmark_suites.py [suite] [trials]

Configuration:
    - Runs each property NUM_RUNS times with seeds derived from BASE_SEED
    - Measures p50, p95 and p99 latency percentiles
    - Outputs results to benchmark_results.json and console
"""

import json
import statistics
import sys
import time
from datetime import datetime
from typing import Any

from polyhopf.seeding import child_seed
from polyhopf.verification import select

NUM_RUNS = 5
BASE_SEED = 2024
DEFAULT_TRIALS = 1000


def calculate_percentiles(latencies: list[float]) -> dict[str, float]:
    """Calculate percentile latencies."""
    if not latencies:
        return {"p50": 0.0, "p95": 0.0, "p99": 0.0, "avg": 0.0}

    sorted_latencies = sorted(latencies)
    return {
        "p50": sorted_latencies[int(len(sorted_latencies) * 0.5)],
        "p95": sorted_latencies[int(len(sorted_latencies) * 0.95)],
        "p99": sorted_latencies[int(len(sorted_latencies) * 0.99)],
        "avg": statistics.mean(latencies),
    }


def run_benchmark(suite: str, trials: int) -> dict[str, Any]:
    """Time every property of a suite over NUM_RUNS seeded runs."""
    print("=" * 80)
    print("polyhopf Property Benchmark")
    print("=" * 80)
    print(f"Suite: {suite}  Trials: {trials}  Runs per property: {NUM_RUNS}")
    print("-" * 80)

    results: dict[str, Any] = {
        "timestamp": datetime.now().isoformat(),
        "suite": suite,
        "trials": trials,
        "num_runs": NUM_RUNS,
        "properties": {},
    }

    for index, check in select(suite):
        latencies = []
        residuals = []
        failures = 0
        print(f"{check.suite}/{check.name}: ", end="", flush=True)
        for run in range(NUM_RUNS):
            start = time.perf_counter()
            result = check.run(trials, child_seed(BASE_SEED + run, index))
            latencies.append(time.perf_counter() - start)
            residuals.append(result.max_residual)
            failures += not result.passed
        print(f"{statistics.mean(latencies):.3f}s")
        results["properties"][check.name] = {
            "suite": check.suite,
            "latency": calculate_percentiles(latencies),
            "max_residual": max(residuals),
            "failures": failures,
        }

    print("-" * 80)
    print()
    return results


def print_results(results: dict[str, Any]) -> None:
    """Print benchmark results in markdown table format."""
    print(f"Benchmark Results: {results['suite']} suite, {results['trials']} trials")
    print()
    print("| Property | p50 (s) | p95 (s) | Avg (s) | Max residual | Failures |")
    print("|----------|---------|---------|---------|--------------|----------|")
    for name, entry in results["properties"].items():
        latency = entry["latency"]
        print(
            f"| {name} | {latency['p50']:.3f} | {latency['p95']:.3f} | {latency['avg']:.3f} | "
            f"{entry['max_residual']:.2e} | {entry['failures']}/{results['num_runs']} |"
        )
    print()


def save_results(results: dict[str, Any], filename: str = "benchmark_results.json") -> None:
    """Save benchmark results to JSON file."""
    with open(filename, "w") as f:
        json.dump(results, f, indent=2)
    print(f"Results saved to {filename}")


def main() -> int:
    """Main entry point."""
    suite = sys.argv[1] if len(sys.argv) > 1 else "all"
    trials = int(sys.argv[2]) if len(sys.argv) > 2 else DEFAULT_TRIALS
    try:
        results = run_benchmark(suite, trials)
        print_results(results)
        save_results(results)
        return 0
    except KeyboardInterrupt:
        print("\nBenchmark interrupted by user")
        return 1
    except ValueError as e:
        print(f"ERROR: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
