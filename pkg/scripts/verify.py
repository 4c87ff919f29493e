# scripts/verify.py
import argparse
import sys

from dpk.cli import RunConfig, emit, run_suite
from dpk.cli.verify import suite_failed
from dpk.config import configure_logging


def main():
    parser = argparse.ArgumentParser(description="Run the dpk verification checks")
    parser.add_argument("--suite", choices=["fast", "full"], default="fast")
    parser.add_argument("--log-level", default="INFO")
    args = parser.parse_args()

    configure_logging(args.log_level)
    table = run_suite(args.suite)
    emit(table, RunConfig(command="verify", parameters={"suite": args.suite}))
    if suite_failed(table):
        print("⚠ some checks failed", file=sys.stderr)
        sys.exit(2)
    print(f"✅ {len(table.rows)} checks passed", file=sys.stderr)


if __name__ == "__main__":
    main()
