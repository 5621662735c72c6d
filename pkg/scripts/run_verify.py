"""Run the full verification suite and write a JSON report.

    python3 scripts/run_verify.py [--seed 7] [--report report.json] [--extended]
"""
import sys

from quatlie import cli

if __name__ == "__main__":
    args = sys.argv[1:]
    if "--report" not in args:
        args += ["--report", "report.json"]
    sys.exit(cli.main(["verify", "--checks", "all"] + args))
