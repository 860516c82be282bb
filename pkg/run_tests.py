#!/usr/bin/env python
"""
Run tests for polydec.

Usage:
    python run_tests.py              # Run all tests
    python run_tests.py --fast       # Skip the exhaustive oracle sweeps
    python run_tests.py --cov        # With coverage report
"""

import subprocess
import sys


def main():
    """Run pytest with provided arguments."""
    args = ["pytest"]
    for arg in sys.argv[1:]:
        if arg == "--fast":
            args += ["-m", "not slow"]
        elif arg == "--cov":
            args += ["--cov=polydec", "--cov-report=term-missing"]
        else:
            args.append(arg)

    # Add default verbosity if not specified
    if "-v" not in args and "--verbose" not in args:
        args.append("-v")

    result = subprocess.run(args)
    sys.exit(result.returncode)


if __name__ == "__main__":
    main()
