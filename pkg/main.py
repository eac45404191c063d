#!/usr/bin/env python3
"""
qsc - overpartition k-tuple toolkit, command-line entry point.

Layout:
- src/series/: truncated power series over ZZ and Z/M
- src/theta/: theta functions and named identities
- src/counting/: pbar_k(n), r_k(n), oracles and classifiers
- src/verify/: check registry and reports
- src/cli/: commands coeff, verify, list, report
"""

import sys
import os

# Make the package importable when run from a checkout
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli import main as cli_main


def main():
    try:
        return cli_main(sys.argv[1:])
    except KeyboardInterrupt:
        return 130
    except Exception as e:
        print(f"qsc crashed: {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
