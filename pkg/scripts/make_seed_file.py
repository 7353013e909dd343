#!/usr/bin/env python3
"""Write an example seed file and drive the CLI against it.

The emitted file carries the reciprocal-seed family on P = {2, 5, 7} whose
values come out to [n]_{q^3} / [n]_q; handy as a template for custom seeds.
"""

import json
import sys

from qfe.cli import SEEDS_257, main


def seed_spec() -> dict:
    return {
        "ring": {"kind": "rational"},
        "primes": [2, 5, 7],
        "seeds": {str(p): [str(c) for c in h.coeffs]
                  for p, h in SEEDS_257.items()},
    }


if __name__ == "__main__":
    path = sys.argv[1] if len(sys.argv) > 1 else "seeds-257.json"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(seed_spec(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {path}")
    sys.exit(max(
        main(["construct", path, "--upto", "20"]),
        main(["verify", path, "--upto", "50"]),
        main(["decompose", path, "--upto", "50"]),
    ))
