#!/usr/bin/env python3
"""Write benchmark state files (Bell, GHZ, W, a random product) as state JSON.

The files are consumable by the CLI, e.g.:

    python scripts/write_fixture_states.py --out-dir fixtures
    qsegre concurrence --state fixtures/bell.json
"""

import argparse
import json
import math
from pathlib import Path

from qsegre import segre_map, state_to_json
from qsegre.sampling import default_rng, random_local_state


def ghz_amps(m):
    amps = [[0, 0]] * (2 ** m)
    amps[0] = [1, 0]
    amps[-1] = [1, 0]
    return amps


def w3_amps():
    s = 1.0 / math.sqrt(3.0)
    amps = [[0.0, 0.0] for _ in range(8)]
    for off in (1, 2, 4):
        amps[off] = [s, 0.0]
    return amps


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="fixtures")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--modes", type=int, default=3, help="mode count for the product fixture")
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    # exact integer amplitudes: the CLI picks the rational backend for these
    files = {
        "bell.json": {"dims": [2, 2], "amps": [[1, 0], [0, 0], [0, 0], [1, 0]]},
        "ghz3.json": {"dims": [2, 2, 2], "amps": ghz_amps(3)},
        "w3.json": {"dims": [2, 2, 2], "amps": w3_amps()},
    }
    rng = default_rng(args.seed)
    product = segre_map([random_local_state(rng, 2) for _ in range(args.modes)])
    files[f"product{args.modes}.json"] = state_to_json(product)

    for name, obj in files.items():
        path = out / name
        path.write_text(json.dumps(obj) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
