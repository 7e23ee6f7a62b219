"""Coupling length at random rational moduli points instead of the default one.

For each (m, r) draws points a with distinct integer entries outside {0, 1},
then records source/target dims, the explicit-matrix cross-check and the
certified length. Generic points should all reproduce m/r - 1.

    python3 scripts/random_points.py --pairs 6:2,6:3,8:2 --points 5
"""

import argparse
import sys

import numpy as np

from yukawa_length.higgs import coupling_length
from yukawa_length.jacobian import (
    cross_check_explicit_matrix,
    source_piece,
    target_piece,
    validate_params,
    validate_point,
)


def random_point(rng: np.random.Generator, size: int, spread: int) -> tuple[int, ...]:
    pool = [x for x in range(-spread, spread + 1) if x not in (0, 1)]
    return tuple(int(x) for x in rng.choice(pool, size=size, replace=False))


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", default="4:2,6:2,6:3,8:2")
    ap.add_argument("--points", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--spread", type=int, default=12)
    args = ap.parse_args()

    rng = np.random.Generator(np.random.PCG64(args.seed))
    ok = True
    for item in args.pairs.split(","):
        m, r = (int(x) for x in item.split(":"))
        params = validate_params(m, r)
        for _ in range(args.points):
            point = validate_point(params, random_point(rng, m - 3, args.spread))
            cert = coupling_length(params, point)
            agree = cross_check_explicit_matrix(params, point, (1,) * (m - 3))
            dims = (source_piece(params, point).dim, target_piece(params, point).dim)
            good = cert.complete and cert.length == params.k_minus_1 and agree and dims == (params.n, params.k_minus_1)
            ok &= good
            print(f"(m,r)=({m},{r}) a={point} dims={dims} length={cert.length} cross_check={agree} {'ok' if good else 'MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
