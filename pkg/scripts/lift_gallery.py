#!/usr/bin/env python3
"""Print the lift polynomials v_k with their T images and certificates.

For each cell of the grid the script shows v_k in canonical order, the
substitution x_m = y_n = T (whose T derivative must vanish), the
restriction x_m = 0 (which must equal the core u_k one level down) and
the generator certificate produced by decompose.

Example:
    python scripts/lift_gallery.py --p 3 --max-mn 2
"""

import argparse
import sys
from dataclasses import dataclass

from supersympoly import (
    Ring,
    d_dT,
    decompose,
    make_v,
    poly_to_str,
    psi,
    serialize_gen_expr,
    set_xm_zero,
    u_k,
    verify_decomposition,
)


@dataclass(frozen=True)
class GalleryConfig:
    p: int = 3
    max_mn: int = 2


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--max-mn", type=int, default=2)
    args = parser.parse_args()
    config = GalleryConfig(p=args.p, max_mn=args.max_mn)

    p = config.p
    for m in range(1, config.max_mn + 1):
        for n in range(1, config.max_mn + 1):
            for k in range(1, p):
                v = make_v(p, k, m, n)
                image = psi(v)
                restricted = set_xm_zero(v)
                core = u_k(k, Ring(m - 1, n, False, p))
                cert = decompose(v)
                assert d_dT(image).is_zero
                assert restricted == core
                assert verify_decomposition(v, cert)
                print(f"p={p} k={k} level ({m},{n}), degree {v.degree()}")
                print(f"  v        = {poly_to_str(v)}")
                print(f"  T image  = {poly_to_str(image)}")
                print(f"  x_m -> 0 = {poly_to_str(restricted)}")
                print(f"  cert     = {serialize_gen_expr(cert)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
