"""Print Kerov polynomials, their transport-count reconstruction, and covariances.

    python scripts/kerov_table.py --max-k 7
"""
import argparse
import time

from kerov.kerov import cumulant_polynomial, kerov_polynomial, positivity_report
from kerov.polynomials import graded_degree
from kerov.transport import transport_polynomial


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-k", type=int, default=7)
    parser.add_argument("--skip-maps", action="store_true", help="do not recount coefficients from decorated maps")
    args = parser.parse_args()

    for k in range(1, args.max_k + 1):
        t0 = time.perf_counter()
        p = kerov_polynomial(k)
        line = f"Ch_{k} = {p}"
        if not args.skip_maps:
            agree = transport_polynomial(k) == p
            line += f"    [maps {'agree' if agree else 'DISAGREE'}]"
        print(f"{line}    ({time.perf_counter() - t0:.2f}s)")

    print()
    for k in range(2, 5):
        for l in range(2, k + 1):
            if k + l > args.max_k:
                continue
            cov = cumulant_polynomial((k, l))
            sign = "-" if positivity_report(-cov).ok and cov else "+"
            print(f"Cov(Ch_{k}, Ch_{l}) = {cov}    degree {graded_degree(cov)} < {k + l + 2}, sign {sign}")


if __name__ == "__main__":
    main()
