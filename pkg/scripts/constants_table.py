"""Table of C_{k,k'} and the assembled constant for small weights."""
import sys

from gsp4adj import constants
from gsp4adj.exactnum import fraction_str


def main(max_k=4, level=1):
    print("| k | k' | C' | main1 constant |")
    print("|---|---|---|---|")
    for k in range(max_k + 1):
        for kp in range(k + 1):
            c = constants.cprime(k, kp)
            m = constants.main1_constant(k, kp, level)
            print(f"| {k} | {kp} | {fraction_str(c)} | {fraction_str(m.coeff)} * pi^{m.pi_exp} |")


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:]]
    main(*args)
