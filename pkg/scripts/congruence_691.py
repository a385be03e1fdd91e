"""Print tau(n), sigma_11(n) and their difference over 691 for small n."""
import sys

from gsp4adj import modforms


def main(bound=30):
    q, _ = modforms.eisenstein_congruence_demo(max(bound, 50))
    tau = modforms.delta(bound)
    print(f"{'n':>4} {'tau(n)':>16} {'sigma_11(n)':>20} {'(sigma-tau)/' + str(q):>18}")
    for n in range(1, bound + 1):
        t, s = int(tau[n]), modforms.sigma(11, n)
        print(f"{n:>4} {t:>16} {s:>20} {(s - t) // q:>18}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 30)
