"""Kernel transforms and contraction limits.

Two ways the families are related to each other:

* The Christoffel transform at the point x = 1 maps the big -1 Jacobi
  polynomials to their kernel partners, and the Geronimus transform maps
  them back; when 1 - c^2 is a rational square the kernel sequence is,
  after exact rescaling, a Chihara sequence.  All of this is exact.

* Three parameter contractions connect the families analytically.  They
  involve irrational scalings, so they are verified in floating point on
  a geometric step grid: errors must shrink monotonically with empirical
  convergence order near 1.
"""

from fractions import Fraction as F

from dunklpoly import big_m1_jacobi_family, generate_monic
from dunklpoly.limits import bigq_case, cbi_case, run_limit
from dunklpoly.transforms import (
    christoffel,
    geronimus,
    kernel_map,
    kernel_to_chihara,
    split_ratios,
)


def main() -> None:
    a, b, c = F(1), F(1), F(3, 5)
    family = big_m1_jacobi_family(a, b, c)
    print(f"kernel transform demo for {family.name} ({family.label()}):")
    polys = generate_monic(family, 9)
    a_ratios, c_ratios = split_ratios(family, 9)
    kernels = christoffel(polys, a_ratios)
    back = geronimus(kernels, c_ratios)
    print(f"  round trip P -> K -> P exact for n <= 8: "
          f"{all(back[n] == polys[n] for n in range(9))}")

    kmap = kernel_map(a, b, c)
    residuals = kernel_to_chihara(kmap, kernels)
    print(f"  kernel sequence is Chihara(alpha={kmap.alpha}, beta={kmap.beta}, "
          f"gamma={kmap.gamma_exact}) after rescaling by {kmap.scale_exact}: "
          f"{all(r.is_zero for r in residuals)}")
    print()

    print("contraction limit: shift family -> Chihara (step h -> 0):")
    report = run_limit(cbi_case())
    for result in report.results:
        print(f"  h = {result.step:.0e}:  max poly error "
              f"{result.max_poly_error:.3e}")
    print(f"  empirical overall order: {report.overall_order:.3f} "
          f"(converged: {report.converged})")
    print()

    print("contraction limit: big q-Jacobi at q -> -1 (step eps -> 0):")
    report = run_limit(bigq_case())
    for result in report.results:
        print(f"  eps = {result.step:.0e}:  max poly error "
              f"{result.max_poly_error:.3e}")
    print(f"  empirical overall order: {report.overall_order:.3f} "
          f"(converged: {report.converged})")


if __name__ == "__main__":
    main()
