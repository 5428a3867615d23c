"""Products convolve dimensions; covers never lose them.

Two structural facts about twisted cohomology, shown on small complexes:

* the staircase product of two complexes has the convolution of the
  factor dimension vectors (a Kunneth rule, valid degree by degree
  because a rank-one system on the product splits);
* pulling back to a k-sheeted cyclic cover can only enlarge each
  dimension, strictly so when the cover untwists the local system.
"""

from fractions import Fraction

from novikov import (
    betti_profile,
    circle,
    cyclic_cover,
    kunneth_check,
    product,
    zero_cocycle,
)
from novikov.cocycles import OneCocycle


def circle_theta(m, w):
    return OneCocycle({e: (w if e == (0, 1) else 0) for e in circle(m).edges})


def main():
    lam = Fraction(2)
    a, tha = circle(3), circle_theta(3, 1)
    b, thb = circle(4), zero_cocycle(circle(4))
    prod = product(a, b)
    combined = prod.combine_cocycles(tha, thb)
    pa = betti_profile(a, tha, lam)
    pb = betti_profile(b, thb, lam)
    pp = betti_profile(prod.complex, combined, lam)
    print("product of a twisted circle with an untwisted circle, lambda = 2:")
    print(f"  factor dims {pa.dims} and {pb.dims}")
    print(f"  product dims {pp.dims} on counts {prod.complex.counts()}")
    print(f"  convolution identity holds: {kunneth_check(pa, pb, pp)}")
    print("  (0, 0) * (1, 1) = (0, 0, 0): the twisted factor kills everything")

    print("\ncyclic covers of the circle with winding cocycle, lambda = -1:")
    base_dims = betti_profile(a, tha, Fraction(-1)).dims
    print(f"  base: dims {base_dims} (monodromy -1 is nontrivial)")
    for sheets in (2, 3, 4):
        data = cyclic_cover(a, tha, sheets)
        up = betti_profile(data.complex, data.theta_lift, Fraction(-1)).dims
        note = ""
        if sheets % 2 == 0:
            note = "  <- loop holonomy doubles, (-1)^2 = 1, system untwists"
        print(f"  {sheets} sheets: dims {up}{note}")
    print("even covers strictly enlarge the dims: the inequality")
    print("dims(base) <= dims(cover) cannot be improved to equality.")

    print("\ntorus as a cover of itself, lambda = 5/7:")
    from novikov import torus_grid

    k = torus_grid(3)

    def step(d):
        d %= 3
        return d - 3 if d > 1 else d

    values = {}
    for (u, v) in k.edges:
        i1, j1 = divmod(u, 3)
        i2, j2 = divmod(v, 3)
        values[(u, v)] = step(i2 - i1)
    theta = OneCocycle(values)
    data = cyclic_cover(k, theta, 2)
    down = betti_profile(k, theta, Fraction(5, 7)).dims
    up = betti_profile(data.complex, data.theta_lift, Fraction(5, 7)).dims
    print(f"  base {down} <= double cover {up}: "
          f"{all(x <= y for x, y in zip(down, up))}")


if __name__ == "__main__":
    main()
