"""The analytic constants behind the curvature-to-cohomology bounds.

Three families of numbers control when twisted cohomology of a curved
space must vanish:

* the Wallis integrals omega_n = integral of sin^(n-1) over [0, pi];
* C(b), the unique positive root of
  x * integral_0^b (cosh t + x sinh t)^(n-1) dt = omega_n,
  which calibrates isoperimetric profiles on distance tubes of depth b;
* the infinite products B_n(x) whose growth rate bounds Sobolev norms
  on ends of negatively pinched spaces.

The demo prints small tables, shows the monotone approach of b * C(b) to
its small-b limit (1 + n * omega_n)^(1/n) - 1, and checks the two growth
inequalities for B_n along the way.
"""

import math

from novikov import b_n, b_n_detail, bc_limit_check, c_of_b, small_b_limit, wallis


def main():
    print("Wallis integrals:")
    for n in range(2, 9):
        print(f"  omega_{n} = {wallis(n):.12f}")

    print("\nroot C(b) for n = 3 (decreasing in the tube depth b):")
    for b in (4.0, 2.0, 1.0, 0.5, 0.1):
        print(f"  b = {b:<4}: C(b) = {c_of_b(3, b):.9f}")

    print("\nb * C(b) against omega_n (n = 3): bounded, monotone, and")
    print("convergent, but not to omega_n:")
    table = bc_limit_check(3, [4.0, 2.0, 1.0, 0.5, 0.25, 1e-2, 1e-4])
    for row in table.rows:
        print(f"  b = {row.b:<7}: b*C(b) = {row.bc:.9f}   gap to omega = {row.gap:.9f}")
    limit = small_b_limit(3)
    print(f"  small-b limit (1 + 3*omega_3)^(1/3) - 1 = {limit:.9f}")
    print(f"  last row matches the limit to {abs(table.rows[-1].bc - limit):.2e}")
    print(f"  always below omega_3: {table.upper_bound_ok}; "
          f"gap shrinking: {table.gap_decreasing}")

    print("\ninfinite products B_n(x) with truncation error bars:")
    for n, x in [(3, 0.5), (3, 1.0), (4, 1.0), (10, 1.0), (3, 10.0)]:
        detail = b_n_detail(n, x)
        print(f"  B_{n}({x:<4}) = {detail.value:.9f} "
              f"(+{detail.tail_bound:.2e} tail, {detail.terms} factors)")

    print("\ngrowth inequalities for B_n:")
    n = 4
    nu = n / (n - 2)
    x = 0.7
    cap = math.exp(2 * x * math.sqrt(nu) / (math.sqrt(nu) - 1))
    print(f"  B_4(0.7) = {b_n(n, x):.6f} <= exp(2x sqrt(nu)/(sqrt(nu)-1)) "
          f"= {cap:.6f}: {b_n(n, x) <= cap}")
    x = 6.0
    cap = b_n(n, 1.0) * x ** (2 * nu / (nu - 1))
    print(f"  B_4(6.0) = {b_n(n, x):.6f} <= B_4(1) * x^(2nu/(nu-1)) "
          f"= {cap:.6f}: {b_n(n, x) <= cap}")


if __name__ == "__main__":
    main()
