"""Ground-state degeneracy versus torus size.

For a topologically ordered code the torus degeneracy equals the number
of anyon types — but only on tori the lattice actually fits.  The color
code keeps its three-plaquette coloring only when the side is a
multiple of 3; on other sides the wrapped stabilizers over-constrain
the space and the degeneracy collapses to 1.
"""

import math

from stabtopo import analyze, builtin, instantiate_torus, torus_gsd

CASES = ["toric", "toric(3)", "double_semion", "color"]


def main():
    for name in CASES:
        code = builtin(name)
        th = analyze(code)
        want = math.prod(th.orders)
        print("%s: %d anyon types" % (name, want))
        for L in range(4, 13):
            try:
                gsd = torus_gsd(instantiate_torus(code, L))
            except ValueError as e:
                print("  L=%2d  (%s)" % (L, e))
                continue
            tag = "" if gsd == want else "   <- frustrated wrapping"
            print("  L=%2d  GSD=%d%s" % (L, gsd, tag))
        print()


if __name__ == "__main__":
    main()
