# Classes of jets of determinantal varieties V_r in n x n matrices, compared
# with powers of elementary symmetric functions, plus the n = 2 contact classes.
#
#   python3 demos/determinantal.py [max_m]

# %%
import sys
import time

from jetclasses import (
    determinantal_generators,
    elementary_symmetric,
    format_factored,
    ideal_multidegree,
    jet_ideal,
    lattice_ring,
    matrix_grading,
    verify_conjecture_case,
)

top = int(sys.argv[1]) if len(sys.argv) > 1 else 2

# %% the base classes [V_r] = e_r
for n in range(1, 5):
    T = lattice_ring(n)
    row = []
    for r in range(1, n + 1):
        I = determinantal_generators(n, r)
        row.append(ideal_multidegree(I, matrix_grading(I.ring, n)) == elementary_symmetric(r, T))
    print(f"n={n}: [V_r] = e_r for r=1..{n}: {all(row)}")

# %% [J_m V_r] against e_r^(m+1)
for n, r in ((2, 1), (3, 1), (3, 2)):
    T = lattice_ring(n)
    for m in range(top + 1):
        start = time.perf_counter()
        J = jet_ideal(determinantal_generators(n, r), m)
        cls = ideal_multidegree(J, matrix_grading(J.ring, n))
        ok = cls == elementary_symmetric(r, T) ** (m + 1)
        print(f"n={n} r={r} m={m}: {len(J.generators):3d} equations in {J.ring.nvars:2d} variables, "
              f"matches e_{r}^{m + 1}: {ok}  ({time.perf_counter() - start:.2f}s)")

# %% contact loci for 2 x 2 matrices
for a in range(4):
    for b in range(4 - a):
        v = verify_conjecture_case(2, (a, b))
        print(f"m=({a},{b}) lambda={v.lam}: {v.status:5s} {format_factored((a, b))}  codim {v.codimension}")
