# The blow-up of the plane at the origin as a refinement of fans: the two
# piecewise linear functions and their difference on a grid of lattice points,
# and the Stanley-Reisner picture of the deformed group ring.
#
#   python3 demos/toric_blowup.py

# %%
import numpy as np

from jetclasses import affine_space, blowup_a2, deformed_product, monomial_of_point, pl_value, refinement_compare, sr_ideal

fine, coarse = blowup_a2(), affine_space(2)
print("fine fan:  ", fine.dumps().strip())
print("coarse fan:", coarse.dumps().strip())
print("SR ideal of the blow-up:", [str(g) for g in sr_ideal(fine).generators])

# %% psi, phi and e = phi - psi on the first quadrant
size = 6
psi = np.zeros((size, size), dtype=int)
phi = np.zeros_like(psi)
for a in range(size):
    for b in range(size):
        r = refinement_compare(fine, coarse, (a, b))
        psi[b, a], phi[b, a] = r.psi, r.phi
e = phi - psi
print("e = phi - psi (rows: second coordinate)")
print(e[::-1])
print("min e:", e.min(), " e == min(a, b):", bool((e == np.minimum.outer(np.arange(size), np.arange(size))).all()))

# %% products in the deformed ring follow the SR monomials
for u, v in [((1, 0), (1, 1)), ((1, 0), (0, 1)), ((2, 1), (1, 2))]:
    prod = deformed_product(fine, u, v)
    mono = monomial_of_point(fine, u) * monomial_of_point(fine, v)
    print(f"y^{u} * y^{v} = {prod}   x^u * x^v = {mono}   pl(u+v) = {pl_value(fine, tuple(np.add(u, v)))}")
