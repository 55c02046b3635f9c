# Walk through the cuspidal cubic y^2 = x^3: its equivariant classes under the
# weights x:2, y:3, and the jet-scheme dimensions behind its log canonical threshold.
#
#   python3 demos/cusp.py

# %%
import numpy as np

from jetclasses import Ideal, ideal_multidegree, jet_ideal, lct_estimate, parse_grading, parse_polynomials, saturate

(f,) = parse_polynomials(["x^3 - y^2"])
V = Ideal([f])
print("V:", f)
print("[V] =", ideal_multidegree(V, parse_grading("x:2;y:3", V.ring)))

# %% the tangent scheme J_1 V picks up an extra component over the singular point
TV = jet_ideal(V, 1)
grading = parse_grading("x:2;y:3", TV.ring)
print("J_1 V:", ", ".join(map(str, TV.generators)))
print("[J_1 V] =", ideal_multidegree(TV, grading))

sing = Ideal([TV.ring.gen("x"), TV.ring.gen("y")], TV.ring)
closure = saturate(TV, sing)
print("[closure of T Sm(V)] =", ideal_multidegree(closure, grading))

# %% dimensions of J_m V and the ratios dim/(m+1)
est = lct_estimate(V, 2, 5)
dims = np.array(est.dimensions)
ratios = dims / np.arange(1, len(dims) + 1)
for m, (d, r) in enumerate(zip(dims, ratios)):
    print(f"m={m}  dim J_m V = {d}  ratio = {r:.4f}")
print(est)
