# Normal forms of 2 x 2 and 3 x 3 matrix jets under row operations: the worked
# example, then a random orbit showing that the representative does not move.
#
#   python3 demos/matrix_jets.py [seed]

# %%
import random
import sys

from jetclasses import TruncatedSeries, TruncatedSeriesMatrix, cell_dimension, contact_profile, normal_form

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 20240611
rng = random.Random(seed)

x = TruncatedSeriesMatrix.parse("m=3\nt+t^2, 1+2*t; t, 1+t^2")
print(x, "\nprofile", contact_profile(x))
print("normal form:\n" + str(normal_form(x)))


# %% a random point of one orbit
def random_unit_matrix(n, m):
    while True:
        g = TruncatedSeriesMatrix(
            [[TruncatedSeries([rng.randint(-2, 2) for _ in range(m + 1)], m) for _ in range(n)] for _ in range(n)], m
        )
        if g.is_invertible():
            return g


t = TruncatedSeries([0, 1], 7)
y = TruncatedSeriesMatrix([[t, 3, 0], [0, t * t, 1], [0, 0, t * t * t]], 7)
print("\nprofile of y:", contact_profile(y), " free coefficients in its cell:", cell_dimension(contact_profile(y).partition()))
target = normal_form(y)
for _ in range(5):
    g = random_unit_matrix(3, 7)
    print("normal form of g*y equals that of y:", normal_form(g @ y) == target)
print(target)
