"""Sequences from Boolean functions on truncated domains."""
import numpy as np

from truncgolay import Domain, Gbf, generate_sequence, restrict

# f = y0*y1 + y2 over Z_2; z_0 is the least significant bit of the position
f = Gbf(3, 2, [(1, [(0, False), (1, False)]), (1, [(2, False)])])
print(generate_sequence(f).complex())  # all 8 points

# the first six points only
print(generate_sequence(f.with_domain(Domain.prefix(3, 6))).complex())  # [ 1  1  1 -1 -1 -1]

# the last five points
print(generate_sequence(f.with_domain(Domain.suffix(3, 5))).complex())  # [-1 -1 -1 -1  1]

# restriction keeps the full length and zeroes the non-matching positions
r = restrict(f, [2], [0])
print(r.values, r.support)

# the two restrictions on y2 partition the full image
total = restrict(f, [2], [0]).values + restrict(f, [2], [1]).values
print(np.array_equal(total, generate_sequence(f).complex()))
