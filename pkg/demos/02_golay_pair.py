"""A length-160 complementary pair from a truncated function."""
import numpy as np

from truncgolay import PRESETS, build_f, naive_full_accf, construct_pair, verify_gcp
from truncgolay.quadgraph import delete_vertices, path_witness

spec = PRESETS["example1"]
print(build_f(spec))

# the quadratic part is K4; removing z0 and z3 leaves the single edge z1 z2
rest = delete_vertices(spec.graph, spec.victims)
print(rest.edges, path_witness(rest).ends)

a, b = construct_pair(spec)
print(len(a), len(a.support))  # 160 positions, 40 of them non-zero

prof = naive_full_accf(a.values, a.values) + naive_full_accf(b.values, b.values)
print(prof[159], np.count_nonzero(prof))  # peak 80 at shift 0, zero elsewhere

print(verify_gcp((a, b)).summary())
