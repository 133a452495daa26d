"""Mutually orthogonal sets and an (8, 8, 160) complete complementary code."""
import numpy as np

from truncgolay import PRESETS, ccc, mocs_family, verify_ccc, verify_mocs
from truncgolay.corr import accs_profile

spec = PRESETS["example3"]

half = mocs_family(spec)  # four sets of eight sequences
print(verify_mocs(half).summary())

fam = ccc(spec)  # the same four plus their reversed mates
print(verify_ccc(fam).summary())

# row labels (a, a0, a1) of the first set
print(fam.codes[0].labels)

# cross sums between different sets vanish at every shift
print(np.abs(accs_profile(fam.codes[0], fam.codes[5])).max())

# pairing depends on row order: rotate one set and the zeros are gone
from truncgolay.corr import CodeSet
rotated = CodeSet(np.roll(fam.codes[5].values, 1, axis=0))
print(np.abs(accs_profile(fam.codes[0], rotated)).max())
