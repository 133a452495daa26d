"""Row and column PMEPR of the (8, 8, 160) code, with and without offsets."""
import numpy as np

from truncgolay import PRESETS, ccc, column_pmepr, row_pmepr
from truncgolay.construct import offset_family

fam = ccc(PRESETS["example3"])

rows = np.concatenate([row_pmepr(cs).values for cs in fam])
print(rows.max())  # below the flock size 8



def cols(f):
    return max(column_pmepr(cs).max for cs in f)


print(cols(fam))

# a per-row constant from a chain over the label bits a0, a1
print(cols(offset_family(fam, (0, 1))))

# extending the chain through the flock bit a brings every column to <= 2
print(cols(offset_family(fam, (0, 1), through_flock_bit=True)))
