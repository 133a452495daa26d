"""Length 208 = 13 * 16: the original formula and the repaired one."""
from dataclasses import replace

from truncgolay import PRESETS, REPAIRED, ccc, verify_ccc

spec = PRESETS["example4"]

rep = verify_ccc(ccc(spec))
print(rep.summary())
print(rep.failing_shifts)  # every failing shift is a multiple of 8

fixed = replace(spec, variant=REPAIRED)
print(verify_ccc(ccc(fixed)).summary())
