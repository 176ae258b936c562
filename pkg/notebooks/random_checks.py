"""
Random pattern pairs
====================

Generate strongly contained pairs, answer the contained pattern from the
container's result and compare with direct evaluation.  Prints how often the
answer was non-empty and how long the checks took.
"""
import time

from cgp import EMPTY, cond_sim, s_contained, sc_match
from cgp.testkit import strong_instance

start = time.perf_counter()
same = nonempty = skipped = 0
for seed in range(200):
    inst = strong_instance(seed)
    if inst is None:
        skipped += 1
        continue
    c1, c2, g = inst
    sc = s_contained(c1, c2)
    if sc is None:
        skipped += 1
        continue
    r2 = cond_sim(c2, g)
    got = sc_match(c1, c2, *sc, r2[1] if r2 else EMPTY)
    r1 = cond_sim(c1, g)
    want = r1[1] if r1 else EMPTY
    same += got == want
    nonempty += bool(want)

print(f"agreeing: {same}, non-empty: {nonempty}, skipped seeds: {skipped}")
print(f"elapsed: {time.perf_counter() - start:.2f} s")
