"""What an improper interval coloring is, checked by hand on a 5-cycle.

Run: python3 demos/01_colorings_and_spectra.py
"""

from improper_interval import impropriety_of, is_interval, spectrum, verify
from improper_interval.families import gen_cycle

c5 = gen_cycle(5)
print("C5 edges:", c5.edges)

# One color everywhere: every vertex sees {1, 1}. Interval, but two equal colors meet.
mono = (1, 1, 1, 1, 1)
print("all ones   -> 2-improper interval?", verify(c5, mono, 2), "| proper?", verify(c5, mono, 1))

# A proper 3-coloring that is not interval: vertex 1 sees colors 1 and 3.
proper = (1, 3, 2, 1, 2)
ok, bad = is_interval(c5, proper)
print("proper 3-coloring -> interval?", ok, "first vertex with a gap:", bad)
print("  spectrum at that vertex:", spectrum(c5, proper, bad).counts)

# Trading properness for consecutiveness: 1,2,1,2,2 closes the odd cycle.
mixed = (1, 2, 1, 2, 2)
for v in range(c5.n):
    s = spectrum(c5, mixed, v)
    print(f"  vertex {v}: colors with multiplicity {s.counts}")
print("1,2,1,2,2 -> impropriety", impropriety_of(c5, mixed), "and interval:", is_interval(c5, mixed)[0])
