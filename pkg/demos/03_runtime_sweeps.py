# %% [markdown]
# # Runtime sweeps
#
# Two sweeps, written as CSV to stdout: database size with minnumber tied to
# 10% of the size, and minnumber on a fixed 1,488-transaction database.
# Plot with any spreadsheet, or e.g.
# `gnuplot -e "set datafile separator ','; plot 'sweep.csv' using 1:2 with lines"`.

# %%
import sys

from balanced_patterns import GeneratorConfig, MiningParams, generate
from balanced_patterns.bench import minnumber_sweep, size_sweep, write_csv

base = MiningParams(minnumber=1, maxstdev=1.0, minavg=2.0, ell=10)
gen = GeneratorConfig(background_density=0.02, noise_percent=10, seed=0)

# %%
rows = size_sweep([100, 250, 500, 1000, 2000, 4000], gen, base, fraction=0.1, repeat=3)
write_csv(rows, sys.stdout)

# %%
db = generate(GeneratorConfig(n_transactions=1488, background_density=0.05, seed=0))
rows = minnumber_sweep(db, [1, 2, 4, 6, 8, 10, 20, 50], base, repeat=3)
write_csv(rows, sys.stdout)
