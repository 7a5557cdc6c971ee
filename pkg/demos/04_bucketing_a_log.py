# %% [markdown]
# # From an access log to transactions
#
# Raw logs are reduced to `timestamp key` pairs first, e.g. for Apache
# combined logs:
#
#     awk '{ print $4, $7 }' access.log | sed 's/^\[//' \
#       | while read ts url; do echo "$(date -d "$(echo $ts | sed 's,/, ,g; s,:, ,')" +%s) $url"; done
#
# Each half-hour then becomes one transaction; quiet half-hours stay as
# empty transactions so distances keep counting elapsed windows.

# %%
import io

import numpy as np

from balanced_patterns import BucketConfig, MiningParams, bucket, mine_balanced, parse_events

rng = np.random.default_rng(4)
lines = []
for k in range(31 * 48):
    t0 = k * 1800
    if rng.random() < 0.6:
        lines.append(f"{t0 + rng.integers(1800)} /index.html")
    if k % 3 == 0 and rng.random() < 0.9:
        lines += [f"{t0 + rng.integers(1800)} /staff/prof-a", f"{t0 + rng.integers(1800)} /staff/prof-b"]
    for _ in range(rng.poisson(2)):
        lines.append(f"{t0 + rng.integers(1800)} /page/{rng.integers(300)}")

names = {}
events = parse_events(io.StringIO("\n".join(lines)), names)
db = bucket(events, BucketConfig(window_seconds=1800))
print(len(db), "transactions,", len(names), "distinct pages")

# %%
labels = {i: key for key, i in names.items()}
for r in mine_balanced(db, MiningParams(minnumber=100, maxstdev=2.0, minavg=1.0, ell=10)):
    top = {d: c for d, c in r.succ_histogram.as_dict().items() if c >= 20}
    print([labels[i] for i in r.items], f"avg={r.stats.avgdist:.2f} stdev={r.stats.stdev:.2f}", top)
