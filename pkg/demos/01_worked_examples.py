# %% [markdown]
# # Worked examples: stability and balance on tiny databases
#
# Items are integers; here A=1, B=2, ... Positions are 0-based, so
# "transaction 1" in a textbook listing is position 0.

# %%
from balanced_patterns import (
    MiningParams,
    TransactionDatabase,
    build_histograms,
    balance_value,
    mine_balanced,
    stability_value,
    stats_plain,
    tidset_of,
)
from balanced_patterns.transactions import from_letters

db = from_letters(["ABC", "DC", "ABE", "EF", "ABF", "EF", "ABF", "EF", "ABC"])
ab = tidset_of(db, [1, 2])
ab  # positions 0, 2, 4, 6, 8

# %% [markdown]
# With w=0 a triple (L, M, R) counts when M sits exactly halfway.
# {A,B} occurring every other transaction gives 4 triples, 3 left and
# 3 right endpoints.

# %%
score = stability_value(ab, w=0)
print(score, "->", score.value)

# %% Stretch the ends: two extra transactions after the first and before the last
stretched = from_letters(["ABC", "EF", "EF", "DC", "ABE", "EF", "ABF", "EF", "ABF", "EF", "EF", "EF", "ABC"])
print(stability_value(tidset_of(stretched, [1, 2]), w=0).value)  # 8

# %% [markdown]
# ## Distance histograms
#
# A at 0,3,6,9 and B at 3,6,9,12. The pair {A,B} keeps only the shared
# occurrences, and its distances are still measured in the full database.

# %%
rows = [[] for _ in range(13)]
for p in (0, 3, 6, 9):
    rows[p].append(1)
for p in (3, 6, 9, 12):
    rows[p].append(2)
ex2 = TransactionDatabase(rows)

for pattern in ([1], [2], [1, 2]):
    allp, succ = build_histograms(tidset_of(ex2, pattern), ell=10)
    print(pattern, "all pairs:", allp.as_dict(), "successive:", succ.as_dict(),
          "t =", balance_value(allp), "avg/stdev =", stats_plain(succ))

# %% Mining the 9-transaction database
for r in mine_balanced(db, MiningParams(minnumber=3, maxstdev=0.5, minavg=0.5, ell=10)):
    print(r.items, r.stats)
