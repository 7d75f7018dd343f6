# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Looking sequences up
#
# The bundled fixture is a small stripped-format database. Point `OEIS_DB` at
# a full download to search everything.

# %%
from colored_motzkin.oeis import TABLES, compare_with_paper, default_db, match_sequence, scan_table

db = default_db()
len(db)

# %%
match_sequence([1, 2, 5, 14, 42, 132, 429], db).render()

# %%
scan = scan_table(TABLES["table5"], db)
print(scan.to_markdown())

# %% [markdown]
# Cells that disagree with the published grid would show up here.

# %%
[(c.row, c.col, c.paper, c.status) for c in compare_with_paper(scan, db) if c.status != "agree"]

# %%
from colored_motzkin.oeis import custom_table

print(scan_table(custom_table([(0,), (1,), (2,)], [(1,), (2,), (3,)], mode="rowsum"), db).to_markdown())
