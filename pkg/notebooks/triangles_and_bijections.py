# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Colored Motzkin triangles
#
# A short tour: build a triangle from its A and Z sequences, check it against
# brute force, then push a few paths through the bijections.

# %%
from colored_motzkin.paths import ColorScheme, parse_motzkin
from colored_motzkin.riordan import build_triangle, motzkin_az, dyck_az, dyck_scheme, row_sums
from colored_motzkin.oracle import count_motzkin, enumerate_motzkin

scheme = ColorScheme.of((1, 2), (3, 3))
T = build_triangle(motzkin_az(scheme), 6)
print(T.to_text())

# %% [markdown]
# Every entry is a count of paths. The oracle walks them one by one.

# %%
all(T.entry(n, m) == count_motzkin(n, m, scheme) for n in range(6) for m in range(n + 1))

# %%
for P in enumerate_motzkin(2, 0, scheme):
    print(P)

# %% [markdown]
# ## Row sums
#
# Summing a row gives the first column of the triangle with one more color on
# every level.

# %%
diag = ColorScheme.of((1,), (1,))
row_sums(build_triangle(motzkin_az(diag), 8)), build_triangle(motzkin_az(diag.bumped()), 8).column(0)

# %% [markdown]
# ## k-Dyck paths
#
# The Dyck triangles coincide with Motzkin triangles for a particular scheme.

# %%
for k in (2, 3, 4):
    for a in range(k):
        s = dyck_scheme(k, a)
        print(k, a, s.alpha, s.beta, build_triangle(dyck_az(k, a), 6).column(0))

# %%
from colored_motzkin.bijections import motzkin_to_dyck, dyck_to_motzkin

P = parse_motzkin("D0:1 U D0:2 D0:1 D1 D0:2", dyck_scheme(2, 1))
Q = motzkin_to_dyck(P, 2, 1)
Q.steps, dyck_to_motzkin(Q) == P

# %%
from colored_motzkin.bijections import verify_all

print(verify_all("dyck", 4, k=3, a=1))
