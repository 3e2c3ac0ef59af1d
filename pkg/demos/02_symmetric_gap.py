"""
Gap for the symmetric Y-channel
===============================

With unit gains the bounds simplify. Here we evaluate the gap between
the best upper and best lower bound on a P = Pr line and on a full
P x Pr grid.
"""

import numpy as np

from ychannel import PowerBudget, db_to_linear, symmetric_gap, symmetric_lowers, symmetric_uppers

line_db = np.arange(-20, 60.05, 0.1)
line = np.array([symmetric_gap(PowerBudget.equal(db_to_linear(p))) for p in line_db])
print(f"P = Pr: max gap {line.max():.6f} bits at {line_db[line.argmax()]:.1f} dB")

# Which bounds are active along the line?
for p_db in (-10, 0, 10, 30):
    pw = PowerBudget.equal(db_to_linear(p_db))
    ups = dict(zip(("c_cs", "c_s", "c_g"), symmetric_uppers(pw)))
    lows = dict(zip(("c_i", "c_ii", "c_iii"), symmetric_lowers(pw)))
    print(f"{p_db:4d} dB  upper {min(ups, key=ups.get):5s}  lower {max(lows, key=lows.get)}")

grid_db = np.arange(-20, 61, 1.0)
grid = np.array([[symmetric_gap(PowerBudget(db_to_linear(p), db_to_linear(r)))
                  for r in grid_db] for p in grid_db])
i, j = np.unravel_index(grid.argmax(), grid.shape)
print(f"P x Pr grid: max gap {grid.max():.4f} bits at P = {grid_db[i]:.0f} dB, Pr = {grid_db[j]:.0f} dB")
