"""
Upper and lower bounds versus SNR
=================================

Sum-rate bounds for a Y-channel with h = (1, 0.8, 0.7) and equal user
and relay power, swept from 0 to 50 dB.
"""

import numpy as np

from ychannel import ChannelGains, PowerBudget, db_to_linear
from ychannel import (sum_lower_cdf, sum_lower_fdf, sum_lower_fdf_two_user,
                      sum_upper_cutset, sum_upper_general, sum_upper_restricted)

ch = ChannelGains(1.0, 0.8, 0.7)
snr_db = np.arange(0, 51, 1.0)

curves = {name: [] for name in ("cut-set", "genie", "restricted", "CDF", "FDF", "FDF two-user")}
for snr in snr_db:
    pw = PowerBudget.equal(db_to_linear(snr))
    curves["cut-set"].append(sum_upper_cutset(ch, pw))
    curves["genie"].append(sum_upper_general(ch, pw))
    curves["restricted"].append(sum_upper_restricted(ch, pw))
    curves["CDF"].append(sum_lower_cdf(ch, pw))
    curves["FDF"].append(sum_lower_fdf(ch, pw))
    curves["FDF two-user"].append(sum_lower_fdf_two_user(ch, pw))
curves = {k: np.array(v) for k, v in curves.items()}

# The cut-set bound grows like 3/2 log P, the genie-aided one like log P,
# so they cross once at moderate SNR.
crossover = snr_db[np.argmax(curves["genie"] < curves["cut-set"])]
print(f"genie-aided bound is tighter from {crossover:.0f} dB on")

# Beyond the crossover the gap to the two-user FDF rate settles to a constant.
gap = curves["genie"] - curves["FDF two-user"]
print("gap at 10, 30, 50 dB:", np.round(gap[[10, 30, 50]], 4))

print(f"\n{'SNR':>4} " + " ".join(f"{k:>12}" for k in curves))
for i in range(0, len(snr_db), 10):
    print(f"{snr_db[i]:4.0f} " + " ".join(f"{v[i]:12.4f}" for v in curves.values()))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for name, values in curves.items():
        ax.plot(snr_db, values, "--" if name in ("CDF", "FDF", "FDF two-user") else "-", label=name)
    ax.set_xlabel("SNR (dB)")
    ax.set_ylabel("Sum rate (bits/channel use)")
    ax.legend()
    fig.tight_layout()
    fig.savefig("reference_bounds.png", dpi=120)
    print("\nwrote reference_bounds.png")
