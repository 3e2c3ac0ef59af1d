"""
Maximising the sum rate over the outer region
=============================================

All per-rate constraints are stacked into one 6-variable LP. Its optimum
is never above the closed-form sum bounds, which are particular sums of
three constraints.
"""

from ychannel import (ChannelGains, ChannelMode, PowerBudget, build_outer_region,
                      max_sum_rate, sum_upper_cutset, sum_upper_general, sum_upper_restricted)

ch = ChannelGains(1.0, 0.8, 0.7)
pw = PowerBudget.equal(100.0)

for mode in (ChannelMode.GENERAL, ChannelMode.RESTRICTED):
    poly = build_outer_region(ch, pw, mode)
    value, rates = max_sum_rate(poly)
    tight = [c.label for c in poly.constraints if abs(c.slack(rates.as_tuple())) < 1e-9]
    print(f"{mode.value}: max sum rate {value:.4f}")
    print("  argmax", tuple(round(r, 4) for r in rates.as_tuple()))
    print("  tight constraints:", ", ".join(tight))

print(f"cut-set {sum_upper_cutset(ch, pw):.4f}, genie {sum_upper_general(ch, pw):.4f}, "
      f"restricted {sum_upper_restricted(ch, pw):.4f}")

# With unequal powers the closed-form sum bounds do not apply, but the LP does.
value, _ = max_sum_rate(build_outer_region(ch, PowerBudget(100.0, 10.0)))
print(f"P = 20 dB, Pr = 10 dB: region max {value:.4f}")
