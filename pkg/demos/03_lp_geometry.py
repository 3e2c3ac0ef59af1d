"""
The broadcast LP behind complete decode-and-forward
===================================================

The relay's downlink must satisfy three pair constraints on the
aggregate outgoing rates. The optimum sits at one of two corners
depending on whether a < b + c.
"""

from ychannel import ThreeRateLP, enumerate_vertices_oracle, solve_closed_form, solve_simplex

for abc in [(2.0, 2.0, 1.0), (3.0, 2.0, 1.0)]:
    lp = ThreeRateLP(*abc)
    value, point = solve_closed_form(lp)
    s_value, s_point = solve_simplex(lp.as_program())
    vertices = enumerate_vertices_oracle(lp.as_program())
    print(f"(a, b, c) = {abc}: optimum {value} at {point}")
    print(f"  simplex agrees: {abs(value - s_value) < 1e-12}, argmax {tuple(float(x) for x in s_point)}")
    print(f"  {len(vertices)} vertices:")
    for v in vertices:
        print("   ", tuple(round(float(x), 3) + 0.0 for x in v), " sum", round(float(v.sum()), 3))
