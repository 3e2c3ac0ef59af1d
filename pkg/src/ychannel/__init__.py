"""Sum-capacity bounds for the three-user Gaussian Y-channel.

The Y-channel has three users exchanging six unicast messages through a
full-duplex relay. This package evaluates cut-set, broadcast and
genie-aided upper bounds, complete and functional decode-and-forward
lower bounds, the sum-rate LP over the outer region, constant-gap
certificates, and a message-level simulation of the functional
decode-and-forward schedule.
"""

from .fdf_protocol import (
    FrameTranscript,
    Message,
    RelayIndex,
    relay_combine,
    run_schedule,
    throughput,
    user_extract,
)
from .gap_analysis import (
    Certificate,
    GapReport,
    Regime,
    Sampler,
    certify_gaps,
    gap,
    high_power_gap_bound,
    symmetric_gap,
    symmetric_lowers,
)
from .lower_bounds import (
    LowerBoundReport,
    lower_bound_report,
    sum_lower_cdf,
    sum_lower_fdf,
    sum_lower_fdf_two_user,
)
from .lp_solver import (
    LinearProgramSpec,
    ThreeRateLP,
    UnboundedError,
    enumerate_vertices_oracle,
    solve_closed_form,
    solve_simplex,
)
from .model import (
    ChannelGains,
    ChannelMode,
    DomainError,
    PowerBudget,
    PreconditionError,
    RateTuple,
    cap,
    clamp_plus,
    db_to_linear,
)
from .outer_region import RatePolytope, build_outer_region, max_sum_rate
from .upper_bounds import (
    RateConstraint,
    bc_pair_bounds,
    cutset_pair_bounds,
    single_user_bounds,
    sum_upper_cutset,
    sum_upper_general,
    sum_upper_restricted,
    symmetric_uppers,
    triple_bounds,
)

__version__ = "0.1.0"
