"""Minimum linear arrangement for proper interval graphs, with a start-ordered
4-approximation for general interval graphs and an exhaustive oracle."""

from .errors import (
    CostOverflow,
    InvalidArrangement,
    InvalidGraph,
    MalformedInterval,
    MinlaError,
    ParseError,
    PreconditionViolated,
    RangeOutOfBounds,
    TooLarge,
)
from .generators import (
    generate_chain_graph,
    random_intervals,
    random_proper_interval,
)
from .graph import (
    Arrangement,
    CostReport,
    Graph,
    connected_components,
    cost,
    degree_bounds,
)
from .intervals import (
    CliqueOrder,
    IntervalSet,
    approximate,
    clique_order_from_intervals,
    graph_from_intervals,
    pi_order,
    right_oriented_cost,
)
from .oracle import brute_force_minla, enumerate_optimal, find_pi_suboptimal
from .recognition import (
    CliqueChain,
    clique_chain_from_order,
    recognize_proper_interval,
    verify_umbrella,
)
from .solver import is_n_order, solve_proper_interval

__version__ = "0.1.0"
