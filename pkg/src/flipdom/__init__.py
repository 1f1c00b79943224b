"""flipdom: streaming enumeration of minimal dominating sets of claw-free
(line) graphs, line graphs of bipartite graphs, and graphs of girth at
least 7, plus minimal edge dominating sets of arbitrary and bipartite
graphs through the line-graph bridge."""

from flipdom.driver import (
    ChildGenerator,
    DelayStats,
    DriverState,
    ParentResult,
    compute_parent,
    delay_stats,
    enumerate_all,
    enumerate_mds_bipartite_line,
    enumerate_mds_girth7,
    enumerate_mds_line,
    flip_pairs,
    BIPARTITE_GENERATOR,
    GIRTH7_GENERATOR,
    LINE_GENERATOR,
)
from flipdom.edge_dom import (
    LineGraphMap,
    enumerate_min_eds,
    is_bipartite,
    line_graph,
)
from flipdom.graph import (
    Graph,
    GraphFormatError,
    UnsupportedGraphError,
    complete_graph,
    cycle_graph,
    find_claw,
    find_diamond,
    girth,
    greedy_max_independent,
    greedy_removal,
    induced_edge_count,
    is_dominating,
    is_minimal_dominating,
    load_edge_list,
    parse_edge_list,
    path_graph,
    private_closed,
    private_neighbors,
    star_graph,
    vset,
)
from flipdom.mis import MisEnumerator, enumerate_mis, first_mis
from flipdom.oracle import brute_eds, brute_mds, brute_mis

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
