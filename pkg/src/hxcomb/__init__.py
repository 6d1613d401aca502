"""Union-condition extremal problems for 3-graphs: constructions, shifting,
shadows, matching numbers and exhaustive desk-scale verification."""

from .constructions import (
    conjecture_bound, is_subgraph, make_A, make_A_graph, make_F1, make_F2, make_F3, size_formulas,
)
from .core import Edge, Family, delete_prefix, delete_vertices, link, restrict, shadow, union_size
from .formats import (
    family_from_json, family_from_text, family_to_json, family_to_text, read_family, write_family,
)
from .properties import (
    MatchingWitness, StabilityStat, UnionWitness, check_U, is_shifted, matching_number,
    max_union, r_stat, shift_violation, stabilize,
)
from .search import (
    Budget, SearchCertificate, search_shifted_max, search_unrestricted_max,
    validate_certificate, verify_theorem,
)

__version__ = "0.1.0"
