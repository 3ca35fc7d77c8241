"""Edge-magic and super edge-magic labelings of crowns, cycles and looped stars.

Construction, transformation and verification of magic labelings, with
machine-checkable certificates showing that every feasible valence of a crown
over a composite odd cycle is realized.
"""

from .arithmetic import BezoutData, bounded_bezout, conflict_pair, conflict_values, exceptional_r
from .coverage import (
    MagicInterval,
    ValenceCover,
    crown_em_cover,
    crown_labeling_for_valence,
    crown_sem_cover,
    crown_valence_lower_bound,
    cycle_valence_lower_bound,
    em_interval,
    perfect_em_cover,
    perfect_sem_cover,
    sem_interval,
    star_product_valences,
)
from .exceptions import (
    CoverConstructionError,
    CrownMagicError,
    EmptyInterval,
    GuardExceeded,
    InvalidCertificate,
    InvalidInput,
    NonConstantValence,
    NotACrownShape,
    NotBijective,
    NotConsecutiveSums,
)
from .graph_core import (
    CrownSpec,
    Digraph,
    Graph,
    build_crown,
    crown_shape,
    cycle_graph,
    directed_cycle,
    star_loop,
    star_loop_graph,
    underlying,
)
from .labeling import (
    EDGE_MAGIC,
    SUPER_EDGE_MAGIC,
    TotalLabeling,
    VertexLabeling,
    canonical_cycle,
    em_complement,
    extend_sem,
    odd_even,
    sem_complement,
    star_loop_labeling,
    verify,
)
from .oracle import SpectrumReport, brute_em_labelings, brute_em_spectrum, brute_sem_spectrum
from .product import (
    ArcAssignment,
    FamilyMember,
    cycle_member,
    h_product,
    induced_product_labeling,
    product_cycle_sem,
    star_member,
)
from .translation import (
    BlockMatrix,
    TranslationResult,
    base_matrix,
    gcd_exception,
    translate,
    translated_labeling,
)

__version__ = "0.1.0"
