"""Chain-descent quasi-symmetric functions of edge-labeled posets."""

from .builders import boolean_poset, chain_poset, weak_order_interval, young_interval
from .errors import ChainformError
from .generating import fp, fp_product_check
from .incidence import (
    IncidenceElement,
    IncidenceTensor,
    antipode_incidence,
    counit,
    hopf_coproduct,
    hopf_product,
    normalize,
    phi,
)
from .poset import (
    ChainWord,
    FlagStats,
    LabeledPoset,
    build_poset,
    descent_set,
    flag_stats,
    interval,
    label_equivalent,
    maximal_chains,
    parse_poset,
    product,
)
from .qsym import QSymExpr, QSymTensor, antipode, coproduct, expand_polynomial, f_to_m, m_to_f, mul
from .rank_selection import (
    ehrenborg_ep,
    flag_fvector_classic,
    is_r_labeled,
    is_relative_r_labeled,
    relative_flag_count,
    weighted_flag_count,
)
from .symfunc import SymExpr, is_symmetric, kostka, m_to_schur, schur_expansion, schur_to_m

__version__ = "0.1.0"
