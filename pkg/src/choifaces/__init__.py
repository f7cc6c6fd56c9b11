"""Convex geometry of the set of quantum channels through their Choi matrices."""
from choifaces.caratheodory import Decomposition, decompose, find_extreme_in_face
from choifaces.channel import (
    MembershipReport,
    block_traces,
    check_membership,
    choi_from_kraus,
    conjugate_blocks,
    kraus_from_choi,
    rank1_membership,
)
from choifaces.constructions import (
    Rank2FamilyN2Params,
    a3,
    a3_extremes,
    an_family,
    case_iia_example,
    embed_rank1_example,
    p_matrix,
    random_member,
    rank2_family_n2,
)
from choifaces.errors import ChoiFacesError
from choifaces.faces import (
    FaceReport,
    analyze,
    boundary_step,
    choi_criterion_extreme,
    extend_face,
    face_dimension,
    face_direction_basis,
    is_extreme,
)
from choifaces.linalg import (
    Tolerances,
    hermitian_eigen,
    kernel_basis,
    numerical_rank,
    range_isometry,
)

__version__ = "0.1.0"
