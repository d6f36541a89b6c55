"""ringlab: a laboratory for finite rings.

Build finite rings from composable spec expressions, enumerate their
structure (idempotents, nilpotents, units, center, Jacobson radical), and
decide decomposition properties with re-checkable witnesses: weakly nil
clean, clean, nil clean, exchange, pi-regular, strongly pi-regular, strongly
regular. A check harness runs named statements over a ring corpus, and the
``ringlab`` CLI exposes classify/witness/verify/census commands.
"""

from .core import (
    AxiomFailure,
    AxiomReport,
    DEFAULT_TABLE_CAP,
    DEFAULT_VALIDATE_CAP,
    FiniteRing,
    NonUnitalRingError,
    OrderCapError,
    RingLabError,
    WitnessError,
    nil_index_of,
    power,
    power_seq,
    power_trajectory,
    validate_axioms,
)
from .construct import (
    Corner,
    DEFAULT_MAX_ORDER,
    IdealRing,
    MAX_ORDER_ENV,
    Matrix,
    Opposite,
    PolyMod,
    Product,
    Quotient,
    RingSpec,
    Triangular,
    TrivialExt,
    Zn,
    build,
    build_cached,
    corner_ring,
    ideal_subring,
    matrix_ring,
    opposite,
    pack_digits,
    poly_mod_ring,
    product,
    product_ring,
    quotient,
    resolve_max_order,
    ring_pack,
    ring_unpack,
    spec_order,
    subring,
    triangular_ring,
    trivial_ext_ring,
    unpack_digits,
    zn_ring,
)
from .structure import (
    Ideal,
    bounded_index,
    center,
    ideal_generated,
    idempotents,
    inverse_map,
    is_abelian,
    is_nil_ideal,
    jacobson_radical,
    left_ideal_generated,
    make_ideal,
    nil_index_map,
    nilpotents,
    structure_counts,
    units,
)
from .deciders import (
    BRUTE_ORDER_LIMIT,
    PROPERTY_ORDER,
    ClassificationReport,
    ExchangeWitness,
    PiRegularWitness,
    StrongPiWitness,
    SumWitness,
    WnclWitness,
    center_ring,
    center_witness,
    corner_to_parent,
    check_exchange,
    check_pi_regular,
    check_strong_pi,
    check_strongly_regular,
    check_sum,
    check_wncl,
    classify,
    clean_witness,
    exchange_witness,
    extract_from_matrix,
    lift_idempotent,
    lift_wncl_witness,
    nil_clean_witness,
    pi_regular_witness,
    pi_regular_witness_fast,
    ring_clean,
    ring_exchange,
    ring_nil_clean,
    ring_pi_regular,
    ring_strongly_pi_regular,
    ring_strongly_regular,
    ring_unique_idempotent,
    ring_unique_nilpotent,
    ring_weakly_nil_clean,
    strong_pi_core,
    strong_pi_core_fast,
    strong_pi_core_left,
    strong_pi_witness,
    strong_pi_witness_fast,
    strongly_regular_witness,
    unique_idempotent_wncl,
    unique_nilpotent_wncl,
    wncl_from_corner,
    wncl_from_pi_regular,
    wncl_witness,
    wncl_witness_alt,
)
from .harness import (
    CHECK_IDS,
    DEFAULT_CORPUS,
    CensusRow,
    PropositionCheck,
    canonical_nil_ideal,
    census,
    run_all,
    run_check,
)
from .cli import SpecParseError, main, parse_spec

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
