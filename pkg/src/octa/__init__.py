"""Exact characters and states of the infinite hyperoctahedral group Z2 wr S_inf."""

from .bn_irreps import (
    BnClass,
    CharacterTable,
    MultiplicativeCharacter,
    bn_character_table,
    bn_classes,
    bn_induced_character,
    bn_normalized_character,
    omega_value,
    oracle_trace,
)
from .classification import FactorType, Verdict, central_depth, factor_type, quasi_equivalent
from .elements import (
    IDENTITY,
    GroupElement,
    Permutation,
    QuasiCycle,
    SignedCycleType,
    element,
    inverse,
    multiply,
    parse_element,
    quasi_cycle_decompose,
    shift_conjugate,
    signed_cycle_type,
    split_in_level,
    support,
)
from .errors import ElementSyntaxError, GuardError, MembershipError, OctaError, SpecError
from .induced_states import (
    CosetInvolution,
    RepSpec,
    asymptotic_character_estimate,
    canonical_coset_involution,
    finite_trace,
    gram_psd_check,
    induced_state,
)
from .numeric_lab import BernoulliParam, example1_pairing, example3_defect, example3_state
from .partitions import (
    Bipartition,
    enumerate_bipartitions,
    enumerate_partitions,
    hook_dimension,
    mn_character,
)
from .thoma import ThomaSpec, character_value, quasi_cycle_value, tau_lambda_value, validate_spec

__version__ = "0.1.0"
