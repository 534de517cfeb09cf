"""Truncated q-series arithmetic for signed k-colored partition identities.

The package provides exact integer (and mod-m) truncated power series with
dissection/inflation operators, eta-quotient and theta-function builders,
independent combinatorial oracles, fast modular coefficient tables, and a
registry of verifiable identities and congruence families with a CLI.
"""

from .arith import is_prime, legendre, primes_below
from .modtables import plain_signed_mod, signed_table_mod
from .oracles import (
    brute_force_parity,
    brute_force_signed,
    cubic_table,
    parity_tables,
    partition_table,
    signed_series,
    signed_table,
)
from .registry import (
    CongruenceFamily,
    IdentityCase,
    all_entries,
    congruence_families,
    get_entry,
    identity_cases,
)
from .series import (
    NonDivisibleError,
    NonUnitError,
    PrecisionError,
    RingMismatchError,
    SeriesDiff,
    SeriesError,
    TruncatedSeries,
    eq_upto,
    from_text,
    make,
    monomial,
    one,
    zero,
)
from .theta import (
    MonomialArg,
    ThetaSpec,
    chi,
    eta_quotient,
    f_minus,
    jacobi_triangular_cube,
    p_dissect_f1,
    phi,
    pochhammer_inf,
    psi,
    theta_f,
    theta_spec,
)
from .verify import (
    DEFAULT_ARG_BUDGET,
    VerificationReport,
    check_family,
    reports_to_jsonl,
    run,
    select,
    verify_entry,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "CongruenceFamily",
    "DEFAULT_ARG_BUDGET",
    "IdentityCase",
    "MonomialArg",
    "NonDivisibleError",
    "NonUnitError",
    "PrecisionError",
    "RingMismatchError",
    "SeriesDiff",
    "SeriesError",
    "ThetaSpec",
    "TruncatedSeries",
    "VerificationReport",
    "all_entries",
    "brute_force_parity",
    "brute_force_signed",
    "check_family",
    "chi",
    "congruence_families",
    "cubic_table",
    "eq_upto",
    "eta_quotient",
    "f_minus",
    "from_text",
    "get_entry",
    "identity_cases",
    "is_prime",
    "jacobi_triangular_cube",
    "legendre",
    "make",
    "monomial",
    "one",
    "p_dissect_f1",
    "parity_tables",
    "partition_table",
    "phi",
    "plain_signed_mod",
    "pochhammer_inf",
    "primes_below",
    "psi",
    "reports_to_jsonl",
    "run",
    "select",
    "signed_series",
    "signed_table",
    "signed_table_mod",
    "theta_f",
    "theta_spec",
    "verify_entry",
    "verify_identity",
    "zero",
]
