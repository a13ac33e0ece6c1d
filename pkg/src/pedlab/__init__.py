"""pedlab: a truncated q-series laboratory for partitions with distinct
even parts.

The package pairs an exact formal-power-series engine (Pochhammer products,
Ramanujan theta functions, series dissection) with an independent
combinatorial DP oracle for ped(n), and uses the two to machine-check a
chain of identities that yields mod-24 congruences on step-225 progressions,
plus a scanner for congruence claims in general.
"""

from .series import Series
from .etatheta import (EtaQuotient, ThetaSpec, eta_quotient,
                       jacobi_triple_product_check, phi, pochhammer,
                       product_of_binomials, psi, theta_sum, triple_product)
from .partitions import (CongruenceClaim, PedTable, check_claim,
                         check_equivalence, family_offset, four_regular_table,
                         ped_table)
from .dissection import (ProofStep, RSeries, rogers_ramanujan,
                         run_proof_chain, series_proof_steps,
                         shifted_pochhammer, verify_extraction_5n4,
                         verify_f1_five_dissection, verify_family,
                         verify_mod24_reduction,
                         verify_ped9n7_generating_function,
                         verify_self_similarity, verify_theorem_residues)
from .report import RunEntry, VerificationReport, format_report
from .claims import (BUILTIN_SET_NAMES, ClaimParseError, ClaimSet,
                     FamilyDirective, builtin_claim_set, load_claim_file,
                     parse_claim_lines)

__version__ = "0.1.0"

__all__ = [
    "Series",
    "EtaQuotient", "ThetaSpec", "eta_quotient", "jacobi_triple_product_check",
    "phi", "pochhammer", "product_of_binomials", "psi", "theta_sum",
    "triple_product",
    "CongruenceClaim", "PedTable", "check_claim", "check_equivalence",
    "family_offset", "four_regular_table", "ped_table",
    "ProofStep", "RSeries", "rogers_ramanujan", "run_proof_chain",
    "series_proof_steps", "shifted_pochhammer", "verify_extraction_5n4",
    "verify_f1_five_dissection", "verify_family", "verify_mod24_reduction",
    "verify_ped9n7_generating_function", "verify_self_similarity",
    "verify_theorem_residues",
    "RunEntry", "VerificationReport", "format_report",
    "BUILTIN_SET_NAMES", "ClaimParseError", "ClaimSet", "FamilyDirective",
    "builtin_claim_set", "load_claim_file", "parse_claim_lines",
    "__version__",
]
