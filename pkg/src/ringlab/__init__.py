"""ringlab: exact finite-ring laboratory.

Builds finite commutative rings from tables, computes fixed subrings under
automorphism groups, classifies minimal ring extensions, and checks the
corresponding invariance statements on concrete instances, plus a rational
function field witness layer for the non-finite cases.
"""

__version__ = "0.1.0"

from .harness import (Instance, Verdict, THEOREM_IDS, catalog, report_json,
                      run_catalog, summary_table, verify, verify_all)

__all__ = [
    "Instance", "Verdict", "THEOREM_IDS", "catalog", "report_json",
    "run_catalog", "summary_table", "verify", "verify_all", "__version__",
]
