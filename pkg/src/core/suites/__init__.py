"""
Verification suites. Importing this package registers every suite.
"""
from src.core.suites.base import Check, CheckResult, Suite, SuiteContext, suite_ids
from src.core.suites.explain import Explanation, explain, refs

# registration order is the default run order
from src.core.suites import datum_suites  # noqa: F401
from src.core.suites import covering_suites  # noqa: F401
from src.core.suites import boson_suites  # noqa: F401
from src.core.suites import algebra_suites  # noqa: F401
from src.core.suites import ktheory_suites  # noqa: F401

__all__ = (
    'Check',
    'CheckResult',
    'Explanation',
    'Suite',
    'SuiteContext',
    'explain',
    'refs',
    'suite_ids',
)
