"""
qflag shell: configuration, suites, the runner, output and the CLI.
"""

from qflag.harness.config import QFlagConfig, load_config
from qflag.harness.models import CheckResult, CheckStatus, RunReport
from qflag.harness.runner import SuiteRunner

__all__ = [
    "CheckResult",
    "CheckStatus",
    "QFlagConfig",
    "RunReport",
    "SuiteRunner",
    "load_config",
]
