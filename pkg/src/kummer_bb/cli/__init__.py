from .main import main
from .models import SCHEMAS, CheckResult, GraphReport, VerifyReport
from .verify import SUITES, VerifyParams, run_suite

__all__ = [
    "main",
    "SCHEMAS",
    "GraphReport",
    "CheckResult",
    "VerifyReport",
    "SUITES",
    "VerifyParams",
    "run_suite",
]
