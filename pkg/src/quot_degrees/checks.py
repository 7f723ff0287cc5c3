import os
from typing import NamedTuple

from .errors import ParameterError

DEFAULT_TOLERANCE = 1e-9
DEFAULT_ORACLE_TOLERANCE = 1e-6
TOLERANCE_ENVIRONMENT_VARIABLE = "QUOTDEG_TOL"

PASS = "pass"
FAIL = "fail"


class Check(NamedTuple):
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


def check(name: str, ok: bool, detail: str = "") -> Check:
    return Check(name=name, status=PASS if ok else FAIL, detail=detail)


class CheckOptions(NamedTuple):
    tolerance: float = DEFAULT_TOLERANCE
    oracle_tolerance: float = DEFAULT_ORACLE_TOLERANCE
    oracle_cap: int = 64
    workers: int = 1


def default_tolerance() -> float:
    raw = os.environ.get(TOLERANCE_ENVIRONMENT_VARIABLE)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOLERANCE
    try:
        tolerance = float(raw)
    except ValueError:
        raise ParameterError(
            f"{TOLERANCE_ENVIRONMENT_VARIABLE} must be a float, got '{raw}'"
        )
    if not tolerance > 0:
        raise ParameterError(
            f"{TOLERANCE_ENVIRONMENT_VARIABLE} must be positive, got {tolerance}"
        )
    return tolerance
