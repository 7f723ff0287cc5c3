from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from .checks import Check

Exact = Union[int, Fraction]

TABLE_COLUMNS = [
    "g",
    "p",
    "bound_exact",
    "quotF_degree",
    "trig_rel_err",
    "g2_exact",
    "gap",
]


def render_exact(value: Exact) -> str:
    """Integers render bare, other rationals as num/den; never as floats."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def exact_fields(value: Exact) -> Dict[str, str]:
    value = Fraction(value)
    return {
        "value": render_exact(value),
        "numerator": str(value.numerator),
        "denominator": str(value.denominator),
    }


def parse_exact(text: str) -> Fraction:
    return Fraction(text)


@dataclass
class OutputRecord:
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    rows: Optional[List[Dict[str, Any]]] = None
    notes: List[str] = field(default_factory=list)
    # not serialized; set when a command finished but the formula did not apply
    exit_code: int = 0

    def add_exact(self, name: str, value: Exact):
        self.results[name] = Fraction(value)

    def add_float(self, name: str, value: float):
        assert name.endswith("rel_err"), f"float result '{name}' must be a *_rel_err field"
        self.results[name] = float(value)

    def add_checks(self, checks: List[Check]):
        self.checks.extend(checks)

    @property
    def failed_checks(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        data = {"command": self.command, "params": dict(self.params)}
        if self.rows is not None:
            data["rows"] = [_row_to_json(row) for row in self.rows]
        else:
            data["results"] = {
                name: exact_fields(value) if isinstance(value, Fraction) else value
                for name, value in self.results.items()
            }
        data["checks"] = [c._asdict() for c in self.checks]
        data["notes"] = list(self.notes)
        return data


def _row_to_json(row: Dict[str, Any]) -> Dict[str, Any]:
    return {
        column: _cell(row.get(column), as_json=True) for column in TABLE_COLUMNS
    }


def _cell(value, as_json: bool = False):
    if value is None:
        return None if as_json else ""
    if isinstance(value, float):
        return value if as_json else repr(value)
    return render_exact(value)


def row_to_csv(row: Dict[str, Any]) -> List[str]:
    return [_cell(row.get(column)) for column in TABLE_COLUMNS]
