"""
Verification certificates: claim, evidence records and PASS/FAIL/REPORTED status,
serialized to schema-checked JSON.
"""

import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import jsonschema
import numpy as np
import sympy

from core import __version__
from core.log_writer import get_logger

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "docs" / "certificate_schema.json"


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    REPORTED = "REPORTED"


def jsonable(value: Any) -> Any:
    """Convert numpy, Fraction and sympy values into plain JSON types."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        return number if math.isfinite(number) else str(number)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, sympy.Basic):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    return value


@dataclass
class Evidence:
    """One computed fact: inputs, values and whether it met its tolerance."""
    label: str
    inputs: Dict[str, Any]
    values: Dict[str, Any]
    tolerance: Optional[float] = None
    ok: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            'label': self.label,
            'inputs': jsonable(self.inputs),
            'values': jsonable(self.values),
            'tolerance': self.tolerance,
            'ok': bool(self.ok),
        }


@dataclass
class Certificate:
    claim_id: str
    paper_anchor: str
    parameters: Dict[str, Any]
    status: Status
    evidence: List[Evidence]
    toolkit_version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    @classmethod
    def build(cls, claim_id: str, paper_anchor: str, parameters: Dict[str, Any],
              evidence: List[Evidence], informational: bool = False,
              reportable: bool = False) -> "Certificate":
        """
        Derive the status from the evidence.

        informational: evidence outside the theorem's hypotheses, always REPORTED.
        reportable: a failing record is a finding (REPORTED) rather than a FAIL.
        """
        if informational:
            status = Status.REPORTED
        elif all(e.ok for e in evidence):
            status = Status.PASS
        elif reportable:
            status = Status.REPORTED
        else:
            status = Status.FAIL
        certificate = cls(claim_id, paper_anchor, parameters, status, evidence)
        get_logger().log_certificate(claim_id, status.value, len(evidence))
        return certificate

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            'claim_id': self.claim_id,
            'paper_anchor': self.paper_anchor,
            'parameters': jsonable(self.parameters),
            'status': self.status.value,
            'evidence': [e.to_dict() for e in self.evidence],
            'toolkit_version': self.toolkit_version,
            'timestamp': self.timestamp,
        }


def load_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, 'r', encoding='utf-8') as f:
        return json.load(f)


def validate_certificate(data: Dict[str, Any], schema: Optional[Dict[str, Any]] = None) -> None:
    """Raise jsonschema.ValidationError if `data` is not a valid certificate."""
    jsonschema.validate(instance=data, schema=schema or load_schema())


def write_certificates(certificates: Iterable[Certificate], path: str) -> Path:
    """Validate and write a JSON array of certificates; I/O errors propagate as OSError."""
    schema = load_schema()
    payload = [c.to_dict() for c in certificates]
    for entry in payload:
        validate_certificate(entry, schema)
    target = Path(path)
    with open(target, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2, ensure_ascii=False)
        f.write("\n")
    get_logger().log_info(f"Wrote {len(payload)} certificates to {target}")
    return target


def summarize(certificates: Iterable[Certificate]) -> Dict[str, int]:
    counts = {status.value: 0 for status in Status}
    for certificate in certificates:
        counts[certificate.status.value] += 1
    return counts
