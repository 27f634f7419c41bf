#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Report values returned by the verifiers.

A verifier never raises on a failed property; it returns a Report whose
violations carry witnesses. An empty report means the property holds.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class Violation:
    """
    One failed check.

    Attributes:
        check: short name of the identity or axiom, e.g. "d1d2=d1d1" or "CM1"
        level: simplicial level the check ran on (None when not level-bound)
        witness: indices exhibiting the failure
        detail: human-readable explanation
    """

    check: str
    level: Optional[int]
    witness: Tuple[Any, ...]
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "level": self.level,
            "witness": list(self.witness),
            "detail": self.detail,
        }


@dataclass
class Report:
    """
    Collected violations of a named verification.

    Attributes:
        name: name of the verification
        violations: every failed check, in discovery order
        notes: informational key/value pairs (sampling decisions, sizes)
    """

    name: str
    violations: List[Violation] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, level: Optional[int], witness: Tuple[Any, ...], detail: str = "") -> None:
        self.violations.append(Violation(check, level, tuple(witness), detail))

    def extend(self, other: "Report", prefix: str = "") -> None:
        """Merge another report's violations, optionally prefixing check names."""
        for v in other.violations:
            self.violations.append(Violation(prefix + v.check, v.level, v.witness, v.detail))
        for key, value in other.notes.items():
            self.notes[prefix + key] = value

    def checks(self) -> List[str]:
        return [v.check for v in self.violations]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "notes": self.notes,
        }
