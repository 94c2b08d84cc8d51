"""Check results and the identity-violation error shared by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verified identity (or family of identities)."""

    formula: str
    n_range: str
    params: str = ""
    status: str = "pass"
    first_mismatch: str | None = None

    def to_json_obj(self) -> dict[str, object]:
        return {
            "formula-id": self.formula,
            "n-range": self.n_range,
            "parameter-point": self.params,
            "status": self.status,
            "first-mismatch": self.first_mismatch,
        }


class IdentityViolationError(Exception):
    """A machine-checked identity failed; carries the failing check result."""

    def __init__(self, result: CheckResult):
        super().__init__(
            f"{result.formula} [{result.n_range}] at ({result.params}): "
            f"{result.first_mismatch}"
        )
        self.result = result


def violation(formula: str, n_range: str, params: str, mismatch: str) -> IdentityViolationError:
    return IdentityViolationError(
        CheckResult(formula, n_range, params, status="fail", first_mismatch=mismatch)
    )
