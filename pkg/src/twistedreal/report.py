"""Structured verdicts: per-axiom reports and whole-suite summaries.

JSON emission is deterministic: fixed key order, no timestamps, and the
wall-clock timing is carried only by the text rendering so that identical
configurations produce byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Witness:
    """Concrete inputs plus both sides of a failed identity, replayable."""

    inputs: dict
    lhs: str
    rhs: str
    lhs_data: Optional[list] = None
    rhs_data: Optional[list] = None

    def to_json(self) -> dict:
        out = {"inputs": dict(self.inputs), "lhs": self.lhs, "rhs": self.rhs}
        if self.lhs_data is not None:
            out["lhs_data"] = self.lhs_data
        if self.rhs_data is not None:
            out["rhs_data"] = self.rhs_data
        return out

    @classmethod
    def from_json(cls, obj) -> "Witness":
        return cls(
            inputs=dict(obj["inputs"]),
            lhs=obj["lhs"],
            rhs=obj["rhs"],
            lhs_data=obj.get("lhs_data"),
            rhs_data=obj.get("rhs_data"),
        )


@dataclass
class AxiomReport:
    """Verdict for one axiom over a described family of instances."""

    axiom: str
    verdict: bool
    instances: int = 1
    inputs: str = ""
    witness: Optional[Witness] = None
    detail: Optional[dict] = None

    def to_json(self) -> dict:
        out = {
            "axiom": self.axiom,
            "inputs": self.inputs,
            "instances": self.instances,
            "verdict": "pass" if self.verdict else "fail",
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    @classmethod
    def from_json(cls, obj) -> "AxiomReport":
        w = obj.get("witness")
        return cls(
            axiom=obj["axiom"],
            verdict=obj["verdict"] == "pass",
            instances=obj["instances"],
            inputs=obj.get("inputs", ""),
            witness=Witness.from_json(w) if w is not None else None,
            detail=obj.get("detail"),
        )


@dataclass
class SignSummary:
    """Extracted reality signs and the KO-dimension they select."""

    epsilon: Optional[int] = None
    epsilon_prime: Optional[int] = None
    epsilon_double_prime: Optional[int] = None
    ko_dimension: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "epsilon_prime": self.epsilon_prime,
            "epsilon_double_prime": self.epsilon_double_prime,
            "ko_dimension": self.ko_dimension,
        }

    @classmethod
    def from_json(cls, obj) -> "SignSummary":
        return cls(
            epsilon=obj.get("epsilon"),
            epsilon_prime=obj.get("epsilon_prime"),
            epsilon_double_prime=obj.get("epsilon_double_prime"),
            ko_dimension=obj.get("ko_dimension"),
        )

    def __str__(self):
        def fmt(v):
            return "?" if v is None else f"{v:+d}"

        ko = "?" if self.ko_dimension is None else str(self.ko_dimension)
        return (
            f"epsilon={fmt(self.epsilon)} epsilon_prime={fmt(self.epsilon_prime)} "
            f"epsilon_double_prime={fmt(self.epsilon_double_prime)} (KO dimension {ko})"
        )


@dataclass
class SuiteReport:
    """Config echo, per-axiom reports, sign summary, overall verdict."""

    config: dict
    axioms: list
    signs: Optional[SignSummary] = None
    elapsed: Optional[float] = None  # text output only, not in JSON

    @property
    def overall(self) -> bool:
        return all(r.verdict for r in self.axioms)

    @property
    def total_instances(self) -> int:
        return sum(r.instances for r in self.axioms)

    def sorted_axioms(self) -> list:
        return sorted(self.axioms, key=lambda r: r.axiom)

    def to_json_dict(self) -> dict:
        return {
            "config": dict(self.config),
            "axioms": [r.to_json() for r in self.sorted_axioms()],
            "signs": self.signs.to_json() if self.signs is not None else None,
            "overall": "pass" if self.overall else "fail",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, obj) -> "SuiteReport":
        signs = obj.get("signs")
        return cls(
            config=dict(obj["config"]),
            axioms=[AxiomReport.from_json(r) for r in obj["axioms"]],
            signs=SignSummary.from_json(signs) if signs is not None else None,
        )

    @classmethod
    def from_json(cls, text: str) -> "SuiteReport":
        return cls.from_json_dict(json.loads(text))

    def to_text(self) -> str:
        lines = []
        cfg = " ".join(f"{k}={v}" for k, v in self.config.items() if v is not None)
        lines.append(f"suite: {cfg}")
        if self.signs is not None:
            lines.append(f"signs: {self.signs}")
        ordered = self.sorted_axioms()
        failures = [r for r in ordered if not r.verdict]
        passes = [r for r in ordered if r.verdict]
        for r in failures:
            lines.append(f"FAIL {r.axiom} ({r.instances} instances) {r.inputs}")
            if r.witness is not None:
                for key, val in r.witness.inputs.items():
                    lines.append(f"    {key} = {val}")
                lines.append(f"    lhs = {r.witness.lhs}")
                lines.append(f"    rhs = {r.witness.rhs}")
        for r in passes:
            lines.append(f"pass {r.axiom} ({r.instances} instances)")
        verdict = "PASS" if self.overall else "FAIL"
        summary = f"{verdict} ({len(self.axioms)} axioms, {self.total_instances} instances)"
        if self.elapsed is not None:
            summary += f" in {self.elapsed:.2f}s"
        lines.append(summary)
        return "\n".join(lines) + "\n"
