"""JSON model files written by ``fit`` and read by ``predict``."""
import hashlib
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .geometry import Hyperplane

SCHEMA_VERSION = 1


def dataset_hash(dataset):
    h = hashlib.sha256()
    h.update(np.ascontiguousarray(dataset.points, dtype="<f8").tobytes())
    h.update(np.ascontiguousarray(dataset.labels, dtype="<i8").tobytes())
    return h.hexdigest()


@dataclass
class ModelFile:
    n: int
    d: int
    coefficients: list  # homogeneous [normal..., offset]
    sense: float
    optimal_loss: int
    combination: list
    eps: float
    provenance: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if len(self.coefficients) != self.d + 1:
            raise ValueError(f"expected {self.d + 1} coefficients, got {len(self.coefficients)}")
        if not 0 <= self.optimal_loss <= self.n:
            raise ValueError("optimal_loss out of range")

    @property
    def hyperplane(self):
        return Hyperplane.from_homogeneous(self.coefficients, self.sense)

    @classmethod
    def from_report(cls, report, dataset, bounder=None):
        return cls(
            n=dataset.n,
            d=dataset.d,
            coefficients=[float(v) for v in report.hyperplane.homogeneous],
            sense=float(report.sense),
            optimal_loss=int(report.optimal_loss),
            combination=[int(i) for i in report.combination],
            eps=float(report.eps),
            provenance={"dataset_sha256": dataset_hash(dataset), "ub": int(report.ub), "bounder": bounder},
        )

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(asdict(self), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        version = doc.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported model schema version {version!r}")
        return cls(**doc)
