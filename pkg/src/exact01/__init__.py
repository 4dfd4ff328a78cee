"""Exact 0-1 loss linear classification by incremental cell enumeration."""
from .core import Dataset, Item, assign, encode_labels, loss_pair, loss_total
from .engine import SolveReport, solve
from .errors import NoViableModel, SingularSystem
from .geometry import Hyperplane, fit_hyperplane

__all__ = [
    "Dataset", "Item", "Hyperplane", "SolveReport", "NoViableModel", "SingularSystem",
    "assign", "encode_labels", "fit_hyperplane", "loss_pair", "loss_total", "solve",
]
