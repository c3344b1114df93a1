"""Seeded sample generators with known truth curves, and CSV input/output."""

from .rng import SeededRng, sample_gamma
from .spec import ProcessSpec, PROCESS_KINDS
from .generate import generate, generate_iid, generate_ear1, generate_regression
from .ingest import ingest_csv, write_csv

__all__ = [
    "SeededRng",
    "sample_gamma",
    "ProcessSpec",
    "PROCESS_KINDS",
    "generate",
    "generate_iid",
    "generate_ear1",
    "generate_regression",
    "ingest_csv",
    "write_csv",
]
