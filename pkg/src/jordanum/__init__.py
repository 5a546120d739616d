"""Exact Jordan constants of GL2, SL2, PGL2 and PGL3 over characteristic-0 fields."""

from importlib import resources as _resources
import json as _json

from .arith import CycElt, sqrt_element
from .errors import JordanumError
from .fields import CC, QQ, RR, abelian, adjoin_sqrt, adjoin_zeta, compositum, function_field
from .groups import ExactMatrix, FiniteGroup, Permutation, ProjMatrix, close, jordan_bruteforce
from .laws import AmbientGroup, JordanAnswer, jordan, jordan_gl2, jordan_pgl2, jordan_pgl3, jordan_sl2
from .oracle import PropertyVector, property_vector

__version__ = "0.1.0"


def report_schema() -> dict:
    """JSON schema of the CLI's ``--json`` reports."""
    return _json.loads(_resources.files(__name__).joinpath("schema.json").read_text("utf-8"))


__all__ = [
    "AmbientGroup", "CC", "CycElt", "ExactMatrix", "FiniteGroup", "JordanAnswer",
    "JordanumError", "Permutation", "ProjMatrix", "PropertyVector", "QQ", "RR",
    "abelian", "adjoin_sqrt", "adjoin_zeta", "close", "compositum", "function_field",
    "jordan", "jordan_bruteforce", "jordan_gl2", "jordan_pgl2", "jordan_pgl3",
    "jordan_sl2", "property_vector", "report_schema", "sqrt_element",
]
