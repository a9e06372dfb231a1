"""JSON problem documents: parsing with path-located errors, and report serialization.

Indices are 1-based and matrices are lists of rows in the column convention
(column j holds the image of the j-th basis vector). Scalars are integers,
decimal literals or strings such as ``"-3/4"``; decimals convert exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any

from .lie import (
    LieAlgebra,
    Representation,
    adjoint_rep,
    coadjoint_rep,
    trivial_rep,
    validate_lie,
    validate_rep,
)
from .linalg import Matrix, to_rational
from .rmatrix import MultiVector


class InputError(ValueError):
    """A problem document is malformed; ``path`` locates the offending value."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class ProblemDocument:
    algebra: LieAlgebra
    rep: Representation | None = None
    operator: Matrix | None = None
    rmatrix: MultiVector | None = None
    rmatrix_source: MultiVector | None = None
    kappa: MultiVector | None = None
    taus: tuple = ()
    elements: tuple = ()
    generator: Matrix | None = None
    maps: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict, repr=False, compare=False)


# --- scalar / structural parsing ---------------------------------------------

def _scalar(value: Any, path: str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(path, f"expected a rational scalar, got {json.dumps(value, default=str)}")
    try:
        return to_rational(value)
    except (TypeError, ValueError) as exc:
        raise InputError(path, str(exc)) from None


def _count(value: Any, path: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputError(path, f"expected an integer >= {minimum}")
    return value


def _vector(value: Any, length: int, path: str) -> tuple:
    if not isinstance(value, list):
        raise InputError(path, "expected a list of scalars")
    if len(value) != length:
        raise InputError(path, f"expected {length} entries, got {len(value)}")
    return tuple(_scalar(v, f"{path}[{k}]") for k, v in enumerate(value))


def _matrix(value: Any, rows: int, cols: int, path: str) -> Matrix:
    if not isinstance(value, list):
        raise InputError(path, "expected a matrix as a list of rows")
    if len(value) != rows:
        raise InputError(path, f"expected {rows} rows, got {len(value)}")
    return Matrix.from_rows([_vector(r, cols, f"{path}[{k}]") for k, r in enumerate(value)])


def _index(value: Any, dim: int, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= dim:
        raise InputError(path, f"expected an index in 1..{dim}")
    return value


def _require(doc: dict, key: str, path: str = "$") -> Any:
    if key not in doc:
        raise InputError(f"{path}.{key}", "required field is missing")
    return doc[key]


def parse_algebra(value: Any, path: str = "$.lie_algebra") -> LieAlgebra:
    if not isinstance(value, dict):
        raise InputError(path, "expected an object with 'dim' and 'brackets'")
    dim = _count(_require(value, "dim", path), f"{path}.dim", 1)
    brackets = value.get("brackets", [])
    if not isinstance(brackets, list):
        raise InputError(f"{path}.brackets", "expected a list")
    structure = {}
    for k, entry in enumerate(brackets):
        p = f"{path}.brackets[{k}]"
        if not isinstance(entry, dict):
            raise InputError(p, "expected an object with 'i', 'j', 'value'")
        i = _index(_require(entry, "i", p), dim, f"{p}.i")
        j = _index(_require(entry, "j", p), dim, f"{p}.j")
        if i >= j:
            raise InputError(p, f"brackets are stored for i < j only, got i={i}, j={j}")
        if (i - 1, j - 1) in structure:
            raise InputError(p, f"bracket [{i},{j}] given twice")
        structure[(i - 1, j - 1)] = _vector(_require(entry, "value", p), dim, f"{p}.value")
    L = LieAlgebra(dim, structure)
    bad = validate_lie(L)
    if bad:
        raise InputError(path, f"Jacobi identity fails on basis triples {[v['triple'] for v in bad]}")
    return L


def parse_representation(value: Any, L: LieAlgebra, path: str = "$.representation") -> Representation:
    if isinstance(value, str):
        if value == "adjoint":
            return adjoint_rep(L)
        if value == "coadjoint":
            return coadjoint_rep(L)
        raise InputError(path, "expected 'adjoint', 'coadjoint' or an object with 'dimV' and 'rho'")
    if not isinstance(value, dict):
        raise InputError(path, "expected 'adjoint', 'coadjoint' or an object with 'dimV' and 'rho'")
    dimV = _count(_require(value, "dimV", path), f"{path}.dimV", 1)
    if "rho" not in value:
        if value.get("trivial"):
            return trivial_rep(L, dimV)
        raise InputError(f"{path}.rho", "required field is missing")
    rho = value["rho"]
    if not isinstance(rho, list) or len(rho) != L.dim:
        raise InputError(f"{path}.rho", f"expected {L.dim} matrices, one per basis vector of g")
    R = Representation(L, dimV, tuple(_matrix(m, dimV, dimV, f"{path}.rho[{k}]") for k, m in enumerate(rho)))
    bad = validate_rep(R)
    if bad:
        raise InputError(path, f"not a representation; fails on basis pairs {[v['pair'] for v in bad]}")
    return R


def parse_multivector(value: Any, L: LieAlgebra, path: str, degree: int | None = None) -> MultiVector:
    if not isinstance(value, list):
        raise InputError(path, "expected a list of {indices, coeff} terms")
    terms: dict = {}
    deg = degree
    for k, term in enumerate(value):
        p = f"{path}[{k}]"
        if not isinstance(term, dict):
            raise InputError(p, "expected an object with 'indices' and 'coeff'")
        idx = _require(term, "indices", p)
        if not isinstance(idx, list):
            raise InputError(f"{p}.indices", "expected a list of indices")
        idx = tuple(_index(v, L.dim, f"{p}.indices[{a}]") for a, v in enumerate(idx))
        if deg is None:
            deg = len(idx)
        if len(idx) != deg:
            raise InputError(f"{p}.indices", f"expected {deg} indices, got {len(idx)}")
        if len(set(idx)) != len(idx):
            raise InputError(f"{p}.indices", "repeated index")
        c = _scalar(_require(term, "coeff", p), f"{p}.coeff")
        terms[idx] = terms.get(idx, Fraction(0)) + c
    return MultiVector.from_terms(L, deg if deg is not None else 0, terms)


def parse_document(text: str) -> ProblemDocument:
    try:
        doc = json.loads(text, parse_float=lambda s: Fraction(s))
    except json.JSONDecodeError as exc:
        raise InputError("$", f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("$", "expected a JSON object")
    L = parse_algebra(_require(doc, "lie_algebra"))
    rep = parse_representation(doc["representation"], L) if "representation" in doc else None

    operator = None
    if "operator" in doc:
        if rep is None:
            raise InputError("$.representation", "required when 'operator' is given")
        operator = _matrix(doc["operator"], L.dim, rep.dimV, "$.operator")

    generator = None
    if "generator" in doc:
        if rep is None:
            raise InputError("$.representation", "required when 'generator' is given")
        generator = _matrix(doc["generator"], L.dim, rep.dimV, "$.generator")

    taus = ()
    if "taus" in doc:
        if rep is None:
            raise InputError("$.representation", "required when 'taus' is given")
        if not isinstance(doc["taus"], list):
            raise InputError("$.taus", "expected a list of matrices")
        taus = tuple(_matrix(m, L.dim, rep.dimV, f"$.taus[{k}]") for k, m in enumerate(doc["taus"]))

    elements = ()
    if "elements" in doc:
        if not isinstance(doc["elements"], list):
            raise InputError("$.elements", "expected a list of vectors")
        elements = tuple(_vector(v, L.dim, f"$.elements[{k}]") for k, v in enumerate(doc["elements"]))

    r = parse_multivector(doc["rmatrix"], L, "$.rmatrix", 2) if "rmatrix" in doc else None
    r_src = parse_multivector(doc["rmatrix_source"], L, "$.rmatrix_source", 2) if "rmatrix_source" in doc else None
    kappa = parse_multivector(doc["kappa"], L, "$.kappa", 2) if "kappa" in doc else None

    maps = {}
    if "maps" in doc:
        raw_maps = doc["maps"]
        if not isinstance(raw_maps, dict):
            raise InputError("$.maps", "expected an object")
        for name, m in raw_maps.items():
            if name in ("phi_g", "phi", "psi"):
                maps[name] = _matrix(m, L.dim, L.dim, f"$.maps.{name}")
            elif name == "phi_V":
                if rep is None:
                    raise InputError("$.representation", "required when 'maps.phi_V' is given")
                maps[name] = _matrix(m, rep.dimV, rep.dimV, f"$.maps.{name}")
            else:
                raise InputError(f"$.maps.{name}", "unknown map (expected phi_g, phi_V, phi or psi)")

    return ProblemDocument(L, rep, operator, r, r_src, kappa, taus, elements, generator, maps, doc)


def load_document(path: str) -> ProblemDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("$", f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


# --- bundled corpus -----------------------------------------------------------

def bundled_names() -> list[str]:
    return sorted(p.name for p in resources.files("olab.data").iterdir() if p.name.endswith(".json"))


def bundled_text(name: str) -> str:
    if not name.endswith(".json"):
        name += ".json"
    return resources.files("olab.data").joinpath(name).read_text(encoding="utf-8")


def bundled_document(name: str) -> ProblemDocument:
    return parse_document(bundled_text(name))


# --- serialization ----------------------------------------------------------------

def to_jsonable(obj: Any) -> Any:
    """Fractions become "p/q" strings; tuples become lists; matrices become row lists."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Matrix):
        return [[str(x) for x in row] for row in obj.to_rows()]
    if isinstance(obj, MultiVector):
        return multivector_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def multivector_json(P: MultiVector) -> list:
    return [{"indices": [i + 1 for i in key], "coeff": str(c)} for key, c in P.coeffs.items()]


def dumps(report: dict) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2) + "\n"
