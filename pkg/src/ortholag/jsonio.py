"""JSON encoding and decoding of the package's value types.

Wire conventions: a field context is {"type": "Q"} or {"type": "Fp", "p": 5};
scalars are JSON numbers or decimal strings for integers and "a/b" strings
for non-integral rationals; a subspace is {"ambient": d, "basis": [[...]]};
a Gram space is {"field": {...}, "gram": [[...]]}.
"""

from fractions import Fraction

from .errors import UnsupportedContext
from .fields import GF, QQ, PrimeField, Rationals
from .lagrange import LiftPair
from .linalg import Subspace
from .orthospace import GramSpace


def field_to_json(field):
    if isinstance(field, Rationals):
        return {"type": "Q"}
    if isinstance(field, PrimeField):
        return {"type": "Fp", "p": field.p}
    raise UnsupportedContext(f"unknown field {field!r}")


def field_from_json(obj):
    kind = obj.get("type")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(obj["p"])
    raise UnsupportedContext(f"unknown field description {obj!r}")


def scalar_to_json(s):
    v = s.value
    if isinstance(v, int):
        return v
    if v.denominator == 1:
        return int(v)
    return f"{v.numerator}/{v.denominator}"


def scalar_from_json(field, obj):
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise ValueError(f"cannot read scalar from {obj!r}")
    if isinstance(obj, str):
        return field.scalar(Fraction(obj))
    return field.scalar(obj)


def subspace_to_json(s):
    return {"ambient": s.ambient_dim,
            "basis": [[scalar_to_json(x) for x in row]
                      for row in s.basis.entries]}


def subspace_from_json(field, obj):
    ambient = obj["ambient"]
    rows = [[scalar_from_json(field, x) for x in row] for row in obj["basis"]]
    return Subspace.span(field, ambient, rows)


def gramspace_to_json(space):
    return {"field": field_to_json(space.field),
            "gram": [[scalar_to_json(x) for x in row]
                     for row in space.gram.entries]}


def gramspace_from_json(obj):
    field = field_from_json(obj["field"])
    rows = [[scalar_from_json(field, x) for x in row] for row in obj["gram"]]
    return GramSpace(field, rows)


def liftpair_to_json(pair):
    return {"plus": subspace_to_json(pair.plus_lift),
            "minus": subspace_to_json(pair.minus_lift)}


def liftpair_from_json(field, obj):
    return LiftPair(plus_lift=subspace_from_json(field, obj["plus"]),
                    minus_lift=subspace_from_json(field, obj["minus"]))


def stratum_row_to_json(row):
    return {"g": row.g, "n": row.n, "t": row.t, "e": row.e,
            "component": row.component, "stratum_dim": row.stratum_dim,
            "dim_max_lagrangians": row.dim_max_lagrangians,
            "flags": list(row.flags)}
