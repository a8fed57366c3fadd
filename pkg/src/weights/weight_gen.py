"""
Weight generating functions.

G(z) = prod_i (1 + u_i z) / prod_j (1 + v_j z) * prod_e exp(c_e w_e z)

with each w_e a nilpotent parameter of truncation order W_e, so that G(0) = 1 and every
value G(c) at an integer content is an exact `Coeff`.

Classes:
    ExpWeight: One exponential factor exp(coeff * param * z).
    WeightGen: The full generating function, closed under product and inverse.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, TYPE_CHECKING

if TYPE_CHECKING:  # typing.Self needs Python 3.11+
    from typing import Self

from src.symfunc import Coeff, Scalar, as_coeff, coeff_to_json, coeff_from_json

DEFAULT_PARAM = "w"


@dataclass(frozen=True)
class ExpWeight:
    """
    The factor exp(coeff * param * z).

    Attributes:
        coeff (Fraction): Rational multiplier of the parameter.
        param (str): Name of the nilpotent parameter.
        order (int): Truncation order, param**(order+1) == 0.
    """
    coeff: Fraction
    param: str = DEFAULT_PARAM
    order: int = 4

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.order < 0:
            raise ValueError(f"Truncation order must be non-negative, got {self.order}")

    def exponent(self, content: int) -> Coeff:
        """The exponent coeff * param * content."""
        return Scalar.param(self.param, self.order, self.coeff * content).collapse()

    def to_json(self) -> dict:
        return {"coeff": str(self.coeff), "param": self.param, "order": self.order}


def _cancel(u: tuple[Coeff, ...], v: tuple[Coeff, ...]) -> tuple[tuple[Coeff, ...], tuple[Coeff, ...]]:
    common = Counter(u) & Counter(v)
    if not common:
        return u, v

    def strip(values):
        remaining = Counter(common)
        kept = []
        for x in values:
            if remaining[x] > 0:
                remaining[x] -= 1
            else:
                kept.append(x)
        return tuple(kept)

    return strip(u), strip(v)


def _merge_exp(weights: tuple[ExpWeight, ...]) -> tuple[ExpWeight, ...]:
    merged: dict[tuple[str, int], Fraction] = {}
    for weight in weights:
        key = (weight.param, weight.order)
        merged[key] = merged.get(key, Fraction(0)) + weight.coeff
    return tuple(
        ExpWeight(coeff, param, order)
        for (param, order), coeff in sorted(merged.items()) if coeff != 0
    )


@dataclass(frozen=True)
class WeightGen:
    """
    A weight generating function with G(0) = 1.

    Attributes:
        u (tuple[Coeff, ...]): Numerator parameters, factors 1 + u_i z.
        v (tuple[Coeff, ...]): Denominator parameters, factors 1 + v_j z.
        w (tuple[ExpWeight, ...]): Exponential factors.

    Equal numerator and denominator parameters cancel on construction.
    """
    u: tuple[Coeff, ...] = field(default=())
    v: tuple[Coeff, ...] = field(default=())
    w: tuple[ExpWeight, ...] = field(default=())

    def __post_init__(self):
        u = tuple(as_coeff(x) for x in self.u)
        v = tuple(as_coeff(x) for x in self.v)
        u, v = _cancel(u, v)
        u = tuple(x for x in u if x != 0)
        v = tuple(x for x in v if x != 0)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", _merge_exp(tuple(self.w)))

    @classmethod
    def trivial(cls) -> Self:
        """G = 1."""
        return cls()

    @classmethod
    def g_plus(cls, *u) -> Self:
        """G^+(u) = prod (1 + u_i z)."""
        return cls(u=tuple(u))

    @classmethod
    def g_minus(cls, *v) -> Self:
        """G^-(v) = prod 1 / (1 + v_j z)."""
        return cls(v=tuple(v))

    @classmethod
    def g_exp(cls, coeff=1, param: str = DEFAULT_PARAM, order: int = 4) -> Self:
        """G^exp = exp(coeff * param * z)."""
        return cls(w=(ExpWeight(Fraction(coeff), param, order),))

    def is_trivial(self) -> bool:
        """True when G = 1."""
        return not self.u and not self.v and not self.w

    def product(self, other: "WeightGen") -> "WeightGen":
        """The generating function G_self * G_other."""
        return WeightGen(self.u + other.u, self.v + other.v, self.w + other.w)

    __mul__ = product

    def inverse(self) -> "WeightGen":
        """1 / G."""
        return WeightGen(
            self.v, self.u, tuple(ExpWeight(-e.coeff, e.param, e.order) for e in self.w)
        )

    def to_json(self) -> dict:
        """{"u": ["p/q"...], "v": [...], "w": [{"coeff", "param", "order"}...]}"""
        return {
            "u": [coeff_to_json(x) for x in self.u],
            "v": [coeff_to_json(x) for x in self.v],
            "w": [e.to_json() for e in self.w],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Self:
        """
        Read a weight; "w" may be a single {"coeff", "order"[, "param"]} object or a list.

        Raises:
            ValueError: Malformed entries.
        """
        if not isinstance(data, Mapping):
            raise ValueError(f"Weight must be a JSON object, got {data!r}")
        unknown = set(data) - {"u", "v", "w"}
        if unknown:
            raise ValueError(f"Unknown weight fields {sorted(unknown)}")
        raw_w = data.get("w") or []
        if isinstance(raw_w, Mapping):
            raw_w = [raw_w]
        try:
            exp_weights = tuple(
                ExpWeight(
                    Fraction(coeff_from_json(e.get("coeff", "1"))),
                    str(e.get("param", DEFAULT_PARAM)),
                    int(e.get("order", 4)),
                )
                for e in raw_w
            )
        except (TypeError, AttributeError) as exc:
            raise ValueError(f"Malformed exponential weight {raw_w!r}") from exc
        return cls(
            tuple(coeff_from_json(x) for x in data.get("u", [])),
            tuple(coeff_from_json(x) for x in data.get("v", [])),
            exp_weights,
        )

    def __str__(self) -> str:
        pieces = [f"(1+{x}z)" for x in self.u]
        pieces += [f"(1+{x}z)^-1" for x in self.v]
        pieces += [f"exp({e.coeff}*{e.param}*z)" for e in self.w]
        return "*".join(pieces) or "1"
