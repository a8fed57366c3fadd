"""
Scalar module.

Exact coefficients of every series in TauForge. A coefficient is either a plain
`fractions.Fraction` or a `Scalar`: a polynomial with Fraction coefficients in named
nilpotent parameters, each parameter `w` carrying a truncation order `W` so that
`w**(W+1) == 0`. Arithmetic between the two kinds is transparent, and any result
free of parameters collapses back to a Fraction.

Functions:
    as_coeff: Coerce ints, Fractions, "p/q" strings and Scalars to a coefficient.
    is_zero: Zero test for either kind.
    coeff_to_json / coeff_from_json: JSON form ("p/q" strings for rationals).
    exp_nilpotent: exp(x) for x with vanishing constant term.
"""
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

# A parameter monomial: sorted ((name, exponent), ...), exponents positive
ParamMonomial = tuple[tuple[str, int], ...]


def _merge_orders(
    left: tuple[tuple[str, int], ...], right: tuple[tuple[str, int], ...]
) -> tuple[tuple[str, int], ...]:
    merged = dict(left)
    for name, order in right:
        merged[name] = min(order, merged.get(name, order))
    return tuple(sorted(merged.items()))


def _mul_monomials(
    left: ParamMonomial, right: ParamMonomial, orders: Mapping[str, int]
) -> ParamMonomial | None:
    exps = dict(left)
    for name, power in right:
        exps[name] = exps.get(name, 0) + power
    for name, power in exps.items():
        if power > orders.get(name, power):
            return None
    return tuple(sorted(exps.items()))


class Scalar:
    """
    Rational polynomial in nilpotent parameters, immutable.

    Attributes:
        terms (dict[ParamMonomial, Fraction]): Non-zero coefficients by parameter monomial.
        orders (tuple[tuple[str, int], ...]): Truncation order of every parameter.

    Example:
        ```python
        w = Scalar.param("w", 2)
        (1 + w) ** 3  # 1 + 3w + 3w^2
        ```
    """
    __slots__ = ("terms", "orders", "_hash")

    def __init__(
        self,
        terms: Mapping[ParamMonomial, Fraction | int],
        orders: Iterable[tuple[str, int]] | Mapping[str, int] = (),
    ):
        if isinstance(orders, Mapping):
            orders = orders.items()
        order_map = {}
        for name, order in orders:
            if order < 0:
                raise ValueError(f"Truncation order of {name!r} must be non-negative")
            order_map[name] = min(order, order_map.get(name, order))
        clean: dict[ParamMonomial, Fraction] = {}
        for monomial, value in terms.items():
            value = Fraction(value)
            if value == 0:
                continue
            monomial = tuple(sorted((n, p) for n, p in monomial if p != 0))
            if any(p < 0 for _, p in monomial):
                raise ValueError(f"Negative parameter power in {monomial!r}")
            if any(n not in order_map for n, _ in monomial):
                raise ValueError(f"Parameter without truncation order in {monomial!r}")
            if any(p > order_map[n] for n, p in monomial):
                continue
            clean[monomial] = clean.get(monomial, Fraction(0)) + value
        self.terms = {m: v for m, v in clean.items() if v != 0}
        self.orders = tuple(sorted(order_map.items()))
        self._hash = None

    @classmethod
    def param(cls, name: str, order: int, coeff: Fraction | int = 1) -> "Scalar":
        """The parameter `coeff * name` with `name**(order+1) == 0`."""
        return cls({((name, 1),): coeff}, {name: order})

    @property
    def constant(self) -> Fraction:
        """Coefficient of the empty parameter monomial."""
        return self.terms.get((), Fraction(0))

    def is_rational(self) -> bool:
        """True when no parameter appears."""
        return all(m == () for m in self.terms)

    def collapse(self) -> "Coeff":
        """Return a Fraction when no parameter appears, otherwise self."""
        if self.is_rational():
            return self.constant
        return self

    def _binary(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)):
            return Scalar({(): Fraction(other)})
        return None

    def __add__(self, other):
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, v in rhs.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + v
        return Scalar(terms, _merge_orders(self.orders, rhs.orders)).collapse()

    __radd__ = __add__

    def __neg__(self):
        return Scalar({m: -v for m, v in self.terms.items()}, self.orders)

    def __sub__(self, other):
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        lhs = self._binary(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other):
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        orders = _merge_orders(self.orders, rhs.orders)
        order_map = dict(orders)
        terms: dict[ParamMonomial, Fraction] = {}
        for m1, v1 in self.terms.items():
            for m2, v2 in rhs.terms.items():
                m = _mul_monomials(m1, m2, order_map)
                if m is not None:
                    terms[m] = terms.get(m, Fraction(0)) + v1 * v2
        return Scalar(terms, orders).collapse()

    __rmul__ = __mul__

    def inverse(self) -> "Coeff":
        """
        Multiplicative inverse, c^-1 * sum (-n/c)^k for self = c + n, n nilpotent.

        Raises:
            ZeroDivisionError: The constant term vanishes.
        """
        c = self.constant
        if c == 0:
            raise ZeroDivisionError(f"Scalar {self} has no inverse")
        step = (self - c) * (Fraction(-1) / c)
        total: Coeff = Fraction(1)
        power: Coeff = Fraction(1)
        while True:
            power = power * step
            if is_zero(power):
                break
            total = total + power
        return total * (1 / c)

    def __truediv__(self, other):
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other):
        lhs = self._binary(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        else:
            base = self
        result: Coeff = Fraction(1)
        for _ in range(exponent):
            result = result * base
        return result

    def __eq__(self, other):
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        return self.terms == rhs.terms

    def __hash__(self):
        if self.is_rational():
            return hash(self.constant)
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> dict:
        """JSON form: {"terms": [{"num": "p/q", "param_monomial": [[name, power]...]}], "orders": {...}}"""
        return {
            "terms": [
                {"num": str(v), "param_monomial": [[n, p] for n, p in m]}
                for m, v in sorted(self.terms.items())
            ],
            "orders": dict(self.orders),
        }

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, v in sorted(self.terms.items()):
            name = "*".join(n if p == 1 else f"{n}^{p}" for n, p in m)
            pieces.append(str(v) if not name else (name if v == 1 else f"{v}*{name}"))
        return " + ".join(pieces)

    def __repr__(self):
        return f"Scalar({self})"


Coeff = Union[Fraction, Scalar]


def as_coeff(value) -> Coeff:
    """Coerce ints, Fractions, "p/q" strings and Scalars to a coefficient."""
    if isinstance(value, Scalar):
        return value.collapse()
    if isinstance(value, bool):
        raise ValueError(f"Not a coefficient: {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Not a rational: {value!r}") from exc
    raise ValueError(f"Not a coefficient: {value!r}")


def is_zero(value: Coeff) -> bool:
    """Zero test for Fractions and Scalars."""
    return value == 0


def param_parts(value: Coeff) -> dict[ParamMonomial, Fraction]:
    """Split a coefficient into rational parts by parameter monomial."""
    if isinstance(value, Scalar):
        return dict(value.terms)
    return {(): value} if value != 0 else {}


def param_orders(value: Coeff) -> tuple[tuple[str, int], ...]:
    """Truncation orders carried by a coefficient."""
    return value.orders if isinstance(value, Scalar) else ()


def inverse(value: Coeff) -> Coeff:
    """Inverse of a coefficient; raises ZeroDivisionError when not invertible."""
    if isinstance(value, Scalar):
        return value.inverse()
    return 1 / value


def exp_nilpotent(value: Coeff) -> Coeff:
    """
    exp(value) as a finite sum.

    Raises:
        ValueError: The constant term is not zero, so the result is not rational.
    """
    if isinstance(value, Scalar):
        if value.constant != 0:
            raise ValueError(f"exp of {value} is not exact: non-zero constant term")
    elif value != 0:
        raise ValueError(f"exp of {value} is not exact")
    total: Coeff = Fraction(1)
    power: Coeff = Fraction(1)
    k = 0
    while True:
        k += 1
        power = power * value / k
        if is_zero(power):
            return total
        total = total + power


def coeff_to_json(value: Coeff):
    """Rationals as "p/q" strings, Scalars as their dict form."""
    if isinstance(value, Scalar):
        collapsed = value.collapse()
        if isinstance(collapsed, Scalar):
            return collapsed.to_json()
        value = collapsed
    return str(value)


def coeff_from_json(data) -> Coeff:
    """Inverse of `coeff_to_json`."""
    if isinstance(data, dict):
        try:
            terms = {
                tuple((str(n), int(p)) for n, p in t["param_monomial"]): Fraction(t["num"])
                for t in data["terms"]
            }
            return Scalar(terms, {str(k): int(v) for k, v in data["orders"].items()}).collapse()
        except (KeyError, TypeError) as exc:
            raise ValueError(f"Malformed scalar JSON: {data!r}") from exc
    return as_coeff(data)
