"""Sparse Laurent polynomials in ``a``, ``z``, ``t`` with integer coefficients.

Every polynomial produced by the package (HOMFLY-PT, Conway, the coloring
invariant and its slices) is a :class:`LaurentPoly`.  Values are immutable
and always kept in canonical form: no stored coefficient is zero.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

__all__ = [
    "ExponentVector",
    "LaurentPoly",
    "ZERO",
    "ONE",
    "A",
    "A_INV",
    "Z",
    "Z_INV",
    "T",
    "monomial",
    "add",
    "mul",
    "substitute_a_one",
    "derivative_a",
    "coefficient_of_t",
]


class ExponentVector(NamedTuple):
    a: int = 0
    z: int = 0
    t: int = 0

    def sort_key(self) -> tuple[int, int, int]:
        return (self.t, self.z, self.a)


class LaurentPoly:
    """Immutable mapping ``ExponentVector -> int`` with zeros stripped."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        clean: dict[ExponentVector, int] = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    clean[ExponentVector(*e)] = c
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[ExponentVector, int]) -> LaurentPoly:
        # terms must already be canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({(0, 0, 0): c})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[ExponentVector, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[ExponentVector, int]]:
        """Terms in canonical ``(t, z, a)`` lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, a: int = 0, z: int = 0, t: int = 0) -> int:
        return self._terms.get(ExponentVector(a, z, t), 0)

    def variables(self) -> set[str]:
        used = set()
        for e in self._terms:
            for name, n in zip("azt", e):
                if n:
                    used.add(name)
        return used

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict[ExponentVector, int] = {}
        for (a1, z1, t1), c1 in self._terms.items():
            for (a2, z2, t2), c2 in other._terms.items():
                e = ExponentVector(a1 + a2, z1 + z2, t1 + t2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    def __rmul__(self, other: int) -> LaurentPoly:
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    inv = LaurentPoly._raw({ExponentVector(-e.a, -e.z, -e.t): c})
                    return inv ** (-n)
            raise ValueError("only signed monomials have Laurent inverses")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> LaurentPoly:
        if c == 0:
            return ZERO
        return LaurentPoly._raw({e: c * v for e, v in self._terms.items()})

    def shift(self, a: int = 0, z: int = 0, t: int = 0) -> LaurentPoly:
        """Multiply by the monomial ``a^a z^z t^t``."""
        if not (a or z or t):
            return self
        return LaurentPoly._raw(
            {ExponentVector(e.a + a, e.z + z, e.t + t): c for e, c in self._terms.items()}
        )

    # -- specializations ---------------------------------------------------

    def substitute_a_one(self) -> LaurentPoly:
        out: dict[tuple[int, int, int], int] = {}
        for e, c in self._terms.items():
            key = (0, e.z, e.t)
            out[key] = out.get(key, 0) + c
        return LaurentPoly(out)

    def derivative_a(self) -> LaurentPoly:
        return LaurentPoly(
            {(e.a - 1, e.z, e.t): e.a * c for e, c in self._terms.items() if e.a}
        )

    def coefficient_of_t(self, k: int) -> LaurentPoly:
        return LaurentPoly._raw(
            {ExponentVector(e.a, e.z, 0): c for e, c in self._terms.items() if e.t == k}
        )

    def coefficient_of_z(self, n: int) -> LaurentPoly:
        return LaurentPoly._raw(
            {ExponentVector(e.a, 0, e.t): c for e, c in self._terms.items() if e.z == n}
        )

    def t_degrees(self) -> list[int]:
        return sorted({e.t for e in self._terms})

    # -- comparison, hashing, rendering ------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            factors = []
            for name, n in (("a", e.a), ("z", e.z), ("t", e.t)):
                if n == 1:
                    factors.append(name)
                elif n:
                    factors.append(f"{name}^{n}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    # -- serialization -----------------------------------------------------

    def to_records(self) -> list[dict]:
        return [
            {"coeff": str(c), "a": e.a, "z": e.z, "t": e.t} for e, c in self.items()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> LaurentPoly:
        out: dict[tuple[int, int, int], int] = {}
        for rec in records:
            key = (int(rec.get("a", 0)), int(rec.get("z", 0)), int(rec.get("t", 0)))
            out[key] = out.get(key, 0) + int(rec["coeff"])
        return cls(out)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def monomial(coeff: int = 1, a: int = 0, z: int = 0, t: int = 0) -> LaurentPoly:
    return LaurentPoly({(a, z, t): coeff})


ZERO = LaurentPoly()
ONE = monomial()
A = monomial(a=1)
A_INV = monomial(a=-1)
Z = monomial(z=1)
Z_INV = monomial(z=-1)
T = monomial(t=1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def substitute_a_one(p: LaurentPoly) -> LaurentPoly:
    """Set ``a = 1`` and merge like terms."""
    return p.substitute_a_one()


def derivative_a(p: LaurentPoly) -> LaurentPoly:
    """Formal partial derivative in ``a``; ``a^n -> n a^(n-1)`` for any integer n."""
    return p.derivative_a()


def coefficient_of_t(p: LaurentPoly, k: int) -> LaurentPoly:
    """The ``t^k`` slice of ``p`` with the ``t`` exponent dropped."""
    return p.coefficient_of_t(k)
