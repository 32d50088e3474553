"""Exact scalars: GF(p), GF(p^k) and the rationals, each with an involution.

Elements are handled as *raw values* by the rest of the package: an ``int``
code for finite fields (the coefficient vector ``c_0 + c_1 p + ...`` of the
residue modulo the defining polynomial) and a :class:`fractions.Fraction`
for the rationals.  :class:`FieldElement` wraps a raw value together with its
field for interactive use and operator overloading.

The parameter groups ``Lambda_min``, ``Lambda_max`` and the admissible
``Lambda`` in between live here as :class:`AdditiveSubgroup` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import FieldMismatchError, InfiniteFieldError, PreconditionError

__all__ = [
    "Field", "FieldElement", "AdditiveSubgroup", "named_field", "roster_fields",
    "field_arithmetic", "involve", "norm_one_elements", "hilbert90_solve",
    "lambda_min", "lambda_max", "subgroup_validate", "coset_reduce",
    "lambda_table_row",
]

# Vetted defining polynomials, coefficients low degree first, monic.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (3, 2): (1, 0, 1),        # x^2 + 1, so GF(9) = GF(3)[i]
    (5, 2): (2, 0, 1),        # x^2 + 2
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (7, 2): (1, 0, 1),        # x^2 + 1
}

MAX_TABLE_ORDER = 1 << 12


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -- polynomials over GF(p), coefficient lists low degree first -----------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _poly_trim(a)
    m = _poly_trim(m)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _poly_trim(a)
    return a


def is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = _poly_trim(modulus)
    k = len(m) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(m, list(low) + [1], p):
                return False
    return True


def default_modulus(p, k):
    if (p, k) in DEFAULT_MODULI:
        return DEFAULT_MODULI[(p, k)]
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise PreconditionError(f"no irreducible polynomial of degree {k} over GF({p})")


class Field:
    """A field with a chosen involution.

    Use the constructors :meth:`prime`, :meth:`extension` and
    :meth:`rationals` rather than calling ``Field(...)`` directly.
    """

    def __init__(self, kind, p=0, k=1, modulus=None, involution="id"):
        if kind not in ("prime", "extension", "rationals"):
            raise PreconditionError(f"unknown field kind {kind!r}")
        if involution not in ("id", "frobenius"):
            raise PreconditionError(f"unknown involution {involution!r}")
        self.kind = kind
        self.involution = involution
        if kind == "rationals":
            if involution != "id":
                raise PreconditionError("the rationals admit only the identity involution")
            self.p, self.k, self.modulus, self.order = 0, 1, None, None
            return
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        if kind == "prime":
            k, modulus = 1, (0, 1)
        elif modulus is None:
            modulus = default_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(_poly_trim(modulus)) != k + 1 or modulus[-1] != 1:
            raise PreconditionError(f"modulus must be monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise PreconditionError(f"modulus {modulus} is reducible over GF({p})")
        if involution == "frobenius" and k % 2:
            raise PreconditionError("a nontrivial involution on GF(p^k) needs k even")
        self.p, self.k, self.modulus = p, k, modulus
        self.order = p ** k
        if self.order > MAX_TABLE_ORDER:
            raise PreconditionError(f"field order {self.order} is beyond desk scale")
        self._build_tables()
        self._check_involution()

    # -- constructors ----------------------------------------------------

    @classmethod
    def prime(cls, p, involution="id"):
        return cls("prime", p, 1, None, involution)

    @classmethod
    def extension(cls, p, k, modulus=None, involution="id"):
        return cls("extension", p, k, modulus, involution)

    @classmethod
    def rationals(cls):
        return cls("rationals")

    # -- tables ----------------------------------------------------------

    def _build_tables(self):
        p, k, q = self.p, self.k, self.order
        polys = [self._code_to_coords(c) for c in range(q)]

        self._add = [[self._coords_to_code([(x + y) % p for x, y in zip(a, b)])
                      for b in polys] for a in polys]
        self._neg = [self._coords_to_code([(-x) % p for x in a]) for a in polys]
        mod = list(self.modulus)
        mul = []
        for a in polys:
            row = []
            for b in polys:
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(a):
                    if x:
                        for j, y in enumerate(b):
                            prod[i + j] = (prod[i + j] + x * y) % p
                r = _poly_mod(prod, mod, p)
                row.append(self._coords_to_code(r + [0] * (k - len(r))))
            mul.append(row)
        self._mul = mul
        self._inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    self._inv[a] = b
                    break
        if self.involution == "id":
            self._conj = list(range(q))
        else:
            e = p ** (k // 2)
            self._conj = [self._power(a, e) for a in range(q)]

    def _power(self, a, e):
        r = 1
        for _ in range(e):
            r = self._mul[r][a]
        return r

    def _check_involution(self):
        c, add, mul = self._conj, self._add, self._mul
        for a in range(self.order):
            if c[c[a]] != a:
                raise PreconditionError("involution does not square to the identity")
            for b in range(self.order):
                if c[add[a][b]] != add[c[a]][c[b]] or c[mul[a][b]] != mul[c[a]][c[b]]:
                    raise PreconditionError("involution is not a field automorphism")

    def _code_to_coords(self, c):
        out = []
        for _ in range(self.k):
            c, r = divmod(c, self.p)
            out.append(r)
        return out

    def _coords_to_code(self, coords):
        c = 0
        for x in reversed(list(coords)):
            c = c * self.p + x
        return c

    # -- identity --------------------------------------------------------

    @property
    def key(self):
        return (self.kind, self.p, self.k, self.modulus, self.involution)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def name(self):
        if self.kind == "rationals":
            return "Q"
        base = f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"
        return base + ("" if self.involution == "id" else "/frob")

    def __repr__(self):
        return f"<Field {self.name}>"

    @property
    def is_finite(self):
        return self.kind != "rationals"

    @property
    def characteristic(self):
        return self.p

    @property
    def has_trivial_involution(self):
        return self.involution == "id"

    @cached_property
    def prime_field(self):
        if not self.is_finite:
            return self
        if self.kind == "prime" and self.involution == "id":
            return self
        return Field.prime(self.p)

    # -- raw arithmetic --------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rationals" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rationals" else 1

    def add(self, a, b):
        if self.order is None:
            return a + b
        return self._add[a][b]

    def sub(self, a, b):
        if self.order is None:
            return a - b
        return self._add[a][self._neg[b]]

    def neg(self, a):
        if self.order is None:
            return -a
        return self._neg[a]

    def mul(self, a, b):
        if self.order is None:
            return a * b
        return self._mul[a][b]

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        if self.order is None:
            return 1 / a
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def conj(self, a):
        if self.order is None:
            return a
        return self._conj[a]

    def norm(self, a):
        return self.mul(a, self.conj(a))

    def from_int(self, n):
        if self.order is None:
            return Fraction(n)
        return n % self.p

    def coerce(self, x):
        """Turn an int, Fraction, coordinate list or FieldElement into a raw value."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"{x.field.name} element used in {self.name}")
            return x.value
        if self.order is None:
            if isinstance(x, str):
                return Fraction(x)
            if isinstance(x, (list, tuple)):
                raise PreconditionError("rational elements have no coordinate vector")
            return Fraction(x)
        if isinstance(x, (list, tuple)):
            if len(x) > self.k:
                raise PreconditionError(f"too many coordinates for {self.name}")
            return self._coords_to_code([int(c) % self.p for c in x] + [0] * (self.k - len(x)))
        if isinstance(x, Fraction):
            return self.div(self.from_int(x.numerator), self.from_int(x.denominator))
        return self.from_int(int(x))

    def raw(self, x):
        """Like :meth:`coerce`, except that an int in ``range(order)`` is a raw code.

        Negative ints keep integer meaning, so ``raw(-1)`` is minus one.
        """
        if isinstance(x, int) and not isinstance(x, bool) and self.order is not None and 0 <= x < self.order:
            return x
        return self.coerce(x)

    def __call__(self, x):
        return FieldElement(self, self.coerce(x))

    def elements(self):
        """Raw values of every element, in code order (0 first)."""
        if self.order is None:
            raise InfiniteFieldError("the rationals cannot be enumerated")
        return range(self.order)

    def nonzero(self):
        return range(1, self.order) if self.order is not None else self.elements()

    def coords(self, a):
        """Coordinates of a over the prime field (modulus basis 1, x, x^2, ...)."""
        if self.order is None:
            return (a,)
        return tuple(self._code_to_coords(a))

    def from_coords(self, coords):
        if self.order is None:
            return Fraction(coords[0])
        return self._coords_to_code([int(c) % self.p for c in coords])

    def basis(self):
        """Raw values of the prime-field basis 1, x, ..., x^(k-1)."""
        if self.order is None:
            return [Fraction(1)]
        return [self.p ** i for i in range(self.k)]

    def fixed_elements(self):
        return [a for a in self.elements() if self.conj(a) == a]

    # -- text and JSON ---------------------------------------------------

    def format(self, a):
        if self.order is None:
            return str(a)
        if self.k == 1:
            return str(a)
        terms = []
        for i, c in enumerate(self.coords(a)):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"

    def to_json_value(self, a):
        if self.order is None:
            return int(a) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        if self.k == 1:
            return a
        return list(self.coords(a))

    def to_json(self):
        d = {"kind": self.kind}
        if self.kind != "rationals":
            d["p"] = self.p
            if self.kind == "extension":
                d["k"] = self.k
                d["modulus"] = list(self.modulus)
        d["involution"] = self.involution
        return d

    @classmethod
    def from_json(cls, d):
        if isinstance(d, str):
            return named_field(d)
        kind = d["kind"]
        inv = d.get("involution", "id")
        if inv == "frob":
            inv = "frobenius"
        if kind == "rationals":
            return cls.rationals()
        if kind == "prime":
            return cls.prime(d["p"], inv)
        return cls.extension(d["p"], d["k"], d.get("modulus"), inv)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: object

    def _other(self, b):
        if isinstance(b, FieldElement):
            if b.field != self.field:
                raise FieldMismatchError(f"{self.field.name} vs {b.field.name}")
            return b.value
        return self.field.coerce(b)

    def __add__(self, b):
        return FieldElement(self.field, self.field.add(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return FieldElement(self.field, self.field.sub(self.value, self._other(b)))

    def __rsub__(self, b):
        return FieldElement(self.field, self.field.sub(self._other(b), self.value))

    def __mul__(self, b):
        return FieldElement(self.field, self.field.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return FieldElement(self.field, self.field.div(self.value, self._other(b)))

    def __rtruediv__(self, b):
        return FieldElement(self.field, self.field.div(self._other(b), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __eq__(self, b):
        if isinstance(b, FieldElement):
            return self.field == b.field and self.value == b.value
        try:
            return self.value == self.field.coerce(b)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return bool(self.value)

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def conj(self):
        return FieldElement(self.field, self.field.conj(self.value))

    def coords(self):
        return self.field.coords(self.value)

    def __repr__(self):
        return f"{self.field.name}({self.field.format(self.value)})"


_NAMED = {
    "gf2": (2, 1), "gf3": (3, 1), "gf4": (2, 2), "gf5": (5, 1),
    "gf7": (7, 1), "gf8": (2, 3), "gf9": (3, 2), "gf16": (2, 4), "gf25": (5, 2),
}


def named_field(name, sigma="id"):
    """Shorthand lookup: ``gf2``, ``gf3``, ``gf4``, ``gf5``, ``gf9``, ``q``."""
    name = name.lower()
    if sigma == "frob":
        sigma = "frobenius"
    if name in ("q", "qq", "rationals"):
        if sigma != "id":
            raise PreconditionError("the rationals admit only the identity involution")
        return Field.rationals()
    if name not in _NAMED:
        raise PreconditionError(f"unknown field shorthand {name!r}")
    p, k = _NAMED[name]
    if k == 1:
        if sigma != "id":
            raise PreconditionError(f"{name} has no nontrivial involution")
        return Field.prime(p)
    return Field.extension(p, k, None, sigma)


def roster_fields():
    """The desk-scale test roster: GF(2), GF(3), GF(4) x2, GF(5), GF(9) x2."""
    return [
        named_field("gf2"), named_field("gf3"),
        named_field("gf4"), named_field("gf4", "frobenius"),
        named_field("gf5"),
        named_field("gf9"), named_field("gf9", "frobenius"),
    ]


def field_arithmetic(a, b, op):
    if not isinstance(a, FieldElement) or not isinstance(b, FieldElement):
        raise TypeError("field_arithmetic expects FieldElement operands")
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field.name} vs {b.field.name}")
    F = a.field
    fn = {"add": F.add, "sub": F.sub, "mul": F.mul, "div": F.div}[op]
    return FieldElement(F, fn(a.value, b.value))


def involve(a):
    return a.conj()


def norm_one_elements(field):
    """All eps with eps * sigma(eps) = 1, as raw values in code order."""
    if not field.is_finite:
        return [Fraction(1), Fraction(-1)]
    return [e for e in field.nonzero() if field.norm(e) == 1]


def hilbert90_solve(field, eps):
    """Return a != 0 with eps = sigma(a) / a (first in code order)."""
    eps = field.raw(eps)
    if field.has_trivial_involution:
        raise PreconditionError("Hilbert 90 needs a nontrivial involution")
    if field.norm(eps) != 1:
        raise PreconditionError("eps must have norm 1")
    for a in field.nonzero():
        if field.mul(field.inv(a), field.conj(a)) == eps:
            return a
    raise PreconditionError("no Hilbert 90 solution found")  # unreachable for valid input


class AdditiveSubgroup:
    """An additive subgroup of a field.

    Over a finite field this is a subspace over the prime field, stored as an
    RREF basis of coordinate vectors.  Over the rationals only the zero
    subgroup and the whole field are supported.
    """

    def __init__(self, field, basis=None, marker=None):
        self.field = field
        if not field.is_finite:
            if marker not in ("zero", "all"):
                raise PreconditionError("subgroups of Q must be 'zero' or 'all'")
            self.marker = marker
            self.basis = ()
            self.pivots = ()
            return
        from .linalg import rref
        rows, piv = rref(field.prime_field, [tuple(int(c) % field.p for c in r) for r in (basis or [])])
        for r in rows:
            if len(r) != field.k:
                raise PreconditionError(f"subgroup basis vectors need {field.k} coordinates")
        self.basis = tuple(rows)
        self.pivots = tuple(piv)
        self.marker = "all" if len(rows) == field.k else ("zero" if not rows else None)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, [], "zero")

    @classmethod
    def full(cls, field):
        if not field.is_finite:
            return cls(field, marker="all")
        return cls(field, [tuple(int(i == j) for j in range(field.k)) for i in range(field.k)])

    @classmethod
    def span(cls, field, elements):
        elements = [field.raw(e) for e in elements]
        if not field.is_finite:
            return cls(field, marker="all" if any(elements) else "zero")
        return cls(field, [field.coords(e) for e in elements])

    @classmethod
    def fixed_field(cls, field):
        return cls.span(field, field.fixed_elements())

    # -- queries ---------------------------------------------------------

    @property
    def dim(self):
        if not self.field.is_finite:
            return None
        return len(self.basis)

    @property
    def is_zero(self):
        return self.marker == "zero"

    @property
    def is_full(self):
        return self.marker == "all"

    @cached_property
    def members(self):
        """Frozen set of raw values (finite fields only)."""
        F = self.field
        if not F.is_finite:
            raise InfiniteFieldError("subgroups of Q cannot be enumerated")
        out = set()
        for coeffs in itertools.product(range(F.p), repeat=len(self.basis)):
            v = [0] * F.k
            for c, row in zip(coeffs, self.basis):
                for i, x in enumerate(row):
                    v[i] = (v[i] + c * x) % F.p
            out.add(F.from_coords(v))
        return frozenset(out)

    def __contains__(self, a):
        a = self.field.raw(a)
        if self.marker == "all":
            return True
        if self.marker == "zero":
            return not a
        return a in self.members

    def issubset(self, other):
        if self.field != other.field:
            raise FieldMismatchError("subgroups of different fields")
        if not self.field.is_finite:
            return self.marker == "zero" or other.marker == "all"
        return self.members <= other.members

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        return (isinstance(other, AdditiveSubgroup) and self.field == other.field
                and self.basis == other.basis and self.marker == other.marker)

    def __hash__(self):
        return hash((self.field, self.basis, self.marker))

    def reduce(self, a):
        """Canonical representative of a + Lambda: zero the pivot coordinates."""
        F = self.field
        if self.marker == "zero":
            return a
        if self.marker == "all":
            return F.zero
        c = list(F.coords(a))
        p = F.p
        for row, j in zip(self.basis, self.pivots):
            t = c[j]
            if t:
                for i, x in enumerate(row):
                    c[i] = (c[i] - t * x) % p
        return F.from_coords(c)

    def coset_representatives(self):
        return [a for a in self.field.elements() if self.reduce(a) == a]

    def scaled(self, c):
        """The subgroup c * Lambda."""
        F = self.field
        c = F.raw(c)
        if not F.is_finite:
            return AdditiveSubgroup(F, marker="zero" if (self.is_zero or not c) else "all")
        return AdditiveSubgroup.span(F, [F.mul(c, F.from_coords(r)) for r in self.basis])

    def is_closed(self):
        """True when c * sigma(c) * lam stays in the subgroup for every c."""
        return self.core() == self

    @cached_property
    def _core(self):
        F = self.field
        if not F.is_finite:
            return self
        norms = {F.norm(c) for c in F.nonzero()}
        mem = self.members
        keep = [lam for lam in sorted(mem) if all(F.mul(n, lam) in mem for n in norms)]
        return AdditiveSubgroup.span(F, keep)

    def core(self):
        """Largest subgroup inside this one that is closed under lam -> c sigma(c) lam.

        Diagonal entries of forms in X(E, sigma, eps, Lambda) range exactly
        over this core, so it is the group the quotient is really taken by.
        """
        return self._core

    def to_json(self):
        if not self.field.is_finite:
            return {"marker": self.marker}
        return {"basis": [list(r) for r in self.basis]}

    @classmethod
    def from_json(cls, field, d):
        if isinstance(d, str):
            return {"zero": cls.zero, "0": cls.zero, "full": cls.full, "F": cls.full,
                    "fixed": cls.fixed_field}[d](field)
        if "marker" in d:
            return cls(field, marker=d["marker"])
        return cls(field, [tuple(r) for r in d["basis"]])

    def describe(self):
        F = self.field
        if self.is_zero:
            return "0"
        if self.is_full:
            return "F"
        if F.is_finite:
            if self == AdditiveSubgroup.fixed_field(F) and not F.has_trivial_involution:
                return "F^sigma"
            return "span{" + ", ".join(F.format(F.from_coords(r)) for r in self.basis) + "}"
        return self.marker

    def __repr__(self):
        return f"<AdditiveSubgroup {self.describe()} of {self.field.name}>"


def _image_and_kernel(field, eps, sign):
    """Image and kernel of a -> a + sign * eps * sigma(a) over the prime field."""
    F = field
    imgs = []
    for beta in F.basis():
        t = F.mul(eps, F.conj(beta))
        imgs.append(F.add(beta, t) if sign > 0 else F.sub(beta, t))
    image = AdditiveSubgroup.span(F, imgs)
    from .linalg import nullspace, transpose_rows
    rows = [F.coords(x) for x in imgs]
    # x in ker  <=>  sum_i x_i * rows[i] == 0  <=>  rows^T x = 0
    ker = nullspace(F.prime_field, transpose_rows(rows, F.k))
    return image, AdditiveSubgroup(F, ker)


def lambda_min(field, eps):
    """{a - eps * sigma(a)}."""
    eps = field.raw(eps)
    if field.norm(eps) != 1:
        raise PreconditionError("eps must have norm 1")
    if not field.is_finite:
        return AdditiveSubgroup(field, marker="zero" if eps == 1 else "all")
    return _image_and_kernel(field, eps, -1)[0]


def lambda_max(field, eps):
    """{a : a + eps * sigma(a) = 0}."""
    eps = field.raw(eps)
    if field.norm(eps) != 1:
        raise PreconditionError("eps must have norm 1")
    if not field.is_finite:
        return AdditiveSubgroup(field, marker="zero" if eps == 1 else "all")
    return _image_and_kernel(field, eps, +1)[1]


def subgroup_validate(field, eps, lam):
    """True iff Lambda_min <= lam <= Lambda_max."""
    if lam.field != field:
        return False
    return lambda_min(field, eps) <= lam <= lambda_max(field, eps)


def coset_reduce(a, lam):
    if isinstance(a, FieldElement):
        return FieldElement(lam.field, lam.reduce(lam.field.raw(a)))
    return lam.reduce(a)


def lambda_table_row(field, eps):
    """Row key of the classification table of (Lambda_min, Lambda_max).

    Returns ``(key, expected_min, expected_max)`` where the expected groups are
    computed directly from their closed-form descriptions (0, F, F^sigma,
    (1 + eps) F^sigma) rather than from the defining maps.
    """
    F = field
    eps = F.raw(eps)
    if F.has_trivial_involution:
        char2 = F.characteristic == 2
        zero, full = AdditiveSubgroup.zero(F), AdditiveSubgroup.full(F)
        if char2:
            return "yes/yes/1", zero, full
        if eps == F.one:
            return "yes/no/1", zero, zero
        return "yes/no/-1", full, full
    fixed = F.fixed_elements()
    if eps == F.neg(F.one):
        g = AdditiveSubgroup.span(F, fixed)
        return "no/-1", g, g
    s = F.add(F.one, eps)
    g = AdditiveSubgroup.span(F, [F.mul(s, a) for a in fixed])
    return "no/!=-1", g, g
