"""Multivariate polynomial arithmetic over an exact coefficient field.

Monomials are exponent tuples.  A ``Polynomial`` keeps its terms as an
association list sorted in descending graded reverse lexicographic order,
so the leading term is ``terms[0]`` and merges during reduction are linear.
Divided-power forms (the contraction side of Macaulay duality) get their own
small class with ``y``-variables.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, ExponentCapExceeded
from .fields import Field, QQ, check_same_field

Mono = tuple  # exponent tuple, one entry per variable

DEFAULT_EXPONENT_CAP = 4


# ----------------------------------------------------------------------
# monomial helpers
# ----------------------------------------------------------------------

def mono_one(n: int) -> Mono:
    return (0,) * n


def mono_deg(m: Mono) -> int:
    return sum(m)


def mono_mul(a: Mono, b: Mono, cap: int = DEFAULT_EXPONENT_CAP) -> Mono:
    prod = tuple(x + y for x, y in zip(a, b))
    if cap is not None:
        worst = max(prod)
        if worst > cap:
            raise ExponentCapExceeded(worst, cap)
    return prod


def mono_divides(a: Mono, b: Mono) -> bool:
    """Whether a | b exponentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Mono, a: Mono) -> Mono:
    """b / a, assuming divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def revlex_key(m: Mono):
    """Sort key realizing grevlex: tuples compare the way monomials do."""
    return (sum(m), tuple(-e for e in reversed(m)))


def revlex_compare(a: Mono, b: Mono) -> int:
    """Return -1, 0 or 1 as a <, =, > b in graded reverse lex order.

    Higher total degree wins; within a degree the monomial with the smaller
    exponent on the last variable where they differ is the larger one.
    """
    if len(a) != len(b):
        raise DimensionMismatch(f"monomials in {len(a)} and {len(b)} variables")
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


class GrevlexOrder:
    """The one monomial order used throughout: graded reverse lexicographic."""

    kind = "grevlex"
    # x1 > x2 > ... > xn
    precedence = "descending variable index"

    @staticmethod
    def key(m: Mono):
        return revlex_key(m)

    @staticmethod
    def compare(a: Mono, b: Mono) -> int:
        return revlex_compare(a, b)

    def __repr__(self):
        return "grevlex(x1 > x2 > ...)"


GREVLEX = GrevlexOrder()


def monomials_of_degree(n: int, d: int) -> Iterator[Mono]:
    """All exponent tuples of total degree d in n variables."""
    if d == 0:
        yield mono_one(n)
        return
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def squarefree_monomials(n: int, d: int) -> list[Mono]:
    """0/1 exponent tuples of degree d, sorted descending in grevlex."""
    out = []
    for supp in itertools.combinations(range(n), d):
        e = [0] * n
        for i in supp:
            e[i] = 1
        out.append(tuple(e))
    out.sort(key=revlex_key, reverse=True)
    return out


# ----------------------------------------------------------------------
# polynomials
# ----------------------------------------------------------------------

class Polynomial:
    """A polynomial with terms kept sorted in descending grevlex order."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: Field, terms: Sequence[tuple[Mono, object]], _sorted=False):
        self.n = n
        self.field = field
        if not _sorted:
            acc = {}
            for m, c in terms:
                if len(m) != n:
                    raise DimensionMismatch(f"monomial {m} in a {n}-variable ring")
                cur = acc.get(m)
                c = field.add(cur, c) if cur is not None else c
                acc[m] = c
            items = [(m, c) for m, c in acc.items() if c != 0]
            items.sort(key=lambda t: revlex_key(t[0]), reverse=True)
            self.terms = tuple(items)
        else:
            self.terms = tuple(terms)

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, n: int, field: Field) -> "Polynomial":
        return cls(n, field, (), _sorted=True)

    @classmethod
    def constant(cls, n: int, field: Field, c) -> "Polynomial":
        if c == 0:
            return cls.zero(n, field)
        return cls(n, field, ((mono_one(n), c),), _sorted=True)

    @classmethod
    def variable(cls, n: int, field: Field, i: int) -> "Polynomial":
        """The variable x_{i+1} (0-based index i)."""
        e = [0] * n
        e[i] = 1
        return cls(n, field, ((tuple(e), field.one()),), _sorted=True)

    @classmethod
    def monomial(cls, n: int, field: Field, m: Mono, c=None) -> "Polynomial":
        return cls(n, field, ((tuple(m), field.one() if c is None else c),), _sorted=True)

    # -- term access ------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def lt(self):
        """Leading (monomial, coefficient) pair, or None for the zero polynomial."""
        return self.terms[0] if self.terms else None

    @property
    def lm(self) -> Mono:
        return self.terms[0][0]

    @property
    def lc(self):
        return self.terms[0][1]

    @property
    def degree(self) -> int:
        """Total degree (of the leading term); -1 for the zero polynomial."""
        return sum(self.terms[0][0]) if self.terms else -1

    @property
    def homogeneous_degree(self):
        """Common degree of all terms, or None if inhomogeneous or zero."""
        if not self.terms:
            return None
        d = sum(self.terms[0][0])
        for m, _ in self.terms:
            if sum(m) != d:
                return None
        return d

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} vs {other.n} variables")
        check_same_field(self.field, other.field)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self.n, self.field, _merge(self.field, self.terms, other.terms, 1), _sorted=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self.n, self.field, _merge(self.field, self.terms, other.terms, -1), _sorted=True)

    def __neg__(self) -> "Polynomial":
        neg = self.field.neg
        return Polynomial(self.n, self.field, tuple((m, neg(c)) for m, c in self.terms), _sorted=True)

    def scale(self, c) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.n, self.field)
        mul = self.field.mul
        return Polynomial(self.n, self.field, tuple((m, mul(coeff, c)) for m, coeff in self.terms), _sorted=True)

    def term_mul(self, m: Mono, c, cap: int = DEFAULT_EXPONENT_CAP) -> "Polynomial":
        """Multiply by the single term c * x^m.  Preserves the sort order."""
        mul = self.field.mul
        return Polynomial(
            self.n, self.field,
            tuple((mono_mul(mm, m, cap), mul(cc, c)) for mm, cc in self.terms),
            _sorted=True,
        )

    def mul(self, other: "Polynomial", cap: int = DEFAULT_EXPONENT_CAP) -> "Polynomial":
        self._check(other)
        field = self.field
        acc: dict = {}
        short, long_ = (self.terms, other.terms) if len(self.terms) <= len(other.terms) else (other.terms, self.terms)
        for m1, c1 in short:
            for m2, c2 in long_:
                m = mono_mul(m1, m2, cap)
                c = field.mul(c1, c2)
                cur = acc.get(m)
                acc[m] = c if cur is None else field.add(cur, c)
        items = [(m, c) for m, c in acc.items() if c != 0]
        items.sort(key=lambda t: revlex_key(t[0]), reverse=True)
        return Polynomial(self.n, field, items, _sorted=True)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self.mul(other)
        return self.scale(self.field.from_int(other) if isinstance(other, int) else other)

    __rmul__ = __mul__

    def power(self, k: int, cap: int = DEFAULT_EXPONENT_CAP) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.n, self.field, self.field.one())
        base = self
        while k:
            if k & 1:
                result = result.mul(base, cap)
            k >>= 1
            if k:
                base = base.mul(base, cap)
        return result

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.lc))

    def permute(self, sigma: Sequence[int]) -> "Polynomial":
        """Apply the variable substitution x_i -> x_{sigma(i)} (0-based tuple)."""
        out = []
        for m, c in self.terms:
            e = [0] * self.n
            for i, exp in enumerate(m):
                if exp:
                    e[sigma[i]] += exp
            out.append((tuple(e), c))
        return Polynomial(self.n, self.field, out)

    def coefficient(self, m: Mono):
        for mm, cc in self.terms:
            if mm == m:
                return cc
        return self.field.zero()

    # -- dunder plumbing ----------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.field.characteristic, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, n={self.n}, field={self.field})"


def _merge(field: Field, a, b, sign: int):
    """Merge two descending term lists, adding (sign=1) or subtracting (sign=-1)."""
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            c = field.add(ca, cb) if sign > 0 else field.sub(ca, cb)
            if c != 0:
                out.append((ma, c))
            i += 1
            j += 1
        elif revlex_key(ma) > revlex_key(mb):
            out.append((ma, ca))
            i += 1
        else:
            out.append((mb, cb if sign > 0 else field.neg(cb)))
            j += 1
    out.extend(a[i:])
    if sign > 0:
        out.extend(b[j:])
    else:
        neg = field.neg
        out.extend((m, neg(c)) for m, c in b[j:])
    return out


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """Named-operation façade over the dunder arithmetic."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


# ----------------------------------------------------------------------
# standard elements of the rings under study
# ----------------------------------------------------------------------

def variable_sum(n: int, field: Field = QQ) -> Polynomial:
    """x1 + x2 + ... + xn."""
    one = field.one()
    terms = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        terms.append((tuple(e), one))
    return Polynomial(n, field, terms)


def squared_variable_sum(n: int, field: Field = QQ) -> Polynomial:
    """(x1 + ... + xn)^2."""
    return variable_sum(n, field).power(2)


# ----------------------------------------------------------------------
# symmetric group orbits
# ----------------------------------------------------------------------

def symmetric_orbit(f: Polynomial) -> list[Polynomial]:
    """All distinct images of f under permutations of the variables.

    Equality is exact (same term list); the orbit is returned sorted by the
    term-list key so it is deterministic.
    """
    seen = {}
    for sigma in itertools.permutations(range(f.n)):
        g = f.permute(sigma)
        seen.setdefault(g.terms, g)
    return [seen[k] for k in sorted(seen, key=lambda terms: [(revlex_key(m), str(c)) for m, c in terms])]


# ----------------------------------------------------------------------
# text form
# ----------------------------------------------------------------------

def _format_mono(m: Mono, var: str) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"{var}{i + 1}")
        elif e > 1:
            parts.append(f"{var}{i + 1}^{e}")
    return "*".join(parts)


def _format_terms(terms, field: Field, var: str) -> str:
    if not terms:
        return "0"
    chunks = []
    for k, (m, c) in enumerate(terms):
        mono = _format_mono(m, var)
        neg = _coeff_is_negative(c, field)
        mag = field.neg(c) if neg else c
        body = mono if (mag == 1 and mono) else (field.coeff_str(mag) if not mono else f"{field.coeff_str(mag)}*{mono}")
        if k == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


def _coeff_is_negative(c, field: Field) -> bool:
    # prime-field coefficients are canonical in [0, p) and never print negated
    return not field.characteristic and c < 0


def format_poly(f: Polynomial, var: str = "x") -> str:
    return _format_terms(f.terms, f.field, var)


_TOKEN = re.compile(r"\s*(?:(?P<coeff>\d+(?:/\d+)?)|(?P<var>[A-Za-z])(?P<idx>\d+)(?:\^(?P<exp>\d+))?|(?P<op>[+\-*]))")


def parse_poly(text: str, n: int, field: Field = QQ, var: str = "x") -> Polynomial:
    """Parse strings like ``x1^2 - 2*x1*x2 + 5/3``.

    The grammar has no parentheses: a sum of terms, each term an optional
    coefficient with ``*``-separated powers of variables.  Round-trips with
    :func:`format_poly` exactly.
    """
    pos = 0
    terms = []
    sign = 1
    cur_coeff = None
    cur_mono = None
    started = False

    def flush():
        nonlocal cur_coeff, cur_mono, sign, started
        if not started:
            return
        c = cur_coeff if cur_coeff is not None else field.one()
        if sign < 0:
            c = field.neg(c)
        terms.append((tuple(cur_mono) if cur_mono is not None else mono_one(n), c))
        cur_coeff = None
        cur_mono = None
        sign = 1
        started = False

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot parse {text[pos:]!r}")
            break
        pos = m.end()
        if m.group("op"):
            op = m.group("op")
            if op == "*":
                if not started:
                    raise ValueError("misplaced '*'")
                continue
            flush()
            if op == "-":
                sign = -sign
        elif m.group("coeff"):
            if started and cur_coeff is not None:
                raise ValueError("two coefficients in one term")
            cur_coeff = field.parse_coeff(m.group("coeff"))
            started = True
        else:
            if m.group("var") != var:
                raise ValueError(f"unexpected variable letter {m.group('var')!r}")
            idx = int(m.group("idx"))
            if not 1 <= idx <= n:
                raise ValueError(f"variable {var}{idx} outside 1..{n}")
            exp = int(m.group("exp") or 1)
            if cur_mono is None:
                cur_mono = [0] * n
            cur_mono[idx - 1] += exp
            started = True
    flush()
    return Polynomial(n, field, terms)


# ----------------------------------------------------------------------
# divided-power forms and contraction
# ----------------------------------------------------------------------

class DividedPowerForm:
    """A dual form in divided-power variables y1..yn.

    Stored exactly like a polynomial (sorted term list); the interesting
    operation is contraction by ring elements, see :func:`contract`.
    """

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: Field, terms: Iterable[tuple[Mono, object]]):
        acc: dict = {}
        for m, c in terms:
            if len(m) != n:
                raise DimensionMismatch(f"form monomial {m} in {n} variables")
            cur = acc.get(m)
            acc[m] = field.add(cur, c) if cur is not None else c
        items = [(m, c) for m, c in acc.items() if c != 0]
        items.sort(key=lambda t: revlex_key(t[0]), reverse=True)
        self.n = n
        self.field = field
        self.terms = tuple(items)

    @classmethod
    def zero(cls, n: int, field: Field) -> "DividedPowerForm":
        return cls(n, field, ())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return sum(self.terms[0][0]) if self.terms else -1

    def coefficient(self, m: Mono):
        for mm, cc in self.terms:
            if mm == m:
                return cc
        return self.field.zero()

    def evaluate_at_ones(self):
        """Sum of the coefficients, i.e. the value at y1 = ... = yn = 1."""
        total = self.field.zero()
        for _, c in self.terms:
            total = self.field.add(total, c)
        return total

    def __eq__(self, other):
        return (
            isinstance(other, DividedPowerForm)
            and self.n == other.n
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(("DPF", self.n, self.field.characteristic, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return _format_terms(self.terms, self.field, "y")

    def __repr__(self):
        return f"DividedPowerForm({str(self)!r}, n={self.n})"


def parse_form(text: str, n: int, field: Field = QQ) -> DividedPowerForm:
    p = parse_poly(text, n, field, var="y")
    return DividedPowerForm(n, field, p.terms)


def contract(f: Polynomial, form: DividedPowerForm) -> DividedPowerForm:
    """Contraction action of the polynomial ring on divided-power forms.

    On monomials: x^d acts on y^(e) giving y^(e-d) when e-d is nonnegative
    in every coordinate, and 0 otherwise; extended bilinearly.
    """
    if f.n != form.n:
        raise DimensionMismatch(f"{f.n} vs {form.n} variables")
    check_same_field(f.field, form.field)
    field = f.field
    acc: dict = {}
    for d, c in f.terms:
        for e, k in form.terms:
            if all(ei >= di for di, ei in zip(d, e)):
                m = tuple(ei - di for di, ei in zip(d, e))
                v = field.mul(c, k)
                cur = acc.get(m)
                acc[m] = field.add(cur, v) if cur is not None else v
    return DividedPowerForm(form.n, field, acc.items())
