"""Sparse exact polynomials over Q in cyclic coordinates x0..x{n-1} plus named parameters.

Coordinates carry non-negative exponents. Parameters are Laurent: their
exponents may be negative, so coefficients such as ``lam^-3`` are native.

A monomial is stored as a pair ``(coords, params)`` where ``coords`` is a
length-n tuple of exponents and ``params`` is a sorted tuple of
``(parameter index, nonzero exponent)`` pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

Scalar = Union[int, Fraction]
Monomial = tuple  # (tuple[int, ...], tuple[tuple[int, int], ...])

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_COORD = re.compile(r"x(0|[1-9][0-9]*)\Z")


class VarSpaceMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VarSpace:
    """``n`` coordinates and an ordered tuple of parameter names.

    ``n = 0`` is allowed and denotes a parameter-only space (used for
    constraint systems).
    """

    n: int
    params: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if self.n == 1 or self.n < 0:
            raise ValueError(f"coordinate count must be 0 or >= 2, got {self.n}")
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"duplicate parameter names in {self.params}")
        for p in self.params:
            if not _IDENT.match(p):
                raise ValueError(f"bad parameter name {p!r}")
            if _COORD.match(p):
                raise ValueError(f"parameter name {p!r} clashes with a coordinate name")

    def param_index(self, name: str) -> int:
        try:
            return self.params.index(name)
        except ValueError:
            raise KeyError(f"unknown parameter {name!r}") from None

    def x(self, i: int) -> "Poly":
        if not 0 <= i < self.n:
            raise IndexError(f"coordinate index {i} out of range for n={self.n}")
        exps = [0] * self.n
        exps[i] = 1
        return Poly(self, {(tuple(exps), ()): Fraction(1)})

    def xs(self) -> list:
        return [self.x(i) for i in range(self.n)]

    def p(self, name: str) -> "Poly":
        return Poly(self, {(self._zero, ((self.param_index(name), 1),)): Fraction(1)})

    def const(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        return Poly(self, {(self._zero, ()): c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def with_params(self, *names: str) -> "VarSpace":
        """Space with ``names`` appended (names already present are skipped)."""
        extra = [p for p in names if p not in self.params]
        return VarSpace(self.n, self.params + tuple(extra))

    @property
    def _zero(self) -> tuple:
        return (0,) * self.n


def _merge_params(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, e in b:
        s = d.get(k, 0) + e
        if s:
            d[k] = s
        else:
            del d[k]
    return tuple(sorted(d.items()))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    c1, p1 = m1
    c2, p2 = m2
    return (tuple(a + b for a, b in zip(c1, c2)), _merge_params(p1, p2))


class Poly:
    """Immutable sparse polynomial: a map monomial -> nonzero Fraction over a VarSpace."""

    __slots__ = ("vs", "terms", "_hash")

    def __init__(self, vs: VarSpace, terms: Mapping | None = None):
        self.vs = vs
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}
        self._hash = None

    # -- construction helpers -------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vs != self.vs:
                raise VarSpaceMismatch(f"{self.vs} vs {other.vs}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.vs.const(other)
        return NotImplemented

    @classmethod
    def _raw(cls, vs: VarSpace, terms: dict) -> "Poly":
        # terms already normalized: Fraction values, no zeros
        p = cls.__new__(cls)
        p.vs = vs
        p.terms = terms
        p._hash = None
        return p

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(self.vs, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vs, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(self.vs, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return scale(self, 1 / Fraction(c))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            if isinstance(k, int) and len(self.terms) == 1:
                (m, c), = self.terms.items()
                if any(m[0]):
                    raise ValueError("cannot invert a monomial containing coordinates")
                return Poly._raw(
                    self.vs, {(m[0], tuple((i, e * k) for i, e in m[1])): c ** k}
                )
            raise ValueError(f"exponent must be a non-negative int, got {k!r}")
        result = self.vs.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.vs.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vs == other.vs and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vs, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m[0]) and not m[1] for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return next(iter(self.terms.values()), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, n={self.vs.n}, params={list(self.vs.params)})"


# ---------------------------------------------------------------------------
# Canonical ordering and printing
# ---------------------------------------------------------------------------


def monomial_key(m: Monomial, nparams: int) -> tuple:
    """Sort key, larger = earlier in print order (graded lex, coordinates first)."""
    coords, params = m
    pexp = [0] * nparams
    for i, e in params:
        pexp[i] = e
    return (sum(coords), coords, sum(pexp), tuple(pexp))


def sorted_terms(f: Poly) -> list:
    k = len(f.vs.params)
    return sorted(f.terms.items(), key=lambda t: monomial_key(t[0], k), reverse=True)


def _format_monomial(vs: VarSpace, m: Monomial) -> list:
    coords, params = m
    parts = []
    for i, e in params:
        parts.append(vs.params[i] if e == 1 else f"{vs.params[i]}^{e}")
    for i, e in enumerate(coords):
        if e:
            parts.append(f"x{i}" if e == 1 else f"x{i}^{e}")
    return parts


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(sorted_terms(f)):
        factors = _format_monomial(f.vs, m)
        mag = abs(c)
        if factors:
            body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
        else:
            body = str(mag)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class PolySyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("eof", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, vs: VarSpace):
        self.toks = _tokenize(text)
        self.i = 0
        self.vs = vs

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def signed_int(self) -> tuple:
        sign = 1
        tok = self.peek()
        if tok[0] == "-":
            self.take()
            sign = -1
        tok = self.take("int")
        return sign * tok[1], tok[2]

    def poly(self) -> Poly:
        terms: dict = {}
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            m, c = self.term()
            s = terms.get(m, 0) + sign * c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
            tok = self.peek()
            if tok[0] == "eof":
                break
            if tok[0] not in ("+", "-"):
                raise PolySyntaxError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
            sign = -1 if self.take()[0] == "-" else 1
        return Poly._raw(self.vs, terms)

    def term(self) -> tuple:
        coeff = Fraction(1)
        coords = [0] * self.vs.n
        params: dict = {}
        tok = self.peek()
        if tok[0] == "int":
            num = self.take()[1]
            den = 1
            if self.peek()[0] == "/":
                self.take()
                dtok = self.take("int")
                den = dtok[1]
                if den == 0:
                    raise PolySyntaxError("zero denominator", dtok[2])
            coeff = Fraction(num, den)
            if self.peek()[0] != "*":
                return ((tuple(coords), ()), coeff)
            self.take("*")
        self.factor(coords, params)
        while self.peek()[0] == "*":
            self.take()
            self.factor(coords, params)
        ptuple = tuple(sorted((k, e) for k, e in params.items() if e))
        return ((tuple(coords), ptuple), coeff)

    def factor(self, coords: list, params: dict) -> None:
        tok = self.take("id")
        name, pos = tok[1], tok[2]
        exp = 1
        if self.peek()[0] == "^":
            self.take()
            exp, epos = self.signed_int()
        cm = _COORD.match(name)
        if cm and int(cm.group(1)) < self.vs.n:
            if exp < 0:
                raise PolySyntaxError(f"negative exponent on coordinate {name}", pos)
            coords[int(cm.group(1))] += exp
            return
        if name not in self.vs.params:
            raise PolySyntaxError(f"unknown variable {name!r}", pos)
        k = self.vs.params.index(name)
        params[k] = params.get(k, 0) + exp


def parse_poly(text: str, vs: VarSpace) -> Poly:
    """Parse ``text`` into a Poly over ``vs``.

    Grammar (whitespace ignored)::

        poly   := ['+'|'-'] term (('+'|'-') term)*
        term   := rat | [rat '*'] factor ('*' factor)*
        factor := var ['^' ['-'] int]
        rat    := int ['/' int]

    ``x0..x{n-1}`` are coordinates; any other identifier must be a parameter of ``vs``.
    """
    return _Parser(text, vs).poly()


# ---------------------------------------------------------------------------
# Ring operations (functional form)
# ---------------------------------------------------------------------------


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def neg(f: Poly) -> Poly:
    return -f


def scale(f: Poly, c: Scalar) -> Poly:
    c = Fraction(c)
    if not c:
        return f.vs.zero()
    return Poly._raw(f.vs, {m: a * c for m, a in f.terms.items()})


def partial(f: Poly, i: int) -> Poly:
    """Derivative with respect to coordinate ``x_i``; parameters are constants."""
    if not 0 <= i < f.vs.n:
        raise IndexError(f"coordinate index {i} out of range for n={f.vs.n}")
    out = {}
    for (coords, params), c in f.terms.items():
        e = coords[i]
        if e:
            nc = coords[:i] + (e - 1,) + coords[i + 1:]
            out[(nc, params)] = c * e
    return Poly._raw(f.vs, out)


def gradient(f: Poly) -> list:
    return [partial(f, i) for i in range(f.vs.n)]


# ---------------------------------------------------------------------------
# Change of variable space and substitution
# ---------------------------------------------------------------------------


def lift(f: Poly, vs: VarSpace) -> Poly:
    """Re-express ``f`` over ``vs``, which must have the same n and contain every used parameter."""
    if vs == f.vs:
        return f
    if vs.n != f.vs.n:
        raise VarSpaceMismatch(f"cannot move a poly from n={f.vs.n} to n={vs.n}")
    remap = {}
    for i, name in enumerate(f.vs.params):
        if name in vs.params:
            remap[i] = vs.params.index(name)
    out = {}
    for (coords, params), c in f.terms.items():
        try:
            np_ = tuple(sorted((remap[i], e) for i, e in params))
        except KeyError as exc:
            raise VarSpaceMismatch(
                f"parameter {f.vs.params[exc.args[0]]!r} missing from target space"
            ) from None
        out[(coords, np_)] = c
    return Poly._raw(vs, out)


def substitute(f: Poly, assign: Mapping, vs: VarSpace | None = None) -> Poly:
    """Replace parameters by rationals or Polys and expand.

    Poly values may live over a coordinate-free space (n = 0) or over a space
    with the same n as ``f``. The result lives over ``vs`` when given, otherwise
    over f's coordinates with the unassigned parameters of ``f`` followed by
    the parameters introduced by the values.
    """
    unknown = [k for k in assign if k not in f.vs.params]
    if unknown:
        raise KeyError(f"unknown parameter(s) {unknown}")
    if vs is None:
        vs = substituted_space(f.vs, assign)
    values = {}
    for name, v in assign.items():
        if isinstance(v, Poly):
            if v.vs.n not in (0, vs.n):
                raise VarSpaceMismatch(f"value for {name} has n={v.vs.n}, target n={vs.n}")
            values[f.vs.param_index(name)] = embed(v, vs)
        else:
            values[f.vs.param_index(name)] = Fraction(v)
    keep = {i: vs.params.index(p) for i, p in enumerate(f.vs.params) if i not in values}

    power_cache: dict = {}

    def power(i: int, e: int):
        key = (i, e)
        if key not in power_cache:
            v = values[i]
            if isinstance(v, Fraction):
                if e < 0 and v == 0:
                    raise ZeroDivisionError(
                        f"parameter {f.vs.params[i]!r} occurs with exponent {e} and is set to 0"
                    )
                power_cache[key] = v ** e
            elif e < 0:
                if v.is_zero():
                    raise ZeroDivisionError(
                        f"parameter {f.vs.params[i]!r} occurs with exponent {e} and is set to 0"
                    )
                if v.is_constant():
                    power_cache[key] = v.constant_value() ** e
                else:
                    power_cache[key] = v ** e
            else:
                power_cache[key] = v ** e
        return power_cache[key]

    result: dict = {}
    for (coords, params), c in f.terms.items():
        scalar = c
        kept = []
        polys = []
        for i, e in params:
            if i in values:
                pw = power(i, e)
                if isinstance(pw, Fraction):
                    scalar *= pw
                else:
                    polys.append(pw)
            else:
                kept.append((keep[i], e))
        if not scalar:
            continue
        term = Poly._raw(vs, {(coords, tuple(sorted(kept))): scalar})
        for pw in polys:
            term = term * pw
        for m, a in term.terms.items():
            s = result.get(m, 0) + a
            if s:
                result[m] = s
            else:
                result.pop(m, None)
    return Poly._raw(vs, result)


def substituted_space(vs: VarSpace, assign: Mapping) -> VarSpace:
    """Unassigned parameters of ``vs`` followed by those the Poly values bring in."""
    names = [p for p in vs.params if p not in assign]
    for v in assign.values():
        if isinstance(v, Poly):
            names += [p for p in v.vs.params if p not in names]
    return VarSpace(vs.n, tuple(names))


def embed(v: Poly, vs: VarSpace) -> Poly:
    """Move ``v`` into ``vs``; a coordinate-free ``v`` (n = 0) may enter a space with coordinates."""
    if v.vs.n == vs.n:
        return lift(v, vs)
    # coordinate-free value into a space with coordinates
    zero = vs._zero
    remap = {i: vs.params.index(p) for i, p in enumerate(v.vs.params) if p in vs.params}
    out = {}
    for (_, params), c in v.terms.items():
        out[(zero, tuple(sorted((remap[i], e) for i, e in params)))] = c
    return Poly._raw(vs, out)


def exact_div(f: Poly, g: Poly, max_steps: int | None = None) -> Poly:
    """Quotient ``f / g`` when ``g`` divides ``f`` exactly; raises ValueError otherwise.

    Leading terms are taken in an order compatible with multiplication (graded
    on coordinates, lex on Laurent parameter exponents), so for an exact
    quotient every step strips one term of the answer.
    """
    if g.vs != f.vs:
        raise VarSpaceMismatch(f"{f.vs} vs {g.vs}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    k = len(f.vs.params)
    key = lambda m: monomial_key(m, k)  # noqa: E731
    lm_g = max(g.terms, key=key)
    lc_g = g.terms[lm_g]
    if max_steps is None:
        max_steps = 4 * (len(f.terms) + 1) * (len(g.terms) + 1) + 64
    rem = dict(f.terms)
    quot: dict = {}
    for _ in range(max_steps):
        if not rem:
            return Poly._raw(f.vs, quot)
        lm = max(rem, key=key)
        coords = tuple(a - b for a, b in zip(lm[0], lm_g[0]))
        if any(e < 0 for e in coords):
            raise ValueError(f"{g} does not divide {Poly._raw(f.vs, rem)}")
        inv = tuple((i, -e) for i, e in lm_g[1])
        t = (coords, _merge_params(lm[1], inv))
        c = rem[lm] / lc_g
        quot[t] = quot.get(t, 0) + c
        for m2, c2 in g.terms.items():
            m = _mono_mul(t, m2)
            s = rem.get(m, 0) - c * c2
            if s:
                rem[m] = s
            else:
                rem.pop(m, None)
    raise ValueError(f"{g} does not divide {f} (no termination)")


# ---------------------------------------------------------------------------
# Heisenberg actions and gradings
# ---------------------------------------------------------------------------


def _shift(coords: tuple, s: int) -> tuple:
    n = len(coords)
    s %= n
    if not s:
        return coords
    # exponent of x_{i+s} in the image is the exponent of x_i in the source
    return coords[n - s:] + coords[: n - s]


def sigma_apply(f: Poly, s: int = 1) -> Poly:
    """Apply the cyclic shift x_i -> x_{i+s} (indices mod n)."""
    if f.vs.n == 0:
        return f
    return Poly._raw(f.vs, {(_shift(m[0], s), m[1]): c for m, c in f.terms.items()})


def monomial_tau_degree(coords: Iterable[int], n: int) -> int:
    return sum(i * e for i, e in enumerate(coords)) % n


def tau_degree(f: Poly) -> int | None:
    """Common residue of sum(i * alpha_i) mod n over all monomials; None if they disagree.

    The zero polynomial has degree 0.
    """
    n = f.vs.n
    degs = {monomial_tau_degree(m[0], n) for m in f.terms}
    if not degs:
        return 0
    if len(degs) > 1:
        return None
    return degs.pop()


class XDegree(NamedTuple):
    min: int
    max: int
    zero: bool


def x_degree(f: Poly) -> XDegree:
    """Minimum and maximum total coordinate degree (parameters excluded)."""
    if not f.terms:
        return XDegree(0, 0, True)
    degs = [sum(m[0]) for m in f.terms]
    return XDegree(min(degs), max(degs), False)


def is_x_homogeneous(f: Poly) -> bool:
    d = x_degree(f)
    return d.min == d.max


def coefficients_by_coords(f: Poly, pvs: VarSpace | None = None) -> dict:
    """Split ``f`` by coordinate monomial; each coefficient is a Poly over a parameter-only space."""
    if pvs is None:
        pvs = VarSpace(0, f.vs.params)
    remap = [pvs.param_index(p) for p in f.vs.params]
    out: dict = {}
    for (coords, params), c in f.terms.items():
        bucket = out.setdefault(coords, {})
        bucket[((), tuple(sorted((remap[i], e) for i, e in params)))] = c
    return {k: Poly._raw(pvs, v) for k, v in out.items()}
