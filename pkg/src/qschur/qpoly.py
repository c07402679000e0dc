"""Exact sparse Laurent polynomials in q^(1/2), plus an x-graded extension.

Conventions used throughout the package:

* Exponents are integers counting half-steps of q^(1/2).  The monomial q^n
  is stored under the key 2n, q^(1/2) under the key 1, q^(-3/2) under -3.
  A single global denominator of 2 is enough for every series we build and
  it keeps exponent arithmetic in plain ints.
* Coefficients are arbitrary-precision signed ints and are always exact.
* The zero polynomial is the empty map; no zero coefficient is ever stored,
  so ``==`` is structural equality of canonical forms.

`QPoly` values are immutable by convention: no public method mutates, every
operation returns a fresh value, so they are safe to share across threads
and to memoize.

`XSeries` grades `QPoly` values by a power of a formal marker x (we use it
to count parts of a partition) and fixes one q-truncation bound for every
stratum at construction time.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator, Mapping

# Below this many coefficient pairs the plain dict convolution wins over
# the packed-integer route (measured on CPython 3.11, generous margin).
_PACK_THRESHOLD = 2048


class QPoly:
    __slots__ = ("_c",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        c: dict[int, int] = {}
        if terms:
            for e, v in terms.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "QPoly":
        # Trusted constructor: c must already be canonical (no zeros).
        p = cls.__new__(cls)
        p._c = c
        return p

    @classmethod
    def zero(cls) -> "QPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "QPoly":
        return cls._raw({0: 1})

    @classmethod
    def monomial(cls, coeff: int, half_steps: int) -> "QPoly":
        """coeff * q^(half_steps / 2)."""
        if coeff == 0:
            return cls._raw({})
        return cls._raw({half_steps: coeff})

    @classmethod
    def q_power(cls, n: int) -> "QPoly":
        """q^n for integer n (possibly negative)."""
        return cls._raw({2 * n: 1})

    @classmethod
    def from_q_coeffs(cls, coeffs: Mapping[int, int]) -> "QPoly":
        """Build from a map of integer q-exponents to coefficients."""
        return cls._raw({2 * e: int(v) for e, v in coeffs.items() if v})

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def items(self) -> Iterator[tuple[int, int]]:
        """(half-step exponent, coefficient) pairs, unordered."""
        return iter(self._c.items())

    def coefficient(self, half_steps: int) -> int:
        return self._c.get(half_steps, 0)

    def coefficient_q(self, n: int) -> int:
        """Coefficient of q^n, n an integer q-exponent."""
        return self._c.get(2 * n, 0)

    def min_half_exponent(self) -> int | None:
        return min(self._c) if self._c else None

    def max_half_exponent(self) -> int | None:
        return max(self._c) if self._c else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    # Mutable-by-construction dict inside; structural equality only.
    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "QPoly":
        return QPoly._raw({e: -v for e, v in self._c.items()})

    def __add__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c = dict(a)
        for e, v in b.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return QPoly._raw(c)

    def __sub__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) - v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return QPoly._raw(c)

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            if not other:
                return QPoly._raw({})
            return QPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return QPoly._raw({})
        if len(a) == 1:
            (ea, ca), = a.items()
            return QPoly._raw({ea + e: ca * v for e, v in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return QPoly._raw({eb + e: cb * v for e, v in a.items()})
        if len(a) * len(b) <= _PACK_THRESHOLD:
            return self._mul_dict(a, b)
        return self._mul_packed(a, b)

    __rmul__ = __mul__

    @staticmethod
    def _mul_dict(a: dict[int, int], b: dict[int, int]) -> "QPoly":
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        get = c.get
        for ea, va in a.items():
            for eb, vb in b.items():
                e = ea + eb
                s = get(e, 0) + va * vb
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return QPoly._raw(c)

    @staticmethod
    def _mul_packed(a: dict[int, int], b: dict[int, int]) -> "QPoly":
        # Kronecker substitution: write both factors in base 256^w along a
        # common exponent stride, multiply as Python bigints, read slots
        # back.  Positive and negative parts are multiplied separately so
        # slots never borrow.
        amin, amax = min(a), max(a)
        bmin, bmax = min(b), max(b)
        g = 0
        for e in a:
            g = gcd(g, e - amin)
        for e in b:
            g = gcd(g, e - bmin)
        g = g or 1
        n_slots = (amax - amin) // g + (bmax - bmin) // g + 1
        bound = min(len(a), len(b)) * max(abs(v) for v in a.values()) \
            * max(abs(v) for v in b.values())
        w = (bound.bit_length() + 8) // 8
        if n_slots * w > 1 << 26:  # refuse >64MB packing, fall back
            return QPoly._mul_dict(a, b)

        def pack(c: dict[int, int], emin: int, want_pos: bool) -> int:
            buf = bytearray(n_slots * w)
            for e, v in c.items():
                if (v > 0) is want_pos:
                    off = ((e - emin) // g) * w
                    buf[off:off + w] = abs(v).to_bytes(w, "little")
            return int.from_bytes(buf, "little")

        ap, an = pack(a, amin, True), pack(a, amin, False)
        bp, bn = pack(b, bmin, True), pack(b, bmin, False)
        pos = ap * bp + an * bn
        neg = ap * bn + an * bp
        nbytes = (n_slots + 1) * w  # slot values stay < 256^w, +1 is slack
        pb = pos.to_bytes(nbytes, "little")
        nb = neg.to_bytes(nbytes, "little")
        c: dict[int, int] = {}
        base = amin + bmin
        for i in range(n_slots):
            lo = i * w
            v = int.from_bytes(pb[lo:lo + w], "little") \
                - int.from_bytes(nb[lo:lo + w], "little")
            if v:
                c[base + g * i] = v
        return QPoly._raw(c)

    def __pow__(self, n: int) -> "QPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def substitute_q_power(self, k: int) -> "QPoly":
        """Map q to q^k for nonzero integer k; k = -1 is the q -> 1/q dual."""
        if k == 0:
            raise ValueError("substitute_q_power requires k != 0")
        return QPoly._raw({k * e: v for e, v in self._c.items()})

    def shift(self, half_steps: int) -> "QPoly":
        """Multiply by q^(half_steps / 2)."""
        if not half_steps:
            return self
        return QPoly._raw({e + half_steps: v for e, v in self._c.items()})

    def truncate(self, max_q_degree: int) -> "QPoly":
        """Drop all terms with exponent above q^max_q_degree.

        The bound is in q-units; a term q^(e/2) survives iff e <= 2*bound,
        so half-step terms strictly between the bound and the next integer
        are dropped as well (reduction mod q^(bound + 1/2)).
        """
        cut = 2 * max_q_degree
        if not self._c:
            return self
        c = {e: v for e, v in self._c.items() if e <= cut}
        return QPoly._raw(c) if len(c) != len(self._c) else self

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def to_pairs(self) -> list[list]:
        """Serialization form: [[half-step exponent, coeff as str], ...]."""
        return [[e, str(self._c[e])] for e in sorted(self._c)]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable]) -> "QPoly":
        return cls._raw({int(e): int(v) for e, v in pairs if int(v)})

    def __repr__(self) -> str:
        if not self._c:
            return "QPoly(0)"
        bits = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                bits.append(str(v))
                continue
            if e == 2:
                mono = "q"
            elif e % 2 == 0:
                mono = "q^%d" % (e // 2)
            else:
                mono = "q^(%d/2)" % e
            if v == 1:
                bits.append(mono)
            elif v == -1:
                bits.append("-" + mono)
            else:
                bits.append("%d*%s" % (v, mono))
        return "QPoly(%s)" % " + ".join(bits).replace("+ -", "- ")


class XSeries:
    """Finite family of q-truncated QPoly strata graded by a power of x.

    All strata share one truncation bound (in q-units) fixed at
    construction; combining two series with different bounds is an error,
    never a silent re-truncation.
    """

    __slots__ = ("_trunc", "_s")

    def __init__(self, trunc: int, strata: Mapping[int, QPoly] | None = None):
        if trunc < 0:
            raise ValueError("truncation bound must be >= 0")
        self._trunc = trunc
        s: dict[int, QPoly] = {}
        if strata:
            for x, p in strata.items():
                if x < 0:
                    raise ValueError("x-degrees must be >= 0")
                p = p.truncate(trunc)
                if p:
                    s[int(x)] = p
        self._s = s

    @classmethod
    def zero(cls, trunc: int) -> "XSeries":
        return cls(trunc)

    @classmethod
    def term(cls, trunc: int, x_degree: int, p: QPoly) -> "XSeries":
        return cls(trunc, {x_degree: p})

    @property
    def truncation(self) -> int:
        return self._trunc

    def stratum(self, x_degree: int) -> QPoly:
        return self._s.get(x_degree, QPoly.zero())

    def x_degrees(self) -> list[int]:
        return sorted(self._s)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self._trunc == other._trunc and self._s == other._s

    __hash__ = None  # type: ignore[assignment]

    def _check_compatible(self, other: "XSeries") -> None:
        if self._trunc != other._trunc:
            raise ValueError(
                "truncation bounds differ: %d vs %d"
                % (self._trunc, other._trunc))

    def __add__(self, other: "XSeries") -> "XSeries":
        if not isinstance(other, XSeries):
            return NotImplemented
        self._check_compatible(other)
        s = dict(self._s)
        for x, p in other._s.items():
            q = s.get(x)
            r = p if q is None else q + p
            if r:
                s[x] = r
            else:
                s.pop(x, None)
        out = XSeries.__new__(XSeries)
        out._trunc = self._trunc
        out._s = s
        return out

    def __mul__(self, other: "XSeries") -> "XSeries":
        if not isinstance(other, XSeries):
            return NotImplemented
        self._check_compatible(other)
        acc: dict[int, QPoly] = {}
        for xa, pa in self._s.items():
            for xb, pb in other._s.items():
                prod = (pa * pb).truncate(self._trunc)
                if not prod:
                    continue
                x = xa + xb
                cur = acc.get(x)
                acc[x] = prod if cur is None else cur + prod
        out = XSeries.__new__(XSeries)
        out._trunc = self._trunc
        out._s = {x: p for x, p in acc.items() if p}
        return out

    def at_x_one(self) -> QPoly:
        total = QPoly.zero()
        for p in self._s.values():
            total = total + p
        return total

    def to_strata_pairs(self) -> dict[int, list[list]]:
        return {x: self._s[x].to_pairs() for x in sorted(self._s)}

    def __repr__(self) -> str:
        parts = ", ".join(
            "x^%d -> %r" % (x, self._s[x]) for x in sorted(self._s))
        return "XSeries(trunc=%d, %s)" % (self._trunc, parts or "0")
