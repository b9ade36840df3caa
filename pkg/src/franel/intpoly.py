"""Dense univariate polynomials over the integers.

Coefficients are stored low degree first with trailing zeros stripped; the
zero polynomial has an empty coefficient tuple.  These polynomials carry the
recurrence coefficients in n and back the fraction-free linear algebra, so
multiplication switches to Kronecker substitution (packing coefficients into
one big integer) once operands are large enough for Python's subquadratic
integer multiplication to win.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import ExactDivisionError

# ---------------------------------------------------------------------------
# signed coefficient packing (shared with the bivariate layer)
# ---------------------------------------------------------------------------


def pack_signed(coeffs, stride_bytes: int) -> int:
    """Evaluate sum(c_i * 2**(8*stride_bytes*i)) for signed integers c_i."""
    pos = bytearray(stride_bytes * len(coeffs))
    neg = bytearray(stride_bytes * len(coeffs))
    for i, c in enumerate(coeffs):
        if c > 0:
            pos[i * stride_bytes:(i + 1) * stride_bytes] = c.to_bytes(
                stride_bytes, "little")
        elif c < 0:
            neg[i * stride_bytes:(i + 1) * stride_bytes] = (-c).to_bytes(
                stride_bytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def unpack_signed(value: int, stride_bytes: int, count: int) -> list:
    """Recover balanced base-2**(8*stride_bytes) digits of ``value``.

    Inverse of :func:`pack_signed` provided every true digit satisfies
    |d| < 2**(8*stride_bytes - 1); callers must pick the stride from a
    rigorous coefficient bound, the final check here only catches gross
    mismatches.
    """
    if value < 0:
        return [-d for d in unpack_signed(-value, stride_bytes, count)]
    stride_bits = 8 * stride_bytes
    half = 1 << (stride_bits - 1)
    full = 1 << stride_bits
    raw = value.to_bytes(stride_bytes * (count + 1), "little")
    out = []
    carry = 0
    for i in range(count):
        d = int.from_bytes(raw[i * stride_bytes:(i + 1) * stride_bytes],
                           "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(d)
    top = int.from_bytes(raw[count * stride_bytes:], "little")
    if top or carry:
        raise OverflowError("packed digit overflow during unpacking")
    return out


def _mul_kronecker(a, b):
    la, lb = len(a), len(b)
    bits_a = max(abs(c).bit_length() for c in a)
    bits_b = max(abs(c).bit_length() for c in b)
    # |result coeff| <= min(la, lb) * max|a| * max|b| < 2**(need - 2)
    need = bits_a + bits_b + min(la, lb).bit_length() + 2
    stride_bytes = (need + 7) // 8
    count = la + lb - 1
    prod = pack_signed(a, stride_bytes) * pack_signed(b, stride_bytes)
    return unpack_signed(prod, stride_bytes, count)


_KRONECKER_CUTOFF = 600  # pairwise coefficient products; schoolbook below


def _mul_coeffs(a, b):
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    if la == 1:
        c = a[0]
        return [c * x for x in b]
    if lb == 1:
        c = b[0]
        return [c * x for x in a]
    if la * lb >= _KRONECKER_CUTOFF:
        return _mul_kronecker(a, b)
    out = [0] * (la + lb - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


# ---------------------------------------------------------------------------
# polynomial type
# ---------------------------------------------------------------------------


class IntPoly:
    """Immutable dense polynomial in one variable over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "IntPoly":
        return cls((0, 1))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%d*x" % c)
            else:
                parts.append("%d*x^%d" % (c, i))
        return "IntPoly(%s)" % " + ".join(parts)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly(tuple(c * other for c in self.coeffs))
        return IntPoly(_mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divexact(self, divisor: "IntPoly") -> "IntPoly":
        """Exact quotient self / divisor; raises if the division is inexact."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return IntPoly()
        da, dd = self.degree, divisor.degree
        if da < dd:
            raise ExactDivisionError("degree of dividend below divisor")
        rem = list(self.coeffs)
        div = divisor.coeffs
        lead = div[-1]
        q = [0] * (da - dd + 1)
        for i in range(da - dd, -1, -1):
            top = rem[i + dd]
            if top == 0:
                continue
            c, r = divmod(top, lead)
            if r:
                raise ExactDivisionError("inexact leading coefficient")
            q[i] = c
            for j, dj in enumerate(div):
                rem[i + j] -= c * dj
        if any(rem[:dd]):
            raise ExactDivisionError("nonzero remainder")
        return IntPoly(q)

    # -- evaluation ------------------------------------------------------------

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- content ---------------------------------------------------------------

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
            if g == 1:
                return 1
        return g

    def primitive(self) -> "IntPoly":
        """Quotient by the content; the sign of the polynomial is preserved."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly(tuple(c // g for c in self.coeffs))

    def max_coeff_bits(self) -> int:
        return max((abs(c).bit_length() for c in self.coeffs), default=0)


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b.

    The remainder is rescaled by lc(b) at every one of the deg a - deg b + 1
    elimination steps, so the overall scaling exponent is fixed; the Sturm
    chain construction relies on that for sign bookkeeping.
    """
    if b.is_zero:
        raise ZeroDivisionError("pseudo-remainder by zero")
    da, db = a.degree, b.degree
    if da < db:
        return a
    lead = b.lc
    rem = list(a.coeffs)
    bc = b.coeffs
    for i in range(da - db, -1, -1):
        top = rem[i + db]
        for j in range(i + db):
            rem[j] *= lead
        if top:
            for j in range(db):
                rem[i + j] -= top * bc[j]
        del rem[i + db]
    return IntPoly(rem)


def poly_gcd_int(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd in Z[x] (content included), normalized to positive leading coeff."""
    if a.is_zero and b.is_zero:
        return IntPoly()
    if a.is_zero:
        return b if b.lc > 0 else -b
    if b.is_zero:
        return a if a.lc > 0 else -a
    cg = int_gcd(a.content(), b.content())
    pa, pb = a.primitive(), b.primitive()
    if pa.degree < pb.degree:
        pa, pb = pb, pa
    while True:
        if pb.degree == 0:
            g = IntPoly.const(1)
            break
        r = pseudo_rem(pa, pb)
        if r.is_zero:
            g = pb.primitive()
            break
        pa, pb = pb, r.primitive()
    g = g * cg
    return g if g.lc > 0 else -g


def poly_lcm_int(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero or b.is_zero:
        return IntPoly()
    lcm = a * b.divexact(poly_gcd_int(a, b))
    return lcm if lcm.lc > 0 else -lcm


# ---------------------------------------------------------------------------
# integer roots via Sturm sequences
# ---------------------------------------------------------------------------


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly(tuple(i * c for i, c in enumerate(p.coeffs) if i >= 1)
                   if p.degree >= 1 else ())


def _sturm_chain(p: IntPoly):
    """Sturm chain of a squarefree polynomial, up to positive rescaling."""
    chain = [p, derivative(p)]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = pseudo_rem(a, b)
        if r.is_zero:
            break
        # r = lc(b)^delta * (a mod b); the Sturm chain needs a positive
        # multiple of -(a mod b), so flip unless the scaling was negative.
        delta = a.degree - b.degree + 1
        if not (b.lc < 0 and delta % 2 == 1):
            r = -r
        chain.append(r.primitive())
    return chain


def _sign_variations(chain, x: int) -> int:
    signs = []
    for q in chain:
        v = q.eval_int(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def integer_roots(p: IntPoly):
    """Sorted list of the distinct integer roots of p (p must be nonzero)."""
    if p.is_zero:
        raise ValueError("the zero polynomial has every integer as a root")
    roots = set()
    coeffs = list(p.coeffs)
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.add(0)
    q = IntPoly(coeffs)
    if q.degree <= 0:
        return sorted(roots)
    sf = q.divexact(poly_gcd_int(q, derivative(q)))
    if sf.degree == 0:
        return sorted(roots)
    chain = _sturm_chain(sf)
    bound = 2 + max(abs(c) for c in sf.coeffs) // abs(sf.lc)

    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        if _sign_variations(chain, lo) - _sign_variations(chain, hi) == 0:
            continue
        if hi - lo == 1:
            if sf.eval_int(hi) == 0:
                roots.add(hi)
            continue
        mid = (lo + hi) // 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(roots)
