"""Constructors for finite rings: residues, products, matrices, triangular,
truncated polynomial, trivial extensions, corners, quotients and opposites."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .core import (
    DEFAULT_TABLE_CAP,
    FiniteRing,
    OrderCapError,
    RingLabError,
)

DEFAULT_MAX_ORDER = 65536
MAX_ORDER_ENV = "RINGLAB_MAX_ORDER"


def resolve_max_order(max_order: Optional[int] = None) -> int:
    """Effective build cap: explicit argument, else environment, else default."""
    if max_order is not None:
        return max_order
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise RingLabError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from None


class RingSpec:
    """Symbolic description of a ring construction; nodes are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class Zn(RingSpec):
    n: int

    def __str__(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class Product(RingSpec):
    parts: tuple

    def __str__(self) -> str:
        return "x".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Matrix(RingSpec):
    k: int
    base: RingSpec

    def __str__(self) -> str:
        return f"M{self.k}({self.base})"


@dataclass(frozen=True)
class Triangular(RingSpec):
    k: int
    base: RingSpec

    def __str__(self) -> str:
        return f"T{self.k}({self.base})"


@dataclass(frozen=True)
class PolyMod(RingSpec):
    base: RingSpec
    n: int

    def __str__(self) -> str:
        return f"{self.base}[x]/(x^{self.n})"


@dataclass(frozen=True)
class TrivialExt(RingSpec):
    base: RingSpec

    def __str__(self) -> str:
        return f"Triv({self.base})"


@dataclass(frozen=True)
class Opposite(RingSpec):
    base: RingSpec

    def __str__(self) -> str:
        return f"Op({self.base})"


@dataclass(frozen=True)
class Corner(RingSpec):
    base: RingSpec
    e: int

    def __str__(self) -> str:
        return f"Corner({self.base},{self.e})"


@dataclass(frozen=True)
class Quotient(RingSpec):
    base: RingSpec
    generators: tuple

    def __str__(self) -> str:
        gens = ",".join(str(g) for g in self.generators)
        return f"Quot({self.base},{gens})"


@dataclass(frozen=True)
class IdealRing(RingSpec):
    base: RingSpec
    generators: tuple

    def __str__(self) -> str:
        gens = ",".join(str(g) for g in self.generators)
        return f"Ideal({self.base},{gens})"


def product(parts: Iterable[RingSpec]) -> RingSpec:
    """Product spec with nested products flattened; a singleton is unwrapped."""
    flat: list[RingSpec] = []
    for p in parts:
        if isinstance(p, Product):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if not flat:
        raise ValueError("product needs at least one factor")
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def spec_order(spec: RingSpec) -> Optional[int]:
    """Order denoted by the spec, or None when it depends on table contents."""
    if isinstance(spec, Zn):
        return spec.n
    if isinstance(spec, Product):
        n = 1
        for p in spec.parts:
            sub = spec_order(p)
            if sub is None:
                return None
            n *= sub
        return n
    if isinstance(spec, Matrix):
        sub = spec_order(spec.base)
        return None if sub is None else sub ** (spec.k * spec.k)
    if isinstance(spec, Triangular):
        sub = spec_order(spec.base)
        return None if sub is None else sub ** (spec.k * (spec.k + 1) // 2)
    if isinstance(spec, PolyMod):
        sub = spec_order(spec.base)
        return None if sub is None else sub ** spec.n
    if isinstance(spec, TrivialExt):
        sub = spec_order(spec.base)
        return None if sub is None else sub * sub
    if isinstance(spec, Opposite):
        return spec_order(spec.base)
    return None  # quotient, corner, ideal: bounded by the base order


def _check_cap(order: int, cap: int, what: str) -> None:
    if order > cap:
        raise OrderCapError(f"{what} has order {order}, over the cap {cap}")


# ---------------------------------------------------------------------------
# digit packing shared by product / matrix / triangular / polynomial / trivext


def pack_digits(radices: Sequence[int], digits: Sequence[int]) -> int:
    i = 0
    for d, r in zip(digits, radices):
        i = i * r + d
    return i


def unpack_digits(radices: Sequence[int], i: int) -> list[int]:
    out = [0] * len(radices)
    for pos in range(len(radices) - 1, -1, -1):
        i, out[pos] = divmod(i, radices[pos])
    return out


def ring_pack(ring: FiniteRing, digits: Sequence[int]) -> int:
    """Element index from its digit tuple, for digit-structured rings."""
    return pack_digits(ring.meta["radices"], digits)


def ring_unpack(ring: FiniteRing, i: int) -> list[int]:
    """Digit tuple of an element index, for digit-structured rings."""
    return unpack_digits(ring.meta["radices"], i)


# ---------------------------------------------------------------------------
# constructors


def zn_ring(n: int, spec: Optional[RingSpec] = None, max_order: Optional[int] = None,
            validate: Optional[bool] = None) -> FiniteRing:
    """Residue ring of integers modulo n."""
    if n < 1:
        raise ValueError("modulus must be at least 1")
    _check_cap(n, resolve_max_order(max_order), f"Z{n}")
    return FiniteRing(
        n,
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        lambda a: (-a) % n,
        zero=0,
        one=1 % n,
        spec=spec if spec is not None else Zn(n),
        meta={"kind": "zn", "n": n},
        validate=validate,
    )


def product_ring(bases: Sequence[FiniteRing], spec: Optional[RingSpec] = None,
                 max_order: Optional[int] = None, validate: Optional[bool] = None) -> FiniteRing:
    """Direct product with componentwise operations, first component slowest."""
    if not bases:
        raise ValueError("product needs at least one factor")
    radices = tuple(B.order for B in bases)
    order = 1
    for r in radices:
        order *= r
    label = "x".join(B.label for B in bases)
    _check_cap(order, resolve_max_order(max_order), label)
    adds = [B.add for B in bases]
    muls = [B.mul for B in bases]
    negs = [B.neg for B in bases]

    def add(i, j):
        di = unpack_digits(radices, i)
        dj = unpack_digits(radices, j)
        return pack_digits(radices, [f(a, b) for f, a, b in zip(adds, di, dj)])

    def mul(i, j):
        di = unpack_digits(radices, i)
        dj = unpack_digits(radices, j)
        return pack_digits(radices, [f(a, b) for f, a, b in zip(muls, di, dj)])

    def neg(i):
        return pack_digits(radices, [f(a) for f, a in zip(negs, unpack_digits(radices, i))])

    one = None
    if all(B.unital for B in bases):
        one = pack_digits(radices, [B.one for B in bases])

    def elabel(i, _bases=tuple(bases)):
        digits = unpack_digits(radices, i)
        return "(" + ",".join(B.element_label(d) for B, d in zip(_bases, digits)) + ")"

    return FiniteRing(order, add, mul, neg, zero=0, one=one, spec=spec, label=label,
                      element_label=elabel,
                      meta={"kind": "product", "radices": radices, "bases": tuple(bases)},
                      validate=validate)


def matrix_ring(base: FiniteRing, k: int, spec: Optional[RingSpec] = None,
                max_order: Optional[int] = None, validate: Optional[bool] = None) -> FiniteRing:
    """Full k x k matrix ring over the base, entries stored row-major."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    bo = base.order
    m = k * k
    order = bo ** m
    label = f"M{k}({base.label})"
    _check_cap(order, resolve_max_order(max_order), label)
    radices = (bo,) * m

    if k == 2 and base.mul_table is not None:
        mt = base.mul_table
        at = base.add_table
        nt = base.neg_table
        b2 = bo * bo
        b3 = b2 * bo

        def mul(x, y):
            x0 = x // b3
            x1 = (x // b2) % bo
            x2 = (x // bo) % bo
            x3 = x % bo
            y0 = y // b3
            y1 = (y // b2) % bo
            y2 = (y // bo) % bo
            y3 = y % bo
            return ((at[mt[x0][y0]][mt[x1][y2]] * bo + at[mt[x0][y1]][mt[x1][y3]]) * bo
                    + at[mt[x2][y0]][mt[x3][y2]]) * bo + at[mt[x2][y1]][mt[x3][y3]]

        def add(x, y):
            return ((at[x // b3][y // b3] * bo + at[(x // b2) % bo][(y // b2) % bo]) * bo
                    + at[(x // bo) % bo][(y // bo) % bo]) * bo + at[x % bo][y % bo]

        def neg(x):
            return ((nt[x // b3] * bo + nt[(x // b2) % bo]) * bo
                    + nt[(x // bo) % bo]) * bo + nt[x % bo]
    else:
        badd = base.add
        bmul = base.mul
        bneg = base.neg

        def mul(x, y):
            A = unpack_digits(radices, x)
            B = unpack_digits(radices, y)
            out = []
            for i in range(k):
                ik = i * k
                for j in range(k):
                    acc = bmul(A[ik], B[j])
                    for l in range(1, k):
                        acc = badd(acc, bmul(A[ik + l], B[l * k + j]))
                    out.append(acc)
            return pack_digits(radices, out)

        def add(x, y):
            dx = unpack_digits(radices, x)
            dy = unpack_digits(radices, y)
            return pack_digits(radices, [badd(a, b) for a, b in zip(dx, dy)])

        def neg(x):
            return pack_digits(radices, [bneg(a) for a in unpack_digits(radices, x)])

    one = None
    if base.unital:
        digits = [base.zero] * m
        for i in range(k):
            digits[i * k + i] = base.one
        one = pack_digits(radices, digits)

    def elabel(i):
        d = unpack_digits(radices, i)
        rows = ["[" + ",".join(base.element_label(d[r * k + c]) for c in range(k)) + "]"
                for r in range(k)]
        return "[" + ",".join(rows) + "]"

    return FiniteRing(order, add, mul, neg, zero=0, one=one, spec=spec, label=label,
                      element_label=elabel,
                      meta={"kind": "matrix", "k": k, "base": base, "radices": radices},
                      validate=validate)


def triangular_ring(base: FiniteRing, k: int, spec: Optional[RingSpec] = None,
                    max_order: Optional[int] = None, validate: Optional[bool] = None) -> FiniteRing:
    """Upper triangular k x k matrix ring; stored entries are (i, j) with i <= j."""
    if k < 2:
        raise ValueError("triangular size must be at least 2")
    bo = base.order
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    slot = {pos: s for s, pos in enumerate(positions)}
    m = len(positions)
    order = bo ** m
    label = f"T{k}({base.label})"
    _check_cap(order, resolve_max_order(max_order), label)
    radices = (bo,) * m
    badd = base.add
    bmul = base.mul
    bneg = base.neg

    def mul(x, y):
        A = unpack_digits(radices, x)
        B = unpack_digits(radices, y)
        out = []
        for (i, j) in positions:
            acc = None
            for l in range(i, j + 1):
                term = bmul(A[slot[(i, l)]], B[slot[(l, j)]])
                acc = term if acc is None else badd(acc, term)
            out.append(acc)
        return pack_digits(radices, out)

    def add(x, y):
        dx = unpack_digits(radices, x)
        dy = unpack_digits(radices, y)
        return pack_digits(radices, [badd(a, b) for a, b in zip(dx, dy)])

    def neg(x):
        return pack_digits(radices, [bneg(a) for a in unpack_digits(radices, x)])

    one = None
    if base.unital:
        digits = [base.zero] * m
        for i in range(k):
            digits[slot[(i, i)]] = base.one
        one = pack_digits(radices, digits)

    def elabel(i):
        d = unpack_digits(radices, i)
        zero_lab = base.element_label(base.zero)
        rows = []
        for r in range(k):
            cells = [base.element_label(d[slot[(r, c)]]) if c >= r else zero_lab
                     for c in range(k)]
            rows.append("[" + ",".join(cells) + "]")
        return "[" + ",".join(rows) + "]"

    return FiniteRing(order, add, mul, neg, zero=0, one=one, spec=spec, label=label,
                      element_label=elabel,
                      meta={"kind": "triangular", "k": k, "base": base,
                            "positions": tuple(positions), "radices": radices},
                      validate=validate)


def poly_mod_ring(base: FiniteRing, n: int, spec: Optional[RingSpec] = None,
                  max_order: Optional[int] = None, validate: Optional[bool] = None) -> FiniteRing:
    """Polynomials over the base truncated at degree n, i.e. x^n = 0.

    Elements are coefficient tuples with the constant term first; products are
    convolutions with terms of degree n or higher dropped.
    """
    if n < 1:
        raise ValueError("truncation degree must be at least 1")
    bo = base.order
    order = bo ** n
    label = f"{base.label}[x]/(x^{n})"
    _check_cap(order, resolve_max_order(max_order), label)
    radices = (bo,) * n
    badd = base.add
    bmul = base.mul
    bneg = base.neg

    def mul(x, y):
        A = unpack_digits(radices, x)
        B = unpack_digits(radices, y)
        out = []
        for t in range(n):
            acc = None
            for u in range(t + 1):
                term = bmul(A[u], B[t - u])
                acc = term if acc is None else badd(acc, term)
            out.append(acc)
        return pack_digits(radices, out)

    def add(x, y):
        dx = unpack_digits(radices, x)
        dy = unpack_digits(radices, y)
        return pack_digits(radices, [badd(a, b) for a, b in zip(dx, dy)])

    def neg(x):
        return pack_digits(radices, [bneg(a) for a in unpack_digits(radices, x)])

    one = None
    if base.unital:
        digits = [base.zero] * n
        digits[0] = base.one
        one = pack_digits(radices, digits)

    is_zn = base.meta.get("kind") == "zn"

    def elabel(i):
        d = unpack_digits(radices, i)
        if not is_zn:
            return "poly(" + ",".join(base.element_label(c) for c in d) + ")"
        terms = []
        for t, c in enumerate(d):
            if c == base.zero:
                continue
            if t == 0:
                terms.append(str(c))
            elif t == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{t}" if c == 1 else f"{c}x^{t}")
        return "+".join(terms) if terms else "0"

    return FiniteRing(order, add, mul, neg, zero=0, one=one, spec=spec, label=label,
                      element_label=elabel,
                      meta={"kind": "polymod", "n": n, "base": base, "radices": radices},
                      validate=validate)


def trivial_ext_ring(base: FiniteRing, spec: Optional[RingSpec] = None,
                     max_order: Optional[int] = None, validate: Optional[bool] = None) -> FiniteRing:
    """Trivial extension of the base by itself as a bimodule.

    Elements are pairs (a, x); products are (a, x)(b, y) = (ab, ay + xb), so the
    module part squares to zero.
    """
    bo = base.order
    order = bo * bo
    label = f"Triv({base.label})"
    _check_cap(order, resolve_max_order(max_order), label)
    radices = (bo, bo)
    badd = base.add
    bmul = base.mul
    bneg = base.neg

    def add(i, j):
        a, x = divmod(i, bo)
        b, y = divmod(j, bo)
        return badd(a, b) * bo + badd(x, y)

    def mul(i, j):
        a, x = divmod(i, bo)
        b, y = divmod(j, bo)
        return bmul(a, b) * bo + badd(bmul(a, y), bmul(x, b))

    def neg(i):
        a, x = divmod(i, bo)
        return bneg(a) * bo + bneg(x)

    one = base.one * bo + base.zero if base.unital else None

    def elabel(i):
        a, x = divmod(i, bo)
        return f"({base.element_label(a)}|{base.element_label(x)})"

    return FiniteRing(order, add, mul, neg, zero=0, one=one, spec=spec, label=label,
                      element_label=elabel,
                      meta={"kind": "trivext", "base": base, "radices": radices},
                      validate=validate)


def opposite(ring: FiniteRing, spec: Optional[RingSpec] = None,
             validate: Optional[bool] = None) -> FiniteRing:
    """Same additive group with multiplication reversed."""
    if spec is None and ring.spec is not None:
        spec = Opposite(ring.spec)
    label = f"Op({ring.label})"
    if ring.mul_table is not None:
        n = ring.order
        mt = ring.mul_table
        mul_t = [[mt[b][a] for b in range(n)] for a in range(n)]
        return FiniteRing(n, [row[:] for row in ring.add_table], mul_t,
                          list(ring.neg_table), zero=ring.zero, one=ring.one,
                          spec=spec, label=label, element_label=ring.element_label,
                          meta={"kind": "opposite", "base": ring}, validate=validate)
    mul = ring.mul
    return FiniteRing(ring.order, ring.add, lambda a, b: mul(b, a), ring.neg,
                      zero=ring.zero, one=ring.one, spec=spec, label=label,
                      element_label=ring.element_label,
                      meta={"kind": "opposite", "base": ring}, validate=validate)


def subring(parent: FiniteRing, members: Iterable[int], one: Optional[int] = None,
            detect_one: bool = False, spec: Optional[RingSpec] = None,
            label: Optional[str] = None, validate: Optional[bool] = None) -> FiniteRing:
    """Ring on a subset of the parent closed under its operations.

    Elements are reindexed 0..k-1 in parent index order; the tuple of parent
    indices is kept on the result as ``members``.
    """
    mem = sorted(set(members))
    index_of = {m: i for i, m in enumerate(mem)}
    if parent.zero not in index_of:
        raise ValueError("subring must contain zero")
    padd, pmul, pneg = parent.add, parent.mul, parent.neg
    for a in mem:
        if pneg(a) not in index_of:
            raise ValueError(f"subset not closed under negation at {a}")
        for b in mem:
            if padd(a, b) not in index_of:
                raise ValueError(f"subset not closed under addition at ({a}, {b})")
            if pmul(a, b) not in index_of:
                raise ValueError(f"subset not closed under multiplication at ({a}, {b})")
    add_t = [[index_of[padd(a, b)] for b in mem] for a in mem]
    mul_t = [[index_of[pmul(a, b)] for b in mem] for a in mem]
    neg_t = [index_of[pneg(a)] for a in mem]
    if one is None and detect_one:
        for u in mem:
            if all(pmul(u, m) == m and pmul(m, u) == m for m in mem):
                one = u
                break
    elif one is not None and one not in index_of:
        raise ValueError("designated unity is not a member")
    ring = FiniteRing(len(mem), add_t, mul_t, neg_t,
                      zero=index_of[parent.zero],
                      one=index_of[one] if one is not None else None,
                      spec=spec,
                      label=label or f"Sub({parent.label})",
                      element_label=lambda i, _m=tuple(mem): parent.element_label(_m[i]),
                      meta={"kind": "subring", "base": parent, "members": tuple(mem)},
                      validate=validate)
    ring.members = tuple(mem)
    return ring


def corner_ring(parent: FiniteRing, e: int, spec: Optional[RingSpec] = None,
                validate: Optional[bool] = None) -> FiniteRing:
    """Corner e*R*e for an idempotent e; unital with unity e."""
    if not 0 <= e < parent.order:
        raise ValueError(f"element {e} out of range")
    pmul = parent.mul
    if pmul(e, e) != e:
        raise ValueError(f"corner needs an idempotent, {e} is not one")
    if parent.unital and e == parent.one:
        return parent
    members = sorted({pmul(pmul(e, r), e) for r in range(parent.order)})
    if spec is None and parent.spec is not None:
        spec = Corner(parent.spec, e)
    return subring(parent, members, one=e, spec=spec,
                   label=f"Corner({parent.label},{e})", validate=validate)


def ideal_subring(parent: FiniteRing, members: Iterable[int],
                  spec: Optional[RingSpec] = None, label: Optional[str] = None,
                  validate: Optional[bool] = None) -> FiniteRing:
    """An ideal viewed as a ring of its own; unity detected if one exists."""
    return subring(parent, members, detect_one=True, spec=spec,
                   label=label or f"Ideal({parent.label})", validate=validate)


def quotient(parent: FiniteRing, ideal, spec: Optional[RingSpec] = None,
             validate: Optional[bool] = None) -> tuple[FiniteRing, list[int]]:
    """Quotient by a two-sided ideal.

    Cosets are represented by their smallest parent index and enumerated in
    representative order. Returns the quotient ring and the projection list
    (parent index -> quotient index); the ring also carries ``reps`` and
    ``projection`` attributes.
    """
    from .structure import Ideal, make_ideal

    if not isinstance(ideal, Ideal):
        ideal = make_ideal(parent, ideal)
    if ideal.ring is not parent:
        raise ValueError("ideal belongs to a different ring")
    n = parent.order
    padd = parent.add
    proj = [-1] * n
    reps: list[int] = []
    for x in range(n):
        if proj[x] >= 0:
            continue
        qi = len(reps)
        reps.append(x)
        for i in ideal.members:
            proj[padd(x, i)] = qi
    k = len(reps)
    pmul, pneg = parent.mul, parent.neg
    add_t = [[proj[padd(reps[a], reps[b])] for b in range(k)] for a in range(k)]
    mul_t = [[proj[pmul(reps[a], reps[b])] for b in range(k)] for a in range(k)]
    neg_t = [proj[pneg(reps[a])] for a in range(k)]
    one = proj[parent.one] if parent.unital else None
    ring = FiniteRing(k, add_t, mul_t, neg_t, zero=proj[parent.zero], one=one,
                      spec=spec, label=f"{parent.label}/I{len(ideal.members)}",
                      element_label=lambda i, _r=tuple(reps): f"[{parent.element_label(_r[i])}]",
                      meta={"kind": "quotient", "base": parent,
                            "reps": tuple(reps), "projection": tuple(proj)},
                      validate=validate)
    ring.reps = tuple(reps)
    ring.projection = tuple(proj)
    return ring, proj


def build(spec: RingSpec, max_order: Optional[int] = None,
          validate: Optional[bool] = None) -> FiniteRing:
    """Materialize a RingSpec into a FiniteRing, enforcing the order cap."""
    cap = resolve_max_order(max_order)
    known = spec_order(spec)
    if known is not None:
        _check_cap(known, cap, str(spec))
    if isinstance(spec, Zn):
        return zn_ring(spec.n, spec=spec, max_order=cap, validate=validate)
    if isinstance(spec, Product):
        bases = [build(p, cap, validate) for p in spec.parts]
        return product_ring(bases, spec=spec, max_order=cap, validate=validate)
    if isinstance(spec, Matrix):
        return matrix_ring(build(spec.base, cap, validate), spec.k, spec=spec,
                           max_order=cap, validate=validate)
    if isinstance(spec, Triangular):
        return triangular_ring(build(spec.base, cap, validate), spec.k, spec=spec,
                               max_order=cap, validate=validate)
    if isinstance(spec, PolyMod):
        return poly_mod_ring(build(spec.base, cap, validate), spec.n, spec=spec,
                             max_order=cap, validate=validate)
    if isinstance(spec, TrivialExt):
        return trivial_ext_ring(build(spec.base, cap, validate), spec=spec,
                                max_order=cap, validate=validate)
    if isinstance(spec, Opposite):
        return opposite(build(spec.base, cap, validate), spec=spec, validate=validate)
    if isinstance(spec, Corner):
        return corner_ring(build(spec.base, cap, validate), spec.e, spec=spec,
                           validate=validate)
    if isinstance(spec, Quotient):
        from .structure import ideal_generated

        base = build(spec.base, cap, validate)
        for g in spec.generators:
            if not 0 <= g < base.order:
                raise ValueError(f"generator {g} out of range for {base.label}")
        ideal = ideal_generated(base, spec.generators)
        ring, _ = quotient(base, ideal, spec=spec, validate=validate)
        return ring
    if isinstance(spec, IdealRing):
        from .structure import ideal_generated

        base = build(spec.base, cap, validate)
        for g in spec.generators:
            if not 0 <= g < base.order:
                raise ValueError(f"generator {g} out of range for {base.label}")
        ideal = ideal_generated(base, spec.generators)
        return ideal_subring(base, ideal.members, spec=spec, label=str(spec),
                             validate=validate)
    raise TypeError(f"unknown spec node {type(spec).__name__}")


@lru_cache(maxsize=None)
def _build_cached(spec: RingSpec, cap: int) -> FiniteRing:
    return build(spec, max_order=cap)


def build_cached(spec: RingSpec, max_order: Optional[int] = None) -> FiniteRing:
    """build() with memoization on (spec, effective cap)."""
    return _build_cached(spec, resolve_max_order(max_order))
