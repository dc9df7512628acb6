"""p-adic integral invariants of binary forms: Jordan symbols at odd p, the
five 2-adic block shapes, same-genus tests, and enumeration of all local
genera with a given determinant squareclass.

The rank-2 shape at 2 is a function of nu = ord_2(det_H) alone:
nu = 0 -> (2bar), nu = 2 -> (2), nu = 3 -> (1,1), nu = 4 -> (1;1),
nu >= 5 -> (1::1); nu = 1 cannot occur (4ac - b^2 is 0 or 3 mod 4).

Genus labels c_2 follow the sign convention of the 2-adic distribution
table: on the even-unimodular row (nu = 0) the label is -1 for both unit
classes, which differs from the pairwise Hilbert-symbol value +1 of the
underlying spaces.  The global bookkeeping compensates; see euler.py.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .arith import NQR, QR, LocalSquareClass, factor, hilbert_symbol, legendre, valuation
from .forms import QuadForm, content, det_hessian, hasse_invariant

SHAPE_BAR2 = "(2bar)"
SHAPE_I2 = "(2)"
SHAPE_11 = "(1,1)"
SHAPE_1_1 = "(1;1)"
SHAPE_TRAINS = "(1::1)"

_SHAPE_BY_NU = {0: SHAPE_BAR2, 2: SHAPE_I2, 3: SHAPE_11, 4: SHAPE_1_1}


def shape_for_nu(nu: int) -> str:
    if nu in _SHAPE_BY_NU:
        return _SHAPE_BY_NU[nu]
    if nu >= 5:
        return SHAPE_TRAINS
    raise ValueError(f"no rank-2 shape with ord_2(det) = {nu}")


@dataclass(frozen=True)
class OddGenusSymbol:
    """Jordan symbol at an odd prime: ordered (scale, dim, unit tag) blocks."""

    p: int
    blocks: tuple[tuple[int, int, int], ...]

    @property
    def nu(self) -> int:
        return sum(scale * dim for scale, dim, _ in self.blocks)

    def det_tag(self) -> int:
        t = 1
        for _, _, tag in self.blocks:
            t *= tag
        return t

    def unit_rep(self) -> int:
        """Integer representing the determinant unit class (for chi/gamma)."""
        if self.det_tag() == QR:
            return 1
        return min(r for r in range(2, self.p) if legendre(r, self.p) == NQR)

    def hasse(self) -> int:
        """Hasse invariant of any form in the genus (leading tag^nu)."""
        if len(self.blocks) == 1:
            return 1
        (_, _, tag1), (scale2, _, _) = self.blocks
        return tag1 if scale2 % 2 else 1


@dataclass(frozen=True)
class TwoAdicGenusSymbol:
    """2-adic invariant: block shape, determinant unit mod 8, Hasse label c_2,
    and (for scale gaps >= 2) the leading-block unit class."""

    shape: str
    nu: int
    unit: int
    c2: int
    lead_unit: int | None

    p: int = 2

    def unit_rep(self) -> int:
        return self.unit


LocalGenusSymbol = Union[OddGenusSymbol, TwoAdicGenusSymbol]


def _canonical_lead(nu: int, u1: int) -> int | None:
    """Leading-unit invariant: mod 4 at nu = 4 (sign walking identifies
    u1 and 5*u1), mod 8 once the scale gap is at least 3; None below."""
    if nu >= 5:
        return u1 % 8
    if nu == 4:
        return u1 % 4
    return None


def jordan_split_odd(f: QuadForm, p: int) -> OddGenusSymbol:
    """Jordan splitting of a nondegenerate binary form over Z_p, p odd."""
    if p == 2:
        raise ValueError("jordan_split_odd needs an odd prime")
    a, b, c = f.abc
    d = det_hessian(f)
    if d == 0:
        raise ValueError("degenerate form")
    k = min(valuation(x, p) for x in (a, b, c) if x != 0)
    a, b, c = a // p**k, b // p**k, c // p**k
    d = 4 * a * c - b * b
    nu = valuation(d, p)
    if nu == 0:
        return OddGenusSymbol(p, ((k, 2, legendre(d, p)),))
    # primitive at p with positive valuation: a or c is a p-unit
    u1 = a if a % p else c
    strip = d // p**nu
    tag1 = legendre(u1, p)
    tag2 = legendre(strip, p) * tag1
    return OddGenusSymbol(p, ((k, 1, tag1), (k + nu, 1, tag2)))


def genus_symbol_2(f: QuadForm) -> TwoAdicGenusSymbol:
    """2-adic genus invariant of a primitive integral binary form."""
    if f.n != 2:
        raise ValueError("binary form required")
    if content(f) % 2 == 0:
        raise ValueError("genus_symbol_2 needs a 2-adically primitive form")
    d = det_hessian(f)
    if d == 0:
        raise ValueError("degenerate form")
    nu = valuation(d, 2)
    unit = (d >> nu) % 8
    c2 = hasse_invariant(f, 2)
    if nu == 0:
        # even-unimodular row: table label, not the pairwise-symbol value
        return TwoAdicGenusSymbol(SHAPE_BAR2, 0, unit, -1, None)
    a, _, c = f.abc
    u1 = a if a % 2 else c
    return TwoAdicGenusSymbol(shape_for_nu(nu), nu, unit, c2, _canonical_lead(nu, u1 % 8))


def local_symbol(f: QuadForm, p: int) -> LocalGenusSymbol:
    return genus_symbol_2(f) if p == 2 else jordan_split_odd(f, p)


def same_genus(f: QuadForm, g: QuadForm) -> bool:
    """True iff f and g have equal local invariants at 2 and at every odd
    prime dividing the (shared) determinant."""
    df, dg = det_hessian(f), det_hessian(g)
    if df != dg:
        raise ValueError("same_genus needs equal determinants")
    for fm in (f, g):
        if not fm.is_positive_definite():
            raise ValueError("same_genus needs positive-definite forms")
    if genus_symbol_2(f) != genus_symbol_2(g):
        return False
    for p, _ in factor(df):
        if p != 2 and jordan_split_odd(f, p) != jordan_split_odd(g, p):
            return False
    return True


def enumerate_local_genera(
    p: int, S_p: LocalSquareClass
) -> list[tuple[LocalGenusSymbol, int]]:
    """All local genera of primitive binary p-integral forms of determinant
    class S_p, each with its Hasse label.  Empty when no genus exists."""
    if S_p.p != p:
        raise ValueError("squareclass prime mismatch")
    if S_p.val < 0:
        return []
    nu, u = S_p.val, S_p.unit
    if p != 2:
        if nu == 0:
            return [(OddGenusSymbol(p, ((0, 2, u),)), 1)]
        out = []
        for eps1 in (QR, NQR):
            sym = OddGenusSymbol(p, ((0, 1, eps1), (nu, 1, u * eps1)))
            out.append((sym, sym.hasse()))
        return out
    if nu == 0:
        if u % 4 != 3:
            return []
        return [(TwoAdicGenusSymbol(SHAPE_BAR2, 0, u, -1, None), -1)]
    if nu == 1:
        return []
    shape = shape_for_nu(nu)
    out = []
    if nu == 2:
        if u % 4 == 1:
            for u1 in (1, 3):
                c = hilbert_symbol(u1, u1 * u % 8, 2)
                out.append((TwoAdicGenusSymbol(shape, nu, u, c, None), c))
        else:
            out.append((TwoAdicGenusSymbol(shape, nu, u, 1, None), 1))
        return out
    if nu == 3:
        for c in (1, -1):
            out.append((TwoAdicGenusSymbol(shape, nu, u, c, None), c))
        return out
    leads = (1, 3) if nu == 4 else (1, 3, 5, 7)
    for u1 in leads:
        u2 = u1 * u % 8
        c = hilbert_symbol(u1, 2 ** (nu - 2) * u2, 2)
        out.append((TwoAdicGenusSymbol(shape, nu, u, c, _canonical_lead(nu, u1)), c))
    return out


def representative_form(sym: LocalGenusSymbol) -> QuadForm:
    """An explicit p-integral binary form lying in the given local genus;
    used to cross-validate the enumeration tables."""
    if isinstance(sym, OddGenusSymbol):
        p = sym.p

        def rep(tag):
            return 1 if tag == QR else min(
                r for r in range(2, p) if legendre(r, p) == NQR
            )

        if len(sym.blocks) == 1:
            scale, _, tag = sym.blocks[0]
            return QuadForm.diagonal(p**scale, p**scale * rep(tag))
        (s1, _, t1), (s2, _, t2) = sym.blocks
        return QuadForm.diagonal(p**s1 * rep(t1), p**s2 * rep(t2))
    nu, u = sym.nu, sym.unit
    if nu == 0:
        return QuadForm.binary(1, 1, 1) if u % 8 == 3 else QuadForm.binary(1, 1, 2)
    if nu == 2:
        if u % 4 == 3 or sym.c2 == 1:
            return QuadForm.diagonal(1, u)
        return QuadForm.diagonal(3, 3 * u % 8)
    if nu == 3:
        for u1 in (1, 3, 5, 7):
            if hilbert_symbol(u1, 2 * (u1 * u % 8), 2) == sym.c2:
                return QuadForm.diagonal(u1, 2 * (u1 * u % 8))
        raise ValueError("no representative found")  # unreachable for valid symbols
    for u1 in (1, 3, 5, 7):
        if _canonical_lead(nu, u1) == sym.lead_unit:
            return QuadForm.diagonal(u1, 2 ** (nu - 2) * (u1 * u % 8))
    raise ValueError("no representative found")
