"""Finite commutative rings with identity, stored as dense Cayley tables.

Elements are the integers 0..order-1; ``add_table`` and ``mul_table`` are
read-only order x order numpy arrays, so every predicate in this module is
an explicit exhaustive scan over those tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapExceededError,
    InvalidElementError,
    InvalidModulusError,
    InvalidOrderError,
    InvalidPolynomialError,
    RingConsistencyError,
)

DEFAULT_MAX_ORDER = 4096
ISO_SEARCH_CAP = 12

# chunk budget (cells) for the O(n^3) axiom tensors
_CHUNK_CELLS = 1 << 22


class FiniteRing:
    """A finite commutative ring with nonzero identity.

    Construction only checks that ``zero`` and ``one`` act as identities and
    that table values are in range; ``validate_ring_axioms`` runs the full
    exhaustive axiom scan. Instances are immutable after construction (the
    tables are locked), so they are safe to share between threads.
    """

    __slots__ = ("order", "zero", "one", "add_table", "mul_table", "element_names", "spec")

    def __init__(self, add_table, mul_table, element_names, spec: str, zero: int, one: int):
        add = np.ascontiguousarray(np.asarray(add_table, dtype=np.intp))
        mul = np.ascontiguousarray(np.asarray(mul_table, dtype=np.intp))
        n = int(add.shape[0]) if add.ndim == 2 else 0
        if n < 2:
            raise InvalidOrderError("a ring needs at least two elements (nonzero identity)")
        if add.shape != (n, n) or mul.shape != (n, n):
            raise RingConsistencyError("operation tables must be square and equally sized")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise RingConsistencyError("table entries must be element indices in 0..order-1")
        zero = int(zero)
        one = int(one)
        if not (0 <= zero < n and 0 <= one < n):
            raise InvalidElementError("zero/one must be element indices")
        if zero == one:
            raise RingConsistencyError("zero and one coincide; the zero ring is not supported")
        idx = np.arange(n, dtype=np.intp)
        if not (add[zero] == idx).all():
            raise RingConsistencyError("`zero` is not an additive identity")
        if not (mul[one] == idx).all():
            raise RingConsistencyError("`one` is not a multiplicative identity")
        names = tuple(str(name) for name in element_names)
        if len(names) != n:
            raise RingConsistencyError("need exactly one display name per element")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.order = n
        self.zero = zero
        self.one = one
        self.add_table = add
        self.mul_table = mul
        self.element_names = names
        self.spec = str(spec)

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteRing({self.spec!r}, order={self.order})"


@dataclass(frozen=True)
class ElementSet:
    """An immutable subset of a ring's elements."""

    ring: FiniteRing
    members: frozenset[int]

    def __post_init__(self):
        for x in self.members:
            if not (0 <= x < self.ring.order):
                raise InvalidElementError(f"element index {x} out of range for order {self.ring.order}")

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def names(self) -> tuple[str, ...]:
        return tuple(self.ring.element_names[x] for x in sorted(self.members))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _check_order_cap(order: int, max_order: int) -> None:
    if order > max_order:
        raise CapExceededError(f"ring order {order} exceeds the cap of {max_order}")


def build_zn(n: int, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """The integers modulo ``n``, with element ``i`` named ``"i"``."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidOrderError(f"ring order must be an integer >= 2, got {n!r}")
    _check_order_cap(n, max_order)
    idx = np.arange(n, dtype=np.intp)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    names = tuple(str(i) for i in range(n))
    return FiniteRing(add, mul, names, f"Zn:{n}", zero=0, one=1)


def _poly_name(digits: Sequence[int], p: int) -> str:
    terms = []
    for j in range(len(digits) - 1, -1, -1):
        c = int(digits[j])
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
        else:
            coef = "" if c == 1 else str(c)
            terms.append(coef + ("x" if j == 1 else f"x^{j}"))
    return "+".join(terms) if terms else "0"


def build_poly_quotient(p: int, coeffs: Sequence[int], *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Z_p[X]/(f) for a monic ``f`` given constant-term first.

    Elements are polynomials of degree < deg(f); element ``i`` has the
    base-p digits of ``i`` as coefficients (digit j = coefficient of x^j).
    """
    if not _is_prime(p):
        raise InvalidModulusError(f"polynomial modulus must be prime, got {p}")
    cs = [int(c) for c in coeffs]
    if len(cs) < 2:
        raise InvalidPolynomialError("quotient polynomial must have degree at least 1")
    if any(c < 0 or c >= p for c in cs):
        raise InvalidPolynomialError(f"coefficients must lie in 0..{p - 1}")
    if cs[-1] != 1:
        raise InvalidPolynomialError("quotient polynomial must be monic (leading coefficient 1)")
    k = len(cs) - 1
    order = p**k
    _check_order_cap(order, max_order)

    digits = np.zeros((order, k), dtype=np.intp)
    v = np.arange(order, dtype=np.intp)
    for j in range(k):
        digits[:, j] = v % p
        v = v // p
    powers = p ** np.arange(k, dtype=np.intp)

    add = np.empty((order, order), dtype=np.intp)
    step = max(1, _CHUNK_CELLS // (order * k))
    for lo in range(0, order, step):
        hi = min(order, lo + step)
        add[lo:hi] = ((digits[lo:hi, None, :] + digits[None, :, :]) % p) @ powers

    # x^m mod f for m < 2k-1; x^k == -(c0 + c1 x + ... + c_{k-1} x^{k-1})
    red = np.zeros((2 * k - 1, k), dtype=np.intp)
    for m in range(k):
        red[m, m] = 1
    head = np.asarray([(-c) % p for c in cs[:k]], dtype=np.intp)
    for m in range(k, 2 * k - 1):
        prev = red[m - 1]
        shifted = np.zeros(k, dtype=np.intp)
        shifted[1:] = prev[: k - 1]
        red[m] = (shifted + prev[k - 1] * head) % p

    mul = np.empty((order, order), dtype=np.intp)
    width = 2 * k - 1
    step = max(1, _CHUNK_CELLS // (order * width))
    for lo in range(0, order, step):
        hi = min(order, lo + step)
        conv = np.zeros((hi - lo, order, width), dtype=np.intp)
        for j in range(k):
            conv[:, :, j : j + k] += digits[lo:hi, j][:, None, None] * digits[None, :, :]
        mul[lo:hi] = (((conv @ red) % p) @ powers)

    names = tuple(_poly_name(digits[i], p) for i in range(order))
    spec = f"polyq:{p}:{','.join(str(c) for c in cs)}"
    return FiniteRing(add, mul, names, spec, zero=0, one=1)


def direct_product(a: FiniteRing, b: FiniteRing, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Componentwise product ring on row-major index pairs (i*|b| + j)."""
    order = a.order * b.order
    _check_order_cap(order, max_order)
    nb = b.order
    add = (a.add_table[:, None, :, None] * nb + b.add_table[None, :, None, :]).reshape(order, order)
    mul = (a.mul_table[:, None, :, None] * nb + b.mul_table[None, :, None, :]).reshape(order, order)
    names = tuple(f"({x},{y})" for x in a.element_names for y in b.element_names)
    zero = a.zero * nb + b.zero
    one = a.one * nb + b.one
    return FiniteRing(add, mul, names, f"prod({a.spec},{b.spec})", zero=zero, one=one)


def zero_divisors(r: FiniteRing) -> ElementSet:
    """Z(R) = elements x with x*y = 0 for some nonzero y (0 always qualifies)."""
    hits = r.mul_table == r.zero
    hits[:, r.zero] = False
    members = frozenset(np.flatnonzero(hits.any(axis=1)).tolist())
    return ElementSet(r, members)


def nilpotents(r: FiniteRing) -> ElementSet:
    """Elements with some power equal to zero.

    Exponents up to the ring order suffice; repeated squaring reaches a
    power >= order in log steps.
    """
    e = np.arange(r.order, dtype=np.intp)
    for _ in range(max(1, (r.order - 1).bit_length())):
        e = r.mul_table[e, e]
    members = frozenset(np.flatnonzero(e == r.zero).tolist())
    return ElementSet(r, members)


def is_reduced(r: FiniteRing) -> bool:
    """True when the only nilpotent element is zero."""
    return nilpotents(r).members == frozenset({r.zero})


def is_von_neumann_regular(r: FiniteRing) -> bool:
    """True when every x admits a y with x*y*x = x (exhaustive search)."""
    mul = r.mul_table
    for x in range(r.order):
        if not (mul[mul[x], x] == x).any():
            return False
    return True


def _unit_mask(r: FiniteRing) -> np.ndarray:
    return (r.mul_table == r.one).any(axis=1)


def total_quotient_ring(r: FiniteRing) -> FiniteRing:
    """Localization at the non-zero-divisors; the ring itself when finite.

    In a finite commutative ring every regular element is a unit, so the
    localization changes nothing. This verifies that fact on the tables
    (it can only fail for corrupted data) and returns ``r`` unchanged.
    """
    zset = zero_divisors(r).members
    unit = _unit_mask(r)
    for x in range(r.order):
        if x not in zset and not unit[x]:
            raise RingConsistencyError(
                f"element {r.element_names[x]} is neither a unit nor a zero-divisor"
            )
    return r


def annihilator(r: FiniteRing, x: int) -> ElementSet:
    """All a with a*x = 0."""
    if not (isinstance(x, (int, np.integer)) and 0 <= x < r.order):
        raise InvalidElementError(f"element index {x!r} out of range for order {r.order}")
    members = frozenset(np.flatnonzero(r.mul_table[int(x)] == r.zero).tolist())
    return ElementSet(r, members)


def _additive_order(r: FiniteRing, x: int) -> int:
    k, s = 1, x
    while s != r.zero:
        s = int(r.add_table[s, x])
        k += 1
    return k


def is_isomorphic_small(a: FiniteRing, b: FiniteRing, *, max_order: int = ISO_SEARCH_CAP) -> bool:
    """Brute-force ring isomorphism test for small rings (order cap 12).

    Searches for a bijection mapping zero to zero and one to one that
    preserves both tables, with constraint propagation so the search
    closes each partial map under the operations.
    """
    if a.order > max_order or b.order > max_order:
        raise CapExceededError(f"isomorphism search capped at order {max_order}")
    if a.order != b.order:
        return False
    n = a.order

    nil_a, nil_b = nilpotents(a).members, nilpotents(b).members
    zd_a, zd_b = zero_divisors(a).members, zero_divisors(b).members
    prof_a = [(_additive_order(a, x), x in nil_a, x in zd_a) for x in range(n)]
    prof_b = [(_additive_order(b, x), x in nil_b, x in zd_b) for x in range(n)]
    if sorted(prof_a) != sorted(prof_b):
        return False
    if prof_a[a.zero] != prof_b[b.zero] or prof_a[a.one] != prof_b[b.one]:
        return False

    add_a, mul_a = a.add_table.tolist(), a.mul_table.tolist()
    add_b, mul_b = b.add_table.tolist(), b.mul_table.tolist()

    def propagate(fwd: dict, inv: dict, fresh: list) -> bool:
        while fresh:
            u = fresh.pop()
            fu = fwd[u]
            for ta, tb in ((add_a, add_b), (mul_a, mul_b)):
                row_a, row_b = ta[u], tb[fu]
                for v, fv in list(fwd.items()):
                    s, t = row_a[v], row_b[fv]
                    if s in fwd:
                        if fwd[s] != t:
                            return False
                    elif t in inv:
                        return False
                    else:
                        fwd[s] = t
                        inv[t] = s
                        fresh.append(s)
        return True

    def search(fwd: dict, inv: dict) -> bool:
        if len(fwd) == n:
            return True
        u = min(x for x in range(n) if x not in fwd)
        for w in range(n):
            if w in inv or prof_b[w] != prof_a[u]:
                continue
            f2, i2 = dict(fwd), dict(inv)
            f2[u] = w
            i2[w] = u
            if propagate(f2, i2, [u]) and search(f2, i2):
                return True
        return False

    fwd = {a.zero: b.zero, a.one: b.one}
    inv = {b.zero: a.zero, b.one: a.one}
    if not propagate(fwd, inv, [a.zero, a.one]):
        return False
    return search(fwd, inv)


def validate_ring_axioms(r: FiniteRing) -> None:
    """Exhaustively verify every commutative-ring axiom on the tables.

    Raises RingConsistencyError naming the broken axiom and a witness;
    associativity/distributivity are checked in chunks to bound memory.
    """
    n, A, M = r.order, r.add_table, r.mul_table
    idx = np.arange(n, dtype=np.intp)
    if not (A == A.T).all():
        i, j = np.argwhere(A != A.T)[0]
        raise RingConsistencyError(f"addition not commutative at ({i},{j})")
    if not (M == M.T).all():
        i, j = np.argwhere(M != M.T)[0]
        raise RingConsistencyError(f"multiplication not commutative at ({i},{j})")
    if not (A[r.zero] == idx).all():
        raise RingConsistencyError("zero is not an additive identity")
    if not (M[r.one] == idx).all():
        raise RingConsistencyError("one is not a multiplicative identity")
    if not (A == r.zero).any(axis=1).all():
        x = int(np.flatnonzero(~(A == r.zero).any(axis=1))[0])
        raise RingConsistencyError(f"element {x} has no additive inverse")

    step = max(1, _CHUNK_CELLS // (n * n))
    for lo in range(0, n, step):
        hi = min(n, lo + step)
        for table, label in ((A, "addition"), (M, "multiplication")):
            lhs = table[table[lo:hi]]
            rhs = table[lo:hi][:, table]
            if not (lhs == rhs).all():
                i, b, c = np.argwhere(lhs != rhs)[0]
                raise RingConsistencyError(f"{label} not associative at ({lo + i},{b},{c})")
        mrows = M[lo:hi]
        lhs = mrows[:, A]
        rhs = A[mrows[:, :, None], mrows[:, None, :]]
        if not (lhs == rhs).all():
            i, b, c = np.argwhere(lhs != rhs)[0]
            raise RingConsistencyError(f"distributivity fails at ({lo + i},{b},{c})")
