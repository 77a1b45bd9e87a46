"""Independent ground-truth routes, used only by tests and --verify.

Two cross-checks against the skein recursion:

* Alexander polynomial from the explicit Seifert matrix of the standard
  positive diagram, via det(t*S - S^T) over exact integer polynomials.
* Jones polynomial by its own skein recursion, from which v3 is read off
  through derivatives at t = 1.

Laurent polynomials are plain dicts {exponent: coefficient}; the Jones
recursion works internally in x = t^(1/2) so link states with
half-integer powers stay exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .conway import ConwayPolynomial, LinkState, reduce_state
from .errors import NonIntegerResult

SeifertMatrix = list[list[int]]
LaurentPolynomial = dict[int, int]

# ---------------------------------------------------------------- Seifert


def seifert_matrix(cf: Sequence[int]) -> SeifertMatrix:
    """Block lower-bidiagonal Seifert matrix of the positive diagram.

    Odd-position regions of size a contribute (a-1)x(a-1) blocks with
    diagonal -1 and subdiagonal 1; even-position regions contribute the
    1x1 block (-1 - a/2); consecutive blocks are linked by a single
    subdiagonal 1.
    """
    sizes_values: list[tuple[int, int]] = []
    for i, a in enumerate(cf):
        if i % 2 == 0:
            sizes_values.append((a - 1, -1))
        else:
            sizes_values.append((1, -1 - a // 2))
    n = sum(size for size, _ in sizes_values)
    matrix = [[0] * n for _ in range(n)]
    pos = 0
    prev_last: int | None = None
    for size, diag in sizes_values:
        if size == 0:
            continue
        for j in range(size):
            matrix[pos + j][pos + j] = diag
            if j > 0:
                matrix[pos + j][pos + j - 1] = 1
        if prev_last is not None:
            matrix[pos][prev_last] = 1
        prev_last = pos + size - 1
        pos += size
    return matrix


# Dense integer polynomials (index = power of t) for the determinant.


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division, as guaranteed by fraction-free elimination."""
    if not a:
        return []
    rem = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff, check = divmod(rem[k + len(b) - 1], b[-1])
        assert check == 0, "division was not exact"
        out[k] = coeff
        if coeff:
            for j, cb in enumerate(b):
                rem[k + j] -= coeff * cb
    assert all(c == 0 for c in rem), "division was not exact"
    return out


def _poly_det(matrix: list[list[list[int]]]) -> list[int]:
    """Fraction-free (Bareiss) determinant over integer polynomials."""
    n = len(matrix)
    if n == 0:
        return [1]
    m = [row[:] for row in matrix]
    prev: list[int] = [1]
    sign = 1
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _poly_sub(_poly_mul(m[i][j], m[k][k]),
                                _poly_mul(m[i][k], m[k][j]))
                m[i][j] = _poly_divexact(num, prev)
            m[i][k] = []
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return [sign * c for c in result]


def alexander_from_seifert(matrix: SeifertMatrix) -> LaurentPolynomial:
    """Normalized Alexander polynomial det(t*S - S^T)."""
    n = len(matrix)
    def entry(i: int, j: int) -> list[int]:
        dense = [-matrix[j][i], matrix[i][j]]  # -S^T + t*S
        while dense and dense[-1] == 0:
            dense.pop()
        return dense

    entries = [[entry(i, j) for j in range(n)] for i in range(n)]
    dense = _poly_det(entries)
    return _normalize_alexander({k: c for k, c in enumerate(dense) if c})


def alexander_from_conway(poly: ConwayPolynomial) -> LaurentPolynomial:
    """Substitute z^2 = t - 2 + 1/t and normalize."""
    z2: LaurentPolynomial = {1: 1, 0: -2, -1: 1}
    acc: LaurentPolynomial = {}
    power: LaurentPolynomial = {0: 1}
    for k in range(0, len(poly), 2):
        c = poly[k] if k < len(poly) else 0
        if c:
            for e, v in power.items():
                acc[e] = acc.get(e, 0) + c * v
        power = _laurent_mul(power, z2)
    return _normalize_alexander({k: v for k, v in acc.items() if v})


def _laurent_mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    out: LaurentPolynomial = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _normalize_alexander(poly: LaurentPolynomial) -> LaurentPolynomial:
    """Center exponents symmetrically and fix the sign so that p(1) = 1."""
    if not poly:
        return {}
    lo, hi = min(poly), max(poly)
    shift = (lo + hi) // 2
    out = {e - shift: c for e, c in poly.items()}
    at_one = sum(out.values())
    assert abs(at_one) == 1, f"Alexander value at 1 is {at_one}, not a unit"
    if at_one < 0:
        out = {e: -c for e, c in out.items()}
    return out


# ------------------------------------------------------------------ Jones

_T2: LaurentPolynomial = {4: 1}            # t^2, in x = t^(1/2)
_TSKEIN: LaurentPolynomial = {3: 1, 1: -1}  # t^(3/2) - t^(1/2)
_UNLINK2: LaurentPolynomial = {1: -1, -1: -1}  # V of the 2-component unlink


def jones_poly(cf: Sequence[int]) -> LaurentPolynomial:
    """Jones polynomial of the 4-plat closure, as {t-exponent: coeff}.

    Mirrors the Conway recursion's case structure with every resolved
    crossing treated as positive:
    V(state) = t^2 V(two fewer) + (t^(3/2) - t^(1/2)) V(oriented resolution).
    The convention makes the positive trefoil come out with positive
    exponents.
    """
    half = _jones(LinkState(tuple(cf), True), {})
    if any(e % 2 for e in half):
        raise NonIntegerResult(f"half-integer t-powers survive for {list(cf)}")
    return {e // 2: c for e, c in half.items()}


def _jones(state: LinkState, memo: dict[LinkState, LaurentPolynomial]) -> LaurentPolynomial:
    state = reduce_state(state)
    entries = state.entries
    if entries in ((), (1,)):
        return {0: 1}
    if entries == (0,):
        return _UNLINK2
    cached = memo.get(state)
    if cached is not None:
        return cached
    a = entries[0]
    minus = _jones(LinkState((a - 2,) + entries[1:], state.odd_leading), memo)
    if state.odd_leading:
        zero = _jones(LinkState((a - 1,) + entries[1:], True), memo)
    else:
        zero = _jones(LinkState(entries[1:], True), memo)
    result: LaurentPolynomial = {}
    for term, factor in ((minus, _T2), (zero, _TSKEIN)):
        for e1, c1 in factor.items():
            for e2, c2 in term.items():
                e = e1 + e2
                result[e] = result.get(e, 0) + c1 * c2
    result = {e: c for e, c in result.items() if c}
    memo[state] = result
    return result


def v3_from_jones(poly: LaurentPolynomial) -> int:
    """v3 = -V'''(1)/36 - V''(1)/12, exact."""
    d2 = sum(c * e * (e - 1) for e, c in poly.items())
    d3 = sum(c * e * (e - 1) * (e - 2) for e, c in poly.items())
    value = Fraction(-d3, 36) + Fraction(-d2, 12)
    if value.denominator != 1:
        raise NonIntegerResult(f"v3 from Jones is not integral: {value}")
    return int(value)
