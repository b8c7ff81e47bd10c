"""Weyl characters with exact coefficients.

* Schur polynomials for GL_r via Jacobi-Trudi, extended to weakly
  decreasing integer vectors with negative entries by a determinant twist,
  plus an independent semistandard-tableau oracle;
* symplectic characters for Sp_{2n} by the Weyl alternant ratio, with the
  exact polynomial division acting as a built-in self-check, plus the Weyl
  dimension formula as a second oracle;
* the three minuscule characters of SO_4;
* orbit sums under the type D Weyl group (permutations and even sign
  changes), the triangular stand-in used where exact Satake values are not
  tabulated;
* the specialization X_r -> 0 that drops the last GL variable.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction

from .coweights import Cone, Coweight, is_dominant, tilde
from .rings import SymLaurent, VLaurent, poly_div_exact


@functools.cache
def complete_homogeneous(r: int, m: int) -> SymLaurent:
    """h_m(X_1..X_r): sum of all degree-m monomials."""
    if m < 0:
        return SymLaurent.zero(r)
    coeffs = {}
    for split in itertools.combinations_with_replacement(range(r), m):
        e = [0] * r
        for i in split:
            e[i] += 1
        coeffs[tuple(e)] = 1
    if m == 0:
        coeffs = {(0,) * r: 1}
    return SymLaurent(r, coeffs)


def _det(entries: list[list[SymLaurent]], r: int) -> SymLaurent:
    k = len(entries)
    total = SymLaurent.zero(r)
    for perm in itertools.permutations(range(k)):
        sign = 1
        seen = list(perm)
        # parity by counting inversions
        inv = sum(
            1 for i in range(k) for j in range(i + 1, k) if seen[i] > seen[j]
        )
        sign = -1 if inv % 2 else 1
        prod = SymLaurent.one(r)
        for i in range(k):
            prod = prod * entries[i][perm[i]]
        total = total + (prod if sign == 1 else -prod)
    return total


@functools.cache
def schur(lam: Coweight, r: int) -> SymLaurent:
    """Schur polynomial s_lam(X_1..X_r) by Jacobi-Trudi.

    lam must be weakly decreasing of length r; a negative last entry is
    handled through s_lam = (X_1...X_r)^{lam_r} * s_{lam - lam_r}.
    """
    lam = tuple(lam)
    if len(lam) != r:
        raise ValueError("weight length differs from variable count")
    if not is_dominant(lam, Cone.GL):
        raise ValueError("weight is not weakly decreasing")
    shift = lam[-1] if lam[-1] < 0 else 0
    core = tuple(x - shift for x in lam)
    matrix = [
        [complete_homogeneous(r, core[i] - (i + 1) + (j + 1)) for j in range(r)]
        for i in range(r)
    ]
    s = _det(matrix, r)
    if shift:
        s = s * SymLaurent.monomial(r, (shift,) * r)
    return s


def schur_oracle(lam: Coweight, r: int) -> SymLaurent:
    """Independent Schur computation: exhaustive enumeration of semistandard
    tableaux (rows weakly increase, columns strictly increase, entries in
    1..r).  Requires a partition (non-negative entries)."""
    lam = tuple(lam)
    if len(lam) != r or not is_dominant(lam, Cone.GL) or (lam and lam[-1] < 0):
        raise ValueError("need a partition of length r")
    shape = [x for x in lam if x > 0]
    if not shape:
        return SymLaurent.one(r)
    rows: list[list[int]] = [[0] * c for c in shape]
    weights: dict[tuple[int, ...], int] = {}

    def fill(i: int, j: int) -> None:
        if i == len(shape):
            e = [0] * r
            for row in rows:
                for x in row:
                    e[x - 1] += 1
            key = tuple(e)
            weights[key] = weights.get(key, 0) + 1
            return
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0 and j < shape[i - 1]:
            lo = max(lo, rows[i - 1][j] + 1)
        nxt = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        for val in range(lo, r + 1):
            rows[i][j] = val
            fill(*nxt)
        rows[i][j] = 0

    fill(0, 0)
    return SymLaurent(r, weights)


def _alternant(exps: list[int], n: int) -> SymLaurent:
    entries = [
        [
            SymLaurent.monomial(n, tuple(exps[i] if k == j else 0 for k in range(n)))
            - SymLaurent.monomial(n, tuple(-exps[i] if k == j else 0 for k in range(n)))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _det(entries, n)


@functools.cache
def sp_character(lam: Coweight, n: int) -> SymLaurent:
    """Character of the irreducible Sp_{2n} representation with highest
    weight lam, by the Weyl formula

        det(x_j^{l_i + n - i + 1} - x_j^{-(l_i + n - i + 1)})
        -----------------------------------------------------
        det(x_j^{n - i + 1}       - x_j^{-(n - i + 1)})

    The division must be exact; a remainder means a bug upstream."""
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError("weight length differs from rank")
    if not is_dominant(lam, Cone.G):
        raise ValueError("weight must be weakly decreasing and non-negative")
    num = _alternant([lam[i] + n - i for i in range(n)], n)
    den = _alternant([n - i for i in range(n)], n)
    try:
        return poly_div_exact(num, den)
    except ValueError as exc:  # pragma: no cover - internal consistency check
        raise ArithmeticError(f"Weyl alternant division failed for {lam}") from exc


def sp_character_value(lam: Coweight, beta: tuple[Fraction, ...]) -> Fraction:
    """Numeric symplectic character: the alternant ratio evaluated at an
    exact rational point.  The point must avoid the Weyl denominator's zero
    locus (beta_i distinct from beta_j^{+-1} and from +-1, all nonzero)."""
    n = len(beta)
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError("weight length differs from rank")
    if any(b == 0 for b in beta):
        raise ValueError("degenerate Satake point: zero coordinate")

    def det(exps: list[int]) -> Fraction:
        rows = [[beta[j] ** e - beta[j] ** (-e) for j in range(n)] for e in exps]
        total = Fraction(0)
        for perm in itertools.permutations(range(n)):
            inv = sum(
                1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
            )
            term = Fraction(1) if inv % 2 == 0 else Fraction(-1)
            for i in range(n):
                term *= rows[i][perm[i]]
            total += term
        return total

    den = det([n - i for i in range(n)])
    if den == 0:
        raise ValueError("degenerate Satake point: Weyl denominator vanishes")
    return det([lam[i] + n - i for i in range(n)]) / den


def sp_dimension(lam: Coweight, n: int) -> int:
    """Weyl dimension formula for Sp_{2n} (independent oracle for
    sp_character at the all-ones point)."""
    lam = tuple(lam)
    rho = [n - i for i in range(n)]  # (n, n-1, ..., 1)
    mu = [lam[i] + n - i for i in range(n)]  # lam + rho
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(mu[i] - mu[j], rho[i] - rho[j])
            dim *= Fraction(mu[i] + mu[j], rho[i] + rho[j])
    for i in range(n):
        dim *= Fraction(mu[i], rho[i])
    if dim.denominator != 1:
        raise ArithmeticError("Weyl dimension formula gave a non-integer")
    return int(dim)


_SO4_TABLE: dict[Coweight, dict[tuple[int, int], int]] = {
    (1, 0): {(1, 0): 1, (0, 1): 1, (-1, 0): 1, (0, -1): 1},
    (1, 1): {(1, 1): 1, (0, 0): 1, (-1, -1): 1},
    (1, -1): {(1, -1): 1, (0, 0): 1, (-1, 1): 1},
}


def so4_minuscule_character(lam: Coweight) -> SymLaurent:
    """Characters of the three minuscule representations of SO_4 (weights
    (1,0), (1,1), (1,-1)) in two torus variables."""
    lam = tuple(lam)
    if lam not in _SO4_TABLE:
        raise ValueError(f"{lam} is not a tabulated minuscule SO_4 weight")
    return SymLaurent(2, _SO4_TABLE[lam])


def ginzburg_specialize(a: SymLaurent) -> SymLaurent:
    """Drop the last GL variable by the substitution X_r = 0 (defined only
    for non-negative X_r exponents).  On a Schur polynomial this keeps the
    character when the last weight entry is 0 and kills it otherwise."""
    return a.substitute_last_zero()


def _even_flip_masks(n: int) -> list[tuple[int, ...]]:
    masks = []
    for bits in itertools.product((1, -1), repeat=n):
        if bits.count(-1) % 2 == 0:
            masks.append(bits)
    return masks


@functools.cache
def orbit_sum(lam: Coweight, n: int) -> SymLaurent:
    """Sum of X^mu over the orbit of lam under the type D Weyl group
    (permutations composed with an even number of sign changes).  Each orbit
    element contributes once; the result is symmetric and invariant under
    inverting pairs of variables."""
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError("weight length differs from rank")
    orbit = set()
    for perm in itertools.permutations(lam):
        for mask in _even_flip_masks(n):
            orbit.add(tuple(p * s for p, s in zip(perm, mask)))
    return SymLaurent(n, {mu: 1 for mu in orbit})


def h_dominant_orbit_pair(lam: Coweight) -> tuple[Coweight, Coweight]:
    """The type D cone element and its last-entry-negated partner."""
    return lam, tilde(lam)
