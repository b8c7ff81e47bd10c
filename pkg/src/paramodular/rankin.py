"""Torus-sum series, local factor polynomials, and the normalized series map.

For Whittaker data d on the rank-n odd orthogonal dominant cone and
1 <= r <= n, the degree-l series coefficient is the weighted torus sum

    psi_l(d) = sum over lam = (lam_1..lam_r, 0..0) dominant, trace = l, of
               d(lam) * v^{sum_i lam_i (r+1-2i)} * s_lam(X_1..X_r)
               * v^{l(2n-r-1)}

where the first v-power is the inverse square root of the GL_r Borel
modulus (the Iwasawa quotient measure contributes the full inverse modulus,
half of which cancels into the normalized Whittaker value) and the second
is the determinant-character twist.  With this normalization the spherical
data reproduces the classical identity

    sum_lam chi^{Sp_{2n}}_lam(beta) s_lam(x) =
        prod_{i<j} (1 - x_i x_j)^{-1} prod_{i,k} (1 - x_i beta_k)^{-1}
                                                  (1 - x_i beta_k^{-1})^{-1}

at x_i = v^{-1} X_i Y, i.e. the normalized series collapses to 1.

Everything runs in one of two modes: symbolic (coefficients are Laurent
polynomials in X_1..X_r over VLaurent) or evaluation (X_i and v bound to
exact rationals, coefficients are Fractions).  Both are exact.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any

from .characters import schur
from .coweights import Coweight, trace
from .rings import SymLaurent, TruncSeries, VLaurent, evaluate, is_in_s0
from .whittaker import WhittakerData, gl_modulus_exponent


class SymbolicMode:
    """Coefficients are SymLaurent in r variables."""

    kind = "symbolic"

    def __init__(self, r: int):
        self.r = r

    def zero(self) -> SymLaurent:
        return SymLaurent.zero(self.r)

    def one(self) -> SymLaurent:
        return SymLaurent.one(self.r)

    def x_monomial(self, exps) -> SymLaurent:
        return SymLaurent.monomial(self.r, exps)

    def from_vlaurent(self, c: VLaurent) -> SymLaurent:
        return SymLaurent.constant(self.r, c)

    def schur(self, lam: Coweight) -> SymLaurent:
        return schur(lam, self.r)


class EvaluationMode:
    """X_i and v bound to exact rationals; coefficients are Fractions."""

    kind = "evaluation"

    def __init__(self, r: int, point, v_value):
        self.r = r
        self.point = tuple(Fraction(x) for x in point)
        if len(self.point) != r:
            raise ValueError("point length differs from variable count")
        self.v_value = Fraction(v_value)
        if self.v_value == 0:
            raise ValueError("v must be nonzero")
        self._schur_cache: dict[Coweight, Fraction] = {}

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def x_monomial(self, exps) -> Fraction:
        out = Fraction(1)
        for base, k in zip(self.point, exps):
            if k == 0:
                continue
            if base == 0:
                if k < 0:
                    raise ZeroDivisionError("zero point entry hits a negative exponent")
                return Fraction(0)
            out *= base**k
        return out

    def from_vlaurent(self, c: VLaurent) -> Fraction:
        return c.evaluate(self.v_value)

    def schur(self, lam: Coweight) -> Fraction:
        lam = tuple(lam)
        val = self._schur_cache.get(lam)
        if val is None:
            val = evaluate(schur(lam, self.r), self.point, self.v_value)
            self._schur_cache[lam] = val
        return val


Mode = SymbolicMode | EvaluationMode


def unit_series(mode: Mode) -> TruncSeries:
    return TruncSeries({0: mode.one()}, None, mode.zero())


def psi_component(d: WhittakerData, n: int, r: int, ell: int, mode: Mode) -> Any:
    """The degree-ell coefficient of the torus-sum series (see module
    docstring).  Homogeneous of total degree ell in the X variables."""
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    if d.n != n or mode.r != r:
        raise ValueError("rank mismatch between data, n and mode")
    total = mode.zero()
    if ell < 0:
        return total
    twist = ell * (2 * n - r - 1)
    for lam, val in d.items():
        if trace(lam) != ell or any(lam[r:]):
            continue
        head = lam[:r]
        weight = VLaurent.v_power(gl_modulus_exponent(head, r) + twist)
        total = total + mode.from_vlaurent(val * weight) * mode.schur(head)
    return total


def psi_series(d: WhittakerData, n: int, r: int, trunc: int, mode: Mode) -> TruncSeries:
    coeffs = {}
    for ell in range(trunc + 1):
        c = psi_component(d, n, r, ell, mode)
        if not (c == 0):
            coeffs[ell] = c
    return TruncSeries(coeffs, trunc, mode.zero())


def p_phi_pi(beta, n: int, r: int, mode: Mode) -> TruncSeries:
    """Numerator local factor: prod over j <= r, i <= n, both signs, of
    (1 - beta_i^{+-1} v^{-1} X_j Y).  Exact polynomial of Y-degree 2nr with
    constant coefficient 1."""
    beta = tuple(Fraction(b) for b in beta)
    if len(beta) != n:
        raise ValueError("Satake parameter length differs from n")
    if any(b == 0 for b in beta):
        raise ValueError("Satake parameters must be nonzero")
    if mode.r != r:
        raise ValueError("mode variable count differs from r")
    out = unit_series(mode)
    for j in range(r):
        ej = tuple(1 if k == j else 0 for k in range(r))
        xj = mode.x_monomial(ej)
        for b in beta:
            for root in (b, 1 / b):
                lin = mode.from_vlaurent(VLaurent({-1: -root})) * xj
                out = out * TruncSeries({0: mode.one(), 1: lin}, None, mode.zero())
    return out


def p_wedge2(r: int, mode: Mode) -> TruncSeries:
    """Denominator local factor: prod over i < j of (1 - v^{-2} X_i X_j Y^2).
    Exact polynomial of Y-degree r(r-1); equals 1 when r = 1."""
    if mode.r != r:
        raise ValueError("mode variable count differs from r")
    out = unit_series(mode)
    for i in range(r):
        for j in range(i + 1, r):
            e = tuple(1 if k in (i, j) else 0 for k in range(r))
            quad = mode.from_vlaurent(VLaurent({-2: -1})) * mode.x_monomial(e)
            out = out * TruncSeries({0: mode.one(), 2: quad}, None, mode.zero())
    return out


@dataclasses.dataclass
class EpsilonData:
    """Conductor exponent and root-number sign of the local functional
    equation; the unramified case is (0, +1)."""

    conductor: int = 0
    sign: int = 1

    def __post_init__(self) -> None:
        if self.conductor < 0:
            raise ValueError("conductor exponent must be non-negative")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclasses.dataclass
class XiResult:
    """Outcome of the normalized series computation.

    ``poly`` is the value at Y = 1 (meaningful when ``stabilized``);
    ``detected_degree`` is the top Y-degree with a nonzero coefficient
    (-1 for the zero series); ``stabilized`` records that the final
    ``window`` coefficients below the truncation order all vanish.
    """

    n: int
    r: int
    m: int
    poly: Any
    detected_degree: int
    stabilized: bool
    series: TruncSeries = dataclasses.field(repr=False)

    def to_json(self) -> dict:
        if isinstance(self.poly, SymLaurent):
            poly = self.poly.to_json()
        else:
            poly = f"{self.poly.numerator}/{self.poly.denominator}"
        return {
            "n": self.n,
            "r": self.r,
            "m": self.m,
            "poly": poly,
            "detected_degree": self.detected_degree,
            "stabilized": self.stabilized,
        }


def default_trunc(d: WhittakerData, n: int, r: int, window: int) -> int:
    return d.max_trace() + 2 * n * r + r * (r - 1) + window


def xi(
    d: WhittakerData,
    n: int,
    r: int,
    *,
    beta=None,
    p_phi: TruncSeries | None = None,
    mode: Mode | None = None,
    trunc: int | None = None,
    window: int = 4,
    level: int = 0,
) -> XiResult:
    """Normalized series: (numerator factor) * (torus sum) / (denominator
    factor), truncated at ``trunc``.

    The numerator factor comes from ``beta`` (unramified parameters) or is
    supplied directly via ``p_phi``; with neither it is taken to be 1.
    If the coefficients do not vanish on the final ``window`` degrees the
    result is flagged as not stabilized rather than raising.
    """
    if mode is None:
        mode = SymbolicMode(r)
    if window < 2:
        raise ValueError("window must be at least 2")
    if trunc is None:
        trunc = default_trunc(d, n, r, window)
    if trunc < window:
        raise ValueError("truncation order must be at least the window")
    psi = psi_series(d, n, r, trunc, mode)
    if p_phi is None:
        p_phi = p_phi_pi(beta, n, r, mode) if beta is not None else unit_series(mode)
    b = p_wedge2(r, mode).invert(trunc, mode.one())
    series = p_phi * psi * b
    top = series.support_max()
    detected = -1 if top is None else top
    stabilized = all(
        series.get(k) == 0 for k in range(trunc - window + 1, trunc + 1)
    )
    poly = mode.zero()
    for _, c in sorted(series.coeffs.items()):
        poly = poly + c
    return XiResult(n, r, level, poly, detected, stabilized, series)


def specialize_last(result: XiResult) -> XiResult:
    """Substitute X_r = 0 throughout (symbolic mode only), dropping to r-1
    variables.  On stabilized results this realizes the tower-compatibility
    of the normalized series."""
    if not isinstance(result.poly, SymLaurent):
        raise ValueError("specialization requires a symbolic result")
    r = result.r
    if r < 1:
        raise ValueError("no variable to specialize")
    zero = SymLaurent.zero(r - 1)
    coeffs = {}
    for k, c in result.series.coeffs.items():
        s = c.substitute_last_zero()
        if s:
            coeffs[k] = s
    series = TruncSeries(coeffs, result.series.trunc, zero, result.series.nmin)
    top = series.support_max()
    detected = -1 if top is None else top
    trunc = result.series.trunc
    window_ok = True
    if trunc is not None:
        window_ok = all(series.get(k) == 0 for k in range(max(0, trunc - 3), trunc + 1))
    return XiResult(
        result.n,
        r - 1,
        result.m,
        result.poly.substitute_last_zero(),
        detected,
        result.stabilized and window_ok,
        series,
    )


def epsilon_poly(eps: EpsilonData, m: int, r: int) -> TruncSeries:
    """The monomial sign^r * (X_1...X_r)^{a-m} * Y^{(a-m)r} appearing in the
    functional equation at level m above conductor a."""
    a = eps.conductor
    k = (a - m) * r
    coeff = SymLaurent.monomial(r, ((a - m),) * r, eps.sign**r)
    return TruncSeries({k: coeff}, None, SymLaurent.zero(r), nmin=min(k, 0))


def fe_check(xi_v: XiResult, xi_uv: XiResult, eps: EpsilonData, m: int) -> bool:
    """Functional equation at Y = 1: the Atkin-Lehner image's value with all
    X inverted must equal sign^r (X_1..X_r)^{a-m} times the original."""
    if not isinstance(xi_v.poly, SymLaurent) or not isinstance(xi_uv.poly, SymLaurent):
        raise ValueError("functional equation check requires symbolic results")
    if (xi_v.n, xi_v.r) != (xi_uv.n, xi_uv.r):
        raise ValueError("results belong to different groups")
    r = xi_v.r
    lhs = xi_uv.poly.invert_all_vars()
    factor = SymLaurent.monomial(r, ((eps.conductor - m),) * r, eps.sign**r)
    return lhs == factor * xi_v.poly


def hecke_act(result: XiResult, satake_image: SymLaurent) -> XiResult:
    """Multiply a rank-equal (r = n) result by a Hecke operator's Satake
    image, which must be symmetric and invariant under pair inversion."""
    if result.r != result.n:
        raise ValueError("Hecke action requires r = n")
    if not isinstance(result.poly, SymLaurent):
        raise ValueError("Hecke action requires a symbolic result")
    if not is_in_s0(satake_image):
        raise ValueError("Satake image is not invariant under the required group")
    series = result.series.scalar_mul(satake_image)
    top = series.support_max()
    return XiResult(
        result.n,
        result.r,
        result.m,
        result.poly * satake_image,
        -1 if top is None else top,
        result.stabilized,
        series,
    )


def zeta_series(d: WhittakerData, n: int, trunc: int) -> TruncSeries:
    """The r = 1 series with X_1 evaluated at 1: coefficient of Y^l is
    d((l, 0, ..)) * v^{l(2n-2)}.  Coefficients are VLaurent."""
    coeffs = {}
    for ell in range(trunc + 1):
        lam = (ell,) + (0,) * (n - 1)
        val = d.get(lam) * VLaurent.v_power(ell * (2 * n - 2))
        if val:
            coeffs[ell] = val
    return TruncSeries(coeffs, trunc, VLaurent.zero())


def kernel_check(d: WhittakerData, n: int, r: int, trunc: int | None = None) -> bool:
    """Verify that the normalized series of d vanishes iff d vanishes on the
    rank-r torus slice (support elements with zero tail).  The numerator and
    denominator factors are unit series, so vanishing of the normalized
    series is equivalent to vanishing of the bare torus sum, which is what
    gets tested; the truncation defaults to the support diameter."""
    if trunc is None:
        trunc = d.max_trace()
    slice_zero = all(any(lam[r:]) for lam in d.support)
    mode = SymbolicMode(r)
    series_zero = psi_series(d, n, r, trunc, mode).is_zero()
    return slice_zero == series_zero
