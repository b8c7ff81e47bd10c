"""Spherical Whittaker values and finitely supported Whittaker data.

The GL_r spherical Whittaker value at a torus coweight lam is

    v^{-sum_i lam_i (r + 1 - 2i)} * s_lam(X_1..X_r)

(the square root of the Borel modulus character times the Schur
polynomial), and it vanishes off the weakly decreasing cone.

A ``WhittakerData`` models the restriction of a Whittaker function to the
dominant torus of the rank-n odd orthogonal group: a finitely supported map
from the non-negative weakly decreasing cone to VLaurent.  Lookups outside
the cone return 0, which is exactly the support property paramodular-fixed
vectors enjoy.  The data-level raising operators move that support:

    eta:         result(lam) = d(lam - (1,..,1))
    theta  (n=2): result(lam) = d(lam - e1) + q * d(lam - e2)
    theta' (n=2): result(lam) = d(lam - e1 - e2) + q * d(lam)

The theta' rule reflects that its second coset family acts through a
unipotent element on which the Whittaker character is trivial, so the
values are picked up in place (with multiplicity q), not shifted.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .characters import schur, sp_character_value
from .coweights import Cone, Coweight, is_dominant, enumerate_cone, trace
from .rings import SymLaurent, VLaurent


def gl_modulus_exponent(lam: Coweight, r: int) -> int:
    """Exponent w with delta_B^{1/2}(pi^lam) = v^{-w} for GL_r."""
    return sum(lam[i] * (r - 1 - 2 * i) for i in range(r))


def gl_whittaker(lam: Coweight, r: int) -> SymLaurent:
    """Normalized GL_r spherical Whittaker value at pi^lam; zero off the
    weakly decreasing cone."""
    lam = tuple(lam)
    if len(lam) != r:
        raise ValueError("coweight length differs from r")
    if not is_dominant(lam, Cone.GL):
        return SymLaurent.zero(r)
    return SymLaurent.constant(r, VLaurent.v_power(-gl_modulus_exponent(lam, r))) * schur(lam, r)


def homogeneity_check(lam: Coweight, r: int) -> bool:
    """Verify that substituting X_i -> c*X_i multiplies the Whittaker value
    by c^{trace(lam)}.  The substitution is carried out symbolically by
    adjoining c as an extra variable."""
    f = gl_whittaker(lam, r)
    substituted = {e + (sum(e),): x for e, x in f.c.items()}
    scaled = {e + (trace(lam),): x for e, x in f.c.items()}
    return substituted == scaled


class WhittakerData:
    """Finitely supported map from the non-negative weakly decreasing cone
    (length-n coweights) to VLaurent.  Immutable by convention."""

    __slots__ = ("n", "_values")

    def __init__(self, n: int, values: Mapping[Coweight, VLaurent] | None = None):
        if n < 1:
            raise ValueError("rank must be positive")
        self.n = n
        vals: dict[Coweight, VLaurent] = {}
        if values:
            for lam, x in values.items():
                lam = tuple(int(k) for k in lam)
                if len(lam) != n:
                    raise ValueError("support coweight length differs from rank")
                if not is_dominant(lam, Cone.G):
                    raise ValueError(f"support coweight {lam} outside the dominant cone")
                x = x if isinstance(x, VLaurent) else VLaurent.from_scalar(x)
                if x:
                    vals[lam] = x
        self._values = vals

    def get(self, lam: Coweight) -> VLaurent:
        lam = tuple(lam)
        if len(lam) != self.n:
            raise ValueError("coweight length differs from rank")
        if not is_dominant(lam, Cone.G):
            return VLaurent.zero()
        return self._values.get(lam, VLaurent.zero())

    @property
    def support(self) -> list[Coweight]:
        return sorted(self._values)

    def items(self) -> Iterable[tuple[Coweight, VLaurent]]:
        return sorted(self._values.items())

    def max_trace(self) -> int:
        return max((trace(lam) for lam in self._values), default=0)

    def __add__(self, other: "WhittakerData") -> "WhittakerData":
        if self.n != other.n:
            raise ValueError("ranks differ")
        vals = dict(self._values)
        for lam, x in other._values.items():
            s = vals.get(lam)
            s = x if s is None else s + x
            if s:
                vals[lam] = s
            else:
                vals.pop(lam, None)
        out = WhittakerData(self.n)
        out._values = vals
        return out

    def __sub__(self, other: "WhittakerData") -> "WhittakerData":
        return self + other.scale(Fraction(-1))

    def scale(self, c: VLaurent | Fraction | int) -> "WhittakerData":
        c = c if isinstance(c, VLaurent) else VLaurent.from_scalar(c)
        out = WhittakerData(self.n)
        out._values = {lam: x * c for lam, x in self._values.items() if x * c}
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WhittakerData):
            return NotImplemented
        return self.n == other.n and self._values == other._values

    __hash__ = None  # type: ignore[assignment]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"lambda": list(lam), "value": x.to_json()}
                for lam, x in self.items()
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "WhittakerData":
        values = {
            tuple(entry["lambda"]): VLaurent.from_json(entry["value"])
            for entry in data["entries"]
        }
        return WhittakerData(int(data["n"]), values)

    def __repr__(self) -> str:
        return f"WhittakerData(n={self.n}, support={self.support})"


def so_modulus_exponent(lam: Coweight, n: int) -> int:
    """Exponent w with delta_B^{1/2}(pi^lam) = v^{-w} for the rank-n odd
    orthogonal group (2*rho = sum_i (2n - 2i + 1) e_i)."""
    return sum(lam[i] * (2 * n - 2 * i - 1) for i in range(n))


def spherical_so_data(beta: tuple[Fraction, ...], n: int, cutoff: int) -> WhittakerData:
    """Whittaker data of the normalized spherical vector with Satake
    parameter beta (Casselman-Shalika: modulus square root times the
    symplectic character of the dual group), populated through sup norm
    <= cutoff."""
    beta = tuple(Fraction(b) for b in beta)
    if len(beta) != n:
        raise ValueError("Satake parameter length differs from rank")
    if any(b == 0 for b in beta):
        raise ValueError("Satake parameters must be nonzero")
    values = {}
    for lam in enumerate_cone(Cone.G, n, cutoff):
        chi = sp_character_value(lam, beta)
        if chi:
            values[lam] = VLaurent({-so_modulus_exponent(lam, n): chi})
    return WhittakerData(n, values)


def eta_data(d: WhittakerData) -> WhittakerData:
    """Data-level action of the torus translation by -(1,..,1): the support
    shifts up by one box in every coordinate."""
    one = (1,) * d.n
    values = {}
    for lam, x in d.items():
        mu = tuple(a + b for a, b in zip(lam, one))
        values[mu] = x
    return WhittakerData(d.n, values)


def _assert_rank_two(d: WhittakerData, name: str) -> None:
    if d.n != 2:
        raise ValueError(f"{name} is only defined at rank 2")


def theta_data(d: WhittakerData) -> WhittakerData:
    """Rank-2 degree-one raising operator: result(lam) = d(lam - e1)
    + q * d(lam - e2), with out-of-cone lookups contributing 0."""
    _assert_rank_two(d, "theta_data")
    q = VLaurent.q_power(1)
    candidates = set()
    for lam in d.support:
        candidates.add((lam[0] + 1, lam[1]))
        candidates.add((lam[0], lam[1] + 1))
    values = {}
    for lam in candidates:
        if not is_dominant(lam, Cone.G):
            continue
        val = d.get((lam[0] - 1, lam[1])) + q * d.get((lam[0], lam[1] - 1))
        if val:
            values[lam] = val
    return WhittakerData(2, values)


def theta_prime_data(d: WhittakerData) -> WhittakerData:
    """Rank-2 degree-two raising operator: result(lam) = d(lam - e1 - e2)
    + q * d(lam).  The second family of cosets acts through a unipotent on
    which the Whittaker character is trivial, hence the in-place term."""
    _assert_rank_two(d, "theta_prime_data")
    q = VLaurent.q_power(1)
    candidates = set(d.support)
    for lam in d.support:
        candidates.add((lam[0] + 1, lam[1] + 1))
    values = {}
    for lam in candidates:
        if not is_dominant(lam, Cone.G):
            continue
        val = d.get((lam[0] - 1, lam[1] - 1)) + q * d.get(lam)
        if val:
            values[lam] = val
    return WhittakerData(2, values)
