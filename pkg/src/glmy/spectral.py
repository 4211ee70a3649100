"""Exact Betti numbers, harmonic representatives and Hodge decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chain import ChainComplex, hodge_laplacian_gamma
from .linalg import RationalMatrix, primitive_integer_vector


class HomologyError(AssertionError):
    """Two exact routes to the same homological quantity disagreed."""


def kernel_basis(m: RationalMatrix) -> list[tuple[int, ...]]:
    """Right nullspace basis as primitive integer vectors (positive leading entry)."""
    return [primitive_integer_vector(v) for v in m.nullspace()]


@dataclass(frozen=True)
class DegreeHomology:
    degree: int
    betti: int
    gamma_dim: int
    rank_boundary: int
    kernel_basis: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HomologyReport:
    degrees: tuple[DegreeHomology, ...]

    @property
    def betti(self) -> list[int]:
        return [d.betti for d in self.degrees]

    @property
    def gamma_dims(self) -> list[int]:
        return [d.gamma_dim for d in self.degrees]

    @property
    def euler(self) -> int:
        return sum((-1) ** d.degree * d.betti for d in self.degrees)

    def to_json(self) -> dict:
        return {
            "betti": self.betti,
            "gamma_dims": self.gamma_dims,
            "kernels": [[list(v) for v in d.kernel_basis] for d in self.degrees],
            "euler": self.euler,
        }


def betti_numbers(cx: ChainComplex) -> HomologyReport:
    """Betti numbers by rank-nullity, cross-checked against ``dim ker Delta^Gamma``."""
    ranks = {k: cx.D(k).rank() for k in range(cx.top_degree + 2)}
    out = []
    for k in cx.degrees:
        gamma = cx.gamma(k).dim
        betti = gamma - ranks[k] - ranks[k + 1]
        harmonic = kernel_basis(hodge_laplacian_gamma(cx, k))
        if len(harmonic) != betti:
            raise HomologyError(
                f"degree {k}: rank-nullity gives {betti}, Laplacian kernel has {len(harmonic)}"
            )
        out.append(DegreeHomology(k, betti, gamma, ranks[k], tuple(harmonic)))
    return HomologyReport(tuple(out))


def euler_characteristic(cx: ChainComplex) -> int:
    """Alternating sum of chain-group dimensions."""
    return sum((-1) ** k * d for k, d in enumerate(cx.gamma_dims()))


class DecompositionError(AssertionError):
    pass


@dataclass(frozen=True)
class HodgeReport:
    degree: int
    gamma_dim: int
    harmonic: int
    exact: int
    coexact: int


def hodge_decomposition_check(cx: ChainComplex, k: int) -> HodgeReport:
    """Verify ``Gamma_k = ker Delta + im D_{k+1} + im D_k^*`` as an orthogonal sum.

    Orthogonality is with respect to the Gram matrix ``N_k``.
    """
    gb = cx.gamma(k)
    lap = hodge_laplacian_gamma(cx, k)
    harm = lap.nullspace()
    ex = cx.D(k + 1).columns()
    coex = cx.Dstar(k).columns()
    n = gb.dim
    parts = [harm, ex, coex]
    dims = (len(harm), cx.D(k + 1).rank(), cx.Dstar(k).rank())
    report = HodgeReport(k, n, *dims)
    if sum(dims) != n:
        raise DecompositionError(f"dimension mismatch {n} != {' + '.join(map(str, dims))}")
    for i in range(3):
        for j in range(i + 1, 3):
            for u in parts[i]:
                nu = gb.norm.matvec(u)
                for v in parts[j]:
                    if sum((a * b for a, b in zip(nu, v)), Fraction(0)) != 0:
                        raise DecompositionError(f"summands {i} and {j} are not orthogonal")
    every = [v for p in parts for v in p]
    if n and RationalMatrix.from_columns(every, n).rank() != n:
        raise DecompositionError("summands do not span Gamma_k")
    return report
