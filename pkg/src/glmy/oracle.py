"""Reference Betti numbers from the classical ``Omega`` chain complex.

Deliberately independent of :mod:`glmy.linalg`: all elimination here is done
over the integers with row-content normalization, never with fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .digraph import Digraph, max_allowed_path_length
from .paths import PathBasis, boundary_terms, enumerate_allowed


def _normalize(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        return [x // g for x in row]
    return row


def _integer_reduce(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Integer Gauss-Jordan: each pivot column is zero outside its pivot row."""
    a = [_normalize(list(r)) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        piv = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = _normalize([piv[c] * x - f * y for x, y in zip(a[i], piv)])
        pivots.append(c)
        r += 1
    return a[:r], pivots


def integer_rank(rows: list[list[int]], ncols: int) -> int:
    return len(_integer_reduce(rows, ncols)[1])


def integer_nullspace(rows: list[list[int]], ncols: int) -> list[list[int]]:
    red, pivots = _integer_reduce(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        scale = 1
        for i, c in enumerate(pivots):
            scale = lcm(scale, red[i][c])
        v = [0] * ncols
        v[f] = scale
        for i, c in enumerate(pivots):
            v[c] = -red[i][f] * (scale // red[i][c])
        basis.append(_normalize(v))
    return basis


@dataclass(frozen=True)
class OmegaBasis:
    """Basis of ``Omega_k`` as integer vectors over the allowed ``k``-paths."""

    degree: int
    allowed: PathBasis
    vectors: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)


def omega_basis(g: Digraph, k: int) -> OmegaBasis:
    """``{x in A_k : dx in A_{k-1}}``: kernel of the non-allowed boundary block."""
    allowed = enumerate_allowed(g, k)
    if k == 0:
        vecs = tuple(tuple(int(i == j) for j in range(len(allowed))) for i in range(len(allowed)))
        return OmegaBasis(k, allowed, vecs)
    lower = enumerate_allowed(g, k - 1)
    bad: dict = {}
    entries = []
    for j, p in enumerate(allowed):
        for q, s in boundary_terms(p).items():
            if q not in lower:
                entries.append((bad.setdefault(q, len(bad)), j, s))
    rows = [[0] * len(allowed) for _ in range(len(bad))]
    for i, j, s in entries:
        rows[i][j] += s
    if not rows:
        vecs = [[int(i == j) for j in range(len(allowed))] for i in range(len(allowed))]
    else:
        vecs = integer_nullspace(rows, len(allowed))
    return OmegaBasis(k, allowed, tuple(tuple(v) for v in vecs))


def _boundary_rank(om: OmegaBasis, lower: PathBasis) -> int:
    if om.dim == 0 or om.degree == 0:
        return 0
    images = []
    for v in om.vectors:
        acc: dict = {}
        for coeff, p in zip(v, om.allowed):
            if coeff:
                for q, s in boundary_terms(p).items():
                    acc[q] = acc.get(q, 0) + coeff * s
        row = [0] * len(lower)
        for q, c in acc.items():
            if q in lower:
                row[lower.index[q]] = c
            elif c:
                raise AssertionError(f"boundary of an Omega vector hits non-allowed {q}")
        images.append(row)
    return integer_rank(images, len(lower))


def betti_omega(g: Digraph, max_degree: int | None = None) -> list[int]:
    """``dim ker d|Omega_k - rank d|Omega_{k+1}`` for ``k = 0..d``."""
    d = max_allowed_path_length(g)
    top = d if max_degree is None else min(d, max_degree)
    omegas = [omega_basis(g, k) for k in range(top + 2)]
    ranks = [_boundary_rank(omegas[k], omegas[k - 1].allowed if k else PathBasis(-1, ()))
             for k in range(top + 2)]
    return [omegas[k].dim - ranks[k] - ranks[k + 1] for k in range(top + 1)]
