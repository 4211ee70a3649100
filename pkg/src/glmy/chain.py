"""The embedded chain complex ``Gamma_k = A_k + d(A_{k+1})``.

Each ``Gamma_k`` is stored over its *support coordinates*: the allowed
``k``-paths followed by the non-allowed regular paths that occur in
boundaries of allowed ``(k+1)``-paths. Every basis vector of ``Gamma_k``
lives in that coordinate block, so the embedding, projection and Gram
matrices are exact restrictions of their ``Lambda_k``-sized counterparts
(the omitted rows and columns are identically zero). ``full=True`` variants
expand to the regular-path basis for small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .digraph import Digraph, max_allowed_path_length
from .linalg import RationalMatrix
from .paths import (
    DEFAULT_MAX_REGULAR_PATHS,
    Chain,
    PathBasis,
    boundary,
    boundary_matrix_total,
    boundary_terms,
    coboundary,
    enumerate_allowed,
    enumerate_regular,
)


class ConsistencyError(AssertionError):
    """An exact identity that must hold for every valid complex failed."""


@dataclass(frozen=True)
class GammaBasis:
    """Basis ``(A_k, L_k)`` of ``Gamma_k``.

    ``embedding`` has one row per entry of ``coords`` and one column per basis
    vector (allowed paths first, then the completion vectors).
    """

    degree: int
    allowed: PathBasis
    completion: tuple[Chain, ...]
    coords: PathBasis
    embedding: RationalMatrix
    norm: RationalMatrix

    @property
    def dim(self) -> int:
        return len(self.allowed) + len(self.completion)

    def vectors(self) -> list[Chain]:
        return [Chain.of(p) for p in self.allowed] + list(self.completion)

    def full_embedding(self, n: int, cap: int | None = DEFAULT_MAX_REGULAR_PATHS) -> RationalMatrix:
        """``E_k`` with one row per regular ``k``-path."""
        reg = enumerate_regular(n, self.degree, cap)
        cols = [reg.coordinates(v) for v in self.vectors()]
        return RationalMatrix.from_columns(cols, len(reg))


def _empty_gamma(k: int) -> GammaBasis:
    return GammaBasis(
        k,
        PathBasis(k, ()),
        (),
        PathBasis(k, ()),
        RationalMatrix.zeros(0, 0),
        RationalMatrix.zeros(0, 0),
    )


def build_gamma(g: Digraph, k: int) -> GammaBasis:
    """Basis of ``Gamma_k``: allowed ``k``-paths plus a completion ``L_k``.

    The completion is the reduced row echelon basis (pivot entries ``+1``) of
    the boundaries of allowed ``(k+1)``-paths with their allowed components
    removed. It is orthogonal to every allowed path by construction.
    """
    if k < 0:
        return _empty_gamma(k)
    allowed = enumerate_allowed(g, k)
    upper = enumerate_allowed(g, k + 1)
    residuals: list[dict] = []
    extra: set = set()
    for p in upper:
        r = {q: s for q, s in boundary_terms(p).items() if q not in allowed}
        if r:
            residuals.append(r)
            extra.update(r)
    extra_paths = sorted(extra)
    completion: list[Chain] = []
    if residuals:
        col = {q: i for i, q in enumerate(extra_paths)}
        rows = []
        for r in residuals:
            row = [0] * len(extra_paths)
            for q, s in r.items():
                row[col[q]] = s
            rows.append(row)
        red, pivots = RationalMatrix(rows).rref()
        for i in range(len(pivots)):
            completion.append(Chain(k, dict(zip(extra_paths, red.row(i)))))
    coords = PathBasis(k, tuple(allowed) + tuple(extra_paths))
    a, m = len(allowed), len(extra_paths)
    cols = [tuple(Fraction(int(i == j)) for i in range(a + m)) for j in range(a)]
    cols += [coords.coordinates(c) for c in completion]
    emb = RationalMatrix.from_columns(cols, a + m)
    return GammaBasis(k, allowed, tuple(completion), coords, emb, emb.T @ emb)


def _restricted_boundary(lower: GammaBasis, upper: GammaBasis) -> RationalMatrix:
    """``D_k E_k`` written over the support coordinates of ``Gamma_{k-1}``."""
    cols = []
    for x in upper.vectors():
        try:
            cols.append(lower.coords.coordinates(boundary(x)))
        except ValueError as exc:
            raise ConsistencyError(f"boundary leaves Gamma_{lower.degree}: {exc}") from None
    return RationalMatrix.from_columns(cols, len(lower.coords))


@dataclass
class ChainComplex:
    """Embedded chain complex of a digraph for degrees ``0..top_degree``.

    ``boundary_gamma[k]`` and ``dual_gamma[k]`` hold ``D_k^Gamma`` and
    ``D_k^{Gamma,*}``; degree 0 entries are empty ``0 x gamma_0`` maps.
    """

    digraph: Digraph
    top_degree: int
    bases: list[GammaBasis]
    boundary_gamma: list[RationalMatrix] = field(default_factory=list)
    dual_gamma: list[RationalMatrix] = field(default_factory=list)
    _restricted: list[RationalMatrix] = field(default_factory=list, repr=False)

    @property
    def n(self) -> int:
        return self.digraph.n

    @property
    def degrees(self) -> range:
        return range(self.top_degree + 1)

    def gamma(self, k: int) -> GammaBasis:
        if 0 <= k < len(self.bases):
            return self.bases[k]
        return _empty_gamma(k)

    def gamma_dims(self) -> list[int]:
        return [self.gamma(k).dim for k in self.degrees]

    def D(self, k: int) -> RationalMatrix:
        """``D_k^Gamma`` (``gamma_{k-1} x gamma_k``); zero-sized outside the complex."""
        if 1 <= k < len(self.boundary_gamma):
            return self.boundary_gamma[k]
        return RationalMatrix.zeros(self.gamma(k - 1).dim, self.gamma(k).dim)

    def Dstar(self, k: int) -> RationalMatrix:
        if 1 <= k < len(self.dual_gamma):
            return self.dual_gamma[k]
        return RationalMatrix.zeros(self.gamma(k).dim, self.gamma(k - 1).dim)

    def restricted_boundary(self, k: int) -> RationalMatrix:
        """``D_k E_k`` over the coordinates of ``Gamma_{k-1}``."""
        if 1 <= k < len(self._restricted):
            return self._restricted[k]
        return RationalMatrix.zeros(len(self.gamma(k - 1).coords), self.gamma(k).dim)


def build_complex(g: Digraph, max_degree: int | None = None) -> ChainComplex:
    """Build ``Gamma_0 .. Gamma_top`` with boundaries and their adjoints.

    ``top`` is the longest path length of ``g``, lowered to ``max_degree`` if
    given. One extra degree is built internally so the Laplacian at the top
    reported degree is complete.
    """
    d = max_allowed_path_length(g)
    top = d if max_degree is None else max(0, min(d, max_degree))
    built = min(d, top + 1)
    bases = [build_gamma(g, k) for k in range(built + 1)]
    cx = ChainComplex(g, top, bases)
    cx.boundary_gamma.append(RationalMatrix.zeros(0, bases[0].dim))
    cx.dual_gamma.append(RationalMatrix.zeros(bases[0].dim, 0))
    cx._restricted.append(RationalMatrix.zeros(0, bases[0].dim))
    for k in range(1, built + 1):
        lo, up = bases[k - 1], bases[k]
        de = _restricted_boundary(lo, up)
        dg = lo.norm.solve(lo.embedding.T @ de)
        if lo.embedding @ dg != de:
            raise ConsistencyError(f"E_{k-1} D_{k}^Gamma != D_{k} E_{k}")
        ds = up.norm.solve(de.T @ lo.embedding)
        cx._restricted.append(de)
        cx.boundary_gamma.append(dg)
        cx.dual_gamma.append(ds)
    return cx


def boundary_matrix_gamma(cx: ChainComplex, k: int) -> RationalMatrix:
    return cx.D(k)


def dual_matrix_gamma(cx: ChainComplex, k: int) -> RationalMatrix:
    return cx.Dstar(k)


def projection_matrix(
    cx: ChainComplex, k: int, full: bool = False, cap: int | None = DEFAULT_MAX_REGULAR_PATHS
) -> RationalMatrix:
    """Orthogonal projector ``E (E^T E)^-1 E^T`` onto ``Gamma_k``.

    By default over ``cx.gamma(k).coords``; with ``full=True`` over all
    regular ``k``-paths.
    """
    gb = cx.gamma(k)
    if full:
        e = gb.full_embedding(cx.n, cap)
        if gb.dim == 0:
            return RationalMatrix.zeros(e.shape[0], e.shape[0])
        return e @ gb.norm.solve(e.T)
    if gb.dim == 0:
        return RationalMatrix.zeros(len(gb.coords), len(gb.coords))
    return gb.embedding @ gb.norm.solve(gb.embedding.T)


def hodge_laplacian_gamma(cx: ChainComplex, k: int) -> RationalMatrix:
    """``Delta_k^Gamma`` in the ``(A_k, L_k)`` basis; empty outside ``0..top``."""
    if k < 0 or k > cx.top_degree:
        return RationalMatrix.zeros(0, 0)
    return cx.Dstar(k) @ cx.D(k) + cx.D(k + 1) @ cx.Dstar(k + 1)


def hodge_laplacian_total(
    n: int, k: int, cap: int | None = DEFAULT_MAX_REGULAR_PATHS
) -> RationalMatrix:
    """``Delta_k = D_k^T D_k + D_{k+1} D_{k+1}^T`` over all regular ``k``-paths."""
    dk = boundary_matrix_total(n, k, cap)
    up = boundary_matrix_total(n, k + 1, cap)
    return dk.T @ dk + up @ up.T


def restricted_total_laplacian(cx: ChainComplex, k: int) -> RationalMatrix:
    """Coordinates of ``p_k . Delta_k`` on ``Gamma_k``: ``(E^T E)^-1 E^T Delta_k E``.

    ``Delta_k`` here is the total Laplacian on all regular paths; it is applied
    to each basis vector through boundary and coboundary chains, so no
    ``Lambda``-sized matrix is formed.
    """
    gb = cx.gamma(k)
    if gb.dim == 0:
        return RationalMatrix.zeros(0, 0)
    cols = []
    for x in gb.vectors():
        y = coboundary(boundary(x), cx.n) if k > 0 else Chain.zero(k)
        z = boundary(coboundary(x, cx.n))
        acc = y + z
        cols.append([sum((acc.coeff(p) * c for p, c in zip(gb.coords, col) if c), Fraction(0))
                     for col in gb.embedding.columns()])
    et_delta_e = RationalMatrix.from_columns(cols, gb.dim)
    return gb.norm.solve(et_delta_e)


@dataclass(frozen=True)
class DualCommutationReport:
    degree: int
    passed: bool
    max_deviation: Fraction


def verify_dual_commutation(cx: ChainComplex, k: int) -> DualCommutationReport:
    """Check ``E_k D_k^{Gamma,*} == P_k D_k^T E_{k-1}`` exactly.

    The right-hand side is assembled from boundaries of the individual
    support paths of ``Gamma_k``, independently of how ``D_k^{Gamma,*}``
    was obtained.
    """
    up, lo = cx.gamma(k), cx.gamma(k - 1)
    if up.dim == 0 or lo.dim == 0:
        return DualCommutationReport(k, True, Fraction(0))
    lhs = up.embedding @ cx.Dstar(k)
    lower_vecs = lo.vectors()
    c = RationalMatrix(
        [[boundary(Chain.of(p)).dot(f) for f in lower_vecs] for p in up.coords],
        ncols=lo.dim,
    )
    rhs = projection_matrix(cx, k) @ c
    dev = (lhs - rhs).max_abs()
    return DualCommutationReport(k, dev == 0, dev)


def complex_to_json(cx: ChainComplex, emit_matrices: bool = False) -> dict:
    out = []
    for k in cx.degrees:
        gb = cx.gamma(k)
        entry = {
            "degree": k,
            "gamma_dim": gb.dim,
            "allowed": [[int(v) for v in p] for p in gb.allowed],
            "completion": [c.to_json() for c in gb.completion],
        }
        if emit_matrices:
            entry["boundary"] = cx.D(k).to_strings()
            entry["norm"] = gb.norm.to_strings()
            entry["laplacian"] = hodge_laplacian_gamma(cx, k).to_strings()
        out.append(entry)
    return {"degrees": out}
