"""Elementary paths, rational chains and the total boundary map.

A ``k``-path is a tuple of ``k + 1`` vertex indices. Boundary terms that come
out irregular (two equal neighbours) are treated as zero, which is what makes
``boundary(boundary(c)) == 0`` hold on the space of regular paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .digraph import Digraph
from .linalg import RationalMatrix

Path = tuple[int, ...]

DEFAULT_MAX_REGULAR_PATHS = 10**7


class SizeLimitError(RuntimeError):
    """Raised when a regular-path enumeration would exceed the size cap."""

    def __init__(self, n: int, k: int, count: int, cap: int):
        super().__init__(
            f"{count} regular {k}-paths on {n} vertices exceeds the cap of {cap}"
        )
        self.count = count
        self.cap = cap


def is_regular(p: Sequence[int]) -> bool:
    return all(p[i] != p[i + 1] for i in range(len(p) - 1))


def regular_count(n: int, k: int) -> int:
    if k < 0:
        return 0
    return n * (n - 1) ** k


def _face(p: Path, i: int) -> Path:
    return p[:i] + p[i + 1 :]


def boundary_terms(p: Path) -> dict[Path, int]:
    """Signed faces of a regular path; irregular faces are dropped."""
    out: dict[Path, int] = {}
    if len(p) <= 1:
        return out
    for i in range(len(p)):
        # only a removal between two equal neighbours can break regularity
        if 0 < i < len(p) - 1 and p[i - 1] == p[i + 1]:
            continue
        q = _face(p, i)
        c = out.get(q, 0) + (-1 if i % 2 else 1)
        if c:
            out[q] = c
        else:
            out.pop(q, None)
    return out


def coboundary_terms(q: Path, n: int) -> dict[Path, int]:
    """Column of the transposed boundary: all regular ``p`` with ``<dp, q> != 0``."""
    out: dict[Path, int] = {}
    m = len(q)
    for i in range(m + 1):
        left = q[i - 1] if i > 0 else None
        right = q[i] if i < m else None
        if left is not None and left == right:
            continue
        sign = -1 if i % 2 else 1
        for w in range(n):
            if w == left or w == right:
                continue
            p = q[:i] + (w,) + q[i:]
            c = out.get(p, 0) + sign
            if c:
                out[p] = c
            else:
                out.pop(p, None)
    return out


class Chain:
    """Finite rational combination of regular paths of a single degree."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Path, object] | Iterable = ()):
        self.degree = degree
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Path, Fraction] = {}
        for p, c in items:
            p = tuple(int(v) for v in p)
            if len(p) != degree + 1:
                raise ValueError(f"path {p} does not have degree {degree}")
            if not is_regular(p):
                raise ValueError(f"path {p} is not regular")
            acc[p] = acc.get(p, Fraction(0)) + Fraction(c)
        self._terms = {p: c for p, c in sorted(acc.items()) if c}

    @classmethod
    def of(cls, path: Sequence[int], coeff=1) -> "Chain":
        return cls(len(path) - 1, {tuple(path): coeff})

    @classmethod
    def zero(cls, degree: int) -> "Chain":
        return cls(degree)

    @property
    def terms(self) -> dict[Path, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, p: Path) -> Fraction:
        return self._terms.get(tuple(p), Fraction(0))

    def support(self) -> list[Path]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, tuple(self._terms.items())))

    def _check(self, other: "Chain"):
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError("cannot combine chains of different degree")

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        deg = self.degree if not self.is_zero() else other.degree
        return Chain(deg, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, s) -> "Chain":
        s = Fraction(s)
        return Chain(self.degree, {p: s * c for p, c in self._terms.items()})

    def dot(self, other: "Chain") -> Fraction:
        """Standard inner product: elementary paths are orthonormal."""
        a, b = (self, other) if len(self) <= len(other) else (other, self)
        return sum((c * b._terms.get(p, 0) for p, c in a._terms.items()), Fraction(0))

    def __repr__(self) -> str:
        if not self._terms:
            return f"Chain({self.degree}, 0)"
        body = " ".join(
            f"{'+' if c > 0 else '-'}{'' if abs(c) == 1 else abs(c)}{''.join(map(str, p))}"
            for p, c in self._terms.items()
        )
        return f"Chain({self.degree}, {body})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"path": list(p), "coeff": str(c)} for p, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Chain":
        return cls(
            int(data["degree"]),
            [(tuple(t["path"]), Fraction(t["coeff"])) for t in data["terms"]],
        )


def boundary(c: Chain) -> Chain:
    """Total boundary of a chain; the boundary of a 0-chain is the zero chain of degree -1."""
    if c.degree <= 0:
        return Chain.zero(-1)
    acc: dict[Path, Fraction] = {}
    for p, coeff in c.items():
        for q, s in boundary_terms(p).items():
            acc[q] = acc.get(q, Fraction(0)) + s * coeff
    return Chain(c.degree - 1, acc)


def coboundary(c: Chain, n: int) -> Chain:
    """Transpose of the total boundary applied to ``c``, over ``n`` vertices."""
    acc: dict[Path, Fraction] = {}
    for q, coeff in c.items():
        for p, s in coboundary_terms(q, n).items():
            acc[p] = acc.get(p, Fraction(0)) + s * coeff
    return Chain(c.degree + 1, acc)


@dataclass(frozen=True)
class PathBasis:
    """Ordered, duplicate-free list of ``k``-paths with a reverse index."""

    degree: int
    paths: tuple[Path, ...]
    index: dict[Path, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))
        idx = {p: i for i, p in enumerate(self.paths)}
        if len(idx) != len(self.paths):
            raise ValueError("duplicate paths in basis")
        object.__setattr__(self, "index", idx)

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.index

    def __getitem__(self, i: int) -> Path:
        return self.paths[i]

    def coordinates(self, c: Chain) -> tuple[Fraction, ...]:
        """Coefficient vector of ``c``; raises if ``c`` leaves the basis span."""
        v = [Fraction(0)] * len(self.paths)
        for p, coeff in c.items():
            try:
                v[self.index[p]] = coeff
            except KeyError:
                raise ValueError(f"path {p} is not in the basis") from None
        return tuple(v)

    def chain(self, coords: Sequence) -> Chain:
        return Chain(self.degree, {p: c for p, c in zip(self.paths, coords) if c})


def _check_cap(n: int, k: int, cap: int | None):
    count = regular_count(n, k)
    if cap is not None and count > cap:
        raise SizeLimitError(n, k, count, cap)


def enumerate_regular(n: int, k: int, cap: int | None = DEFAULT_MAX_REGULAR_PATHS) -> PathBasis:
    """All ``n (n-1)^k`` regular ``k``-paths in lexicographic order."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    _check_cap(n, k, cap)
    out: list[Path] = [(v,) for v in range(n)]
    for _ in range(k):
        out = [p + (w,) for p in out for w in range(n) if w != p[-1]]
    return PathBasis(k, out)


def enumerate_allowed(g: Digraph, k: int) -> PathBasis:
    """Directed walks with ``k`` edges, lexicographic in vertex indices."""
    if k < 0:
        return PathBasis(k, ())
    out: list[Path] = [(v,) for v in range(g.n)]
    for _ in range(k):
        out = [p + (w,) for p in out for w in g.successors[p[-1]]]
    return PathBasis(k, out)


def boundary_matrix(rows: PathBasis, cols: PathBasis) -> RationalMatrix:
    """Matrix of the total boundary from ``span(cols)`` to ``span(rows)``.

    Faces landing outside ``rows`` raise ``ValueError``.
    """
    m = [[0] * len(cols) for _ in range(len(rows))]
    for j, p in enumerate(cols):
        for q, s in boundary_terms(p).items():
            try:
                m[rows.index[q]][j] = s
            except KeyError:
                raise ValueError(f"face {q} of {p} is outside the row basis") from None
    return RationalMatrix(m, ncols=len(cols))


def boundary_matrix_total(
    n: int, k: int, cap: int | None = DEFAULT_MAX_REGULAR_PATHS
) -> RationalMatrix:
    """``D_k``: the boundary ``Lambda_k -> Lambda_{k-1}`` over regular-path bases."""
    cols = enumerate_regular(n, k, cap)
    if k == 0:
        return RationalMatrix.zeros(0, len(cols))
    rows = enumerate_regular(n, k - 1, cap)
    return boundary_matrix(rows, cols)
