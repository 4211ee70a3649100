"""Classical simulation of the phase-estimation Betti-number estimator.

Paths are encoded as ``n`` registers of ``bits`` qubits each: the register of
the vertex at position ``a`` of the path holds ``a + 1``; registers of
vertices not on the path hold 0. Phase estimation is simulated at the level
of its output distribution: eigendecomposition of the sampled Hamiltonian,
overlap of each eigenvector with the input state, then i.i.d. categorical
draws from a seeded generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .chain import ChainComplex, GammaBasis
from .digraph import max_allowed_path_length
from .paths import (
    DEFAULT_MAX_REGULAR_PATHS,
    Path,
    PathBasis,
    SizeLimitError,
    boundary,
    boundary_terms,
    coboundary,
    enumerate_regular,
    is_regular,
)

ZERO_TOL = 1e-8
MAX_DENSE = 8000


class EncodingError(ValueError):
    """A path or bitstring outside the register code."""


class DegenerateInputError(ValueError):
    """``Gamma_k`` is zero-dimensional, so there is nothing to sample; ``beta_k = 0``."""

    betti = 0


# -- encoding ---------------------------------------------------------------


def register_width(d: int) -> int:
    """Bits needed to hold order values ``0..d+1`` (paths with up to ``d`` edges)."""
    return max(1, (d + 1).bit_length())


@dataclass(frozen=True)
class QubitEncoding:
    n: int
    d: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 1 or self.d < 0:
            raise ValueError("need n >= 1 and d >= 0")
        if self.bits == 0:
            object.__setattr__(self, "bits", register_width(self.d))
        if (1 << self.bits) - 1 < self.d + 1:
            raise ValueError(f"{self.bits} bits cannot hold order values up to {self.d + 1}")

    @classmethod
    def for_complex(cls, cx: ChainComplex) -> "QubitEncoding":
        return cls(cx.n, max_allowed_path_length(cx.digraph))

    @property
    def total_qubits(self) -> int:
        return self.n * self.bits

    def registers(self, p: Sequence[int]) -> tuple[int, ...]:
        p = tuple(p)
        if not p:
            raise EncodingError("empty path")
        if len(p) - 1 > self.d:
            raise EncodingError(f"path of length {len(p) - 1} exceeds d = {self.d}")
        if not is_regular(p):
            raise EncodingError(f"path {p} is not regular")
        if len(set(p)) != len(p):
            raise EncodingError(f"path {p} repeats a vertex; one register per vertex cannot hold it")
        if any(not 0 <= v < self.n for v in p):
            raise EncodingError(f"path {p} has a vertex outside 0..{self.n - 1}")
        regs = [0] * self.n
        for a, v in enumerate(p):
            regs[v] = a + 1
        return tuple(regs)

    def format_registers(self, regs: Sequence[int]) -> list[str]:
        return [format(r, f"0{self.bits}b") for r in regs]

    def encode(self, p: Sequence[int]) -> str:
        """Concatenated bitstring, registers in vertex order, MSB first in each."""
        return "".join(self.format_registers(self.registers(p)))

    def split(self, bits: str | Sequence[int]) -> tuple[int, ...]:
        if isinstance(bits, str):
            s = "".join(bits.split())
            if len(s) != self.total_qubits or set(s) - {"0", "1"}:
                raise EncodingError(f"expected {self.total_qubits} binary digits")
            return tuple(int(s[i : i + self.bits], 2) for i in range(0, len(s), self.bits))
        regs = tuple(int(r) for r in bits)
        if len(regs) != self.n or any(not 0 <= r < (1 << self.bits) for r in regs):
            raise EncodingError("register tuple does not fit the encoding")
        return regs

    def decode(self, bits: str | Sequence[int]) -> Path:
        regs = self.split(bits)
        used = sorted((r, v) for v, r in enumerate(regs) if r)
        if not used:
            raise EncodingError("bitstring encodes no vertex")
        values = [r for r, _ in used]
        if values != list(range(1, len(values) + 1)):
            raise EncodingError(f"order values {values} are not 1..{len(values)}")
        return tuple(v for _, v in used)


def encode_path(enc: QubitEncoding, p: Sequence[int]) -> str:
    return enc.encode(p)


def decode_path(enc: QubitEncoding, bits: str | Sequence[int]) -> Path:
    return enc.decode(bits)


def encoded_boundary_action(enc: QubitEncoding, p: Sequence[int]) -> list[tuple[int, str]]:
    """Signed output bitstrings of the boundary, computed on registers only.

    Term ``i`` clears the register holding order value ``i + 1`` and
    decrements every register holding a larger value.
    """
    regs = enc.registers(p)
    k = len(tuple(p)) - 1
    if k < 1:
        return []
    out = []
    for i in range(k + 1):
        removed = i + 1
        new = [0 if r == removed else (r - 1 if r > removed else r) for r in regs]
        out.append((-1 if i % 2 else 1, "".join(enc.format_registers(new))))
    return out


# -- Dirac operator ---------------------------------------------------------


@dataclass(frozen=True)
class DiracOperator:
    """``B = d + d^T`` on the direct sum of ``Lambda_0 .. Lambda_d`` (integer entries)."""

    n: int
    d: int
    blocks: tuple[PathBasis, ...]
    matrix: np.ndarray

    @property
    def offsets(self) -> list[int]:
        out = [0]
        for b in self.blocks:
            out.append(out[-1] + len(b))
        return out

    def block(self, m: np.ndarray, i: int, j: int) -> np.ndarray:
        o = self.offsets
        return m[o[i] : o[i + 1], o[j] : o[j + 1]]

    def column_sparsity(self) -> int:
        return int((self.matrix != 0).sum(axis=0).max(initial=0))


def dirac_operator(n: int, d: int, cap: int | None = DEFAULT_MAX_REGULAR_PATHS) -> DiracOperator:
    """Block-tridiagonal ``B``. Block ``k`` of ``B @ B`` is ``Delta_k`` for ``k < d``;
    the top block lacks the upward term and equals ``D_d^T D_d``."""
    blocks = tuple(enumerate_regular(n, k, cap) for k in range(d + 1))
    total = sum(len(b) for b in blocks)
    if cap is not None and total > cap:
        raise SizeLimitError(n, d, total, cap)
    if total > MAX_DENSE:
        raise SizeLimitError(n, d, total, MAX_DENSE)
    offs = [0]
    for b in blocks:
        offs.append(offs[-1] + len(b))
    m = np.zeros((total, total), dtype=np.int64)
    for k in range(1, d + 1):
        lower = blocks[k - 1]
        for j, p in enumerate(blocks[k]):
            for q, s in boundary_terms(p).items():
                r, c = offs[k - 1] + lower.index[q], offs[k] + j
                m[r, c] = s
                m[c, r] = s
    return DiracOperator(n, d, blocks, m)


# -- phase estimation -------------------------------------------------------


@dataclass(frozen=True)
class PhaseEstimationConfig:
    degree: int
    shots: int = 10_000
    phase_bits: int | None = None
    seed: int = 0
    rescale: bool = True
    hamiltonian: str = "dirac"

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError("shots must be >= 1")
        if self.phase_bits is not None and self.phase_bits < 1:
            raise ValueError("phase_bits must be >= 1")
        if self.hamiltonian not in ("dirac", "laplacian"):
            raise ValueError("hamiltonian must be 'dirac' or 'laplacian'")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SpectralLine:
    value: float
    prob: float
    multiplicity: int
    is_zero: bool
    estimate: float


@dataclass
class EstimateReport:
    degree: int
    shots: int
    seed: int
    phase_bits: int | None
    hamiltonian: str
    gamma_dim: int
    regular_dim: int
    lambda_max: float
    spectrum: list[SpectralLine]
    zero_mass: float
    kernel_dim: int
    samples: np.ndarray = field(repr=False)
    zero_count: int = 0
    zeta: Fraction = Fraction(0)
    qubits: int = 0

    @property
    def c_hat(self) -> float:
        return self.zero_count / self.shots

    @property
    def betti_hat(self) -> int:
        return math.floor(self.c_hat * self.gamma_dim + 0.5)

    @property
    def expected_betti(self) -> float:
        return self.zero_mass * self.gamma_dim

    @property
    def lambda_ratio(self) -> float | None:
        nonzero = [s.value for s in self.spectrum if not s.is_zero and s.prob > 0]
        if not nonzero or self.lambda_max == 0:
            return None
        return min(nonzero) / self.lambda_max

    def to_json(self) -> dict:
        return {
            "k": self.degree,
            "shots": self.shots,
            "seed": self.seed,
            "phase_bits": self.phase_bits if self.phase_bits is not None else "exact",
            "hamiltonian": self.hamiltonian,
            "gamma_dim": self.gamma_dim,
            "spectrum": [
                {"lambda": _clean(s.value), "prob": _clean(s.prob), "multiplicity": s.multiplicity}
                for s in self.spectrum
            ],
            "zero_mass": _clean(self.zero_mass),
            "c_hat": self.c_hat,
            "betti_hat": self.betti_hat,
            "zeta": float(self.zeta),
            "qubits": self.qubits,
        }


def _clean(x: float) -> float:
    y = float(f"{x:.12g}")
    return 0.0 if y == 0 else y


def _float_embedding(gb: GammaBasis, reg: PathBasis) -> np.ndarray:
    e = np.zeros((len(reg), gb.dim))
    for j, v in enumerate(gb.vectors()):
        for p, c in v.items():
            e[reg.index[p], j] = float(c)
    return e


def _columns(chains, reg: PathBasis) -> np.ndarray:
    out = np.zeros((len(reg), len(chains)))
    for j, c in enumerate(chains):
        for p, coeff in c.items():
            out[reg.index[p], j] = float(coeff)
    return out


def _projector(e: np.ndarray, norm: np.ndarray) -> np.ndarray:
    if e.shape[1] == 0:
        return np.zeros((e.shape[0], e.shape[0]))
    return e @ np.linalg.solve(norm, e.T)


def total_laplacian_float(n: int, k: int, cap: int | None = DEFAULT_MAX_REGULAR_PATHS) -> np.ndarray:
    """``Delta_k`` over all regular ``k``-paths, as a dense float array."""
    reg = enumerate_regular(n, k, cap)
    lam = np.zeros((len(reg), len(reg)))
    if k > 0:
        lower = enumerate_regular(n, k - 1, cap)
        dk = np.zeros((len(lower), len(reg)))
        for j, p in enumerate(reg):
            for q, s in boundary_terms(p).items():
                dk[lower.index[q], j] = s
        lam += dk.T @ dk
    # D_{k+1} D_{k+1}^T one column of D_{k+1} at a time
    for p in enumerate_regular(n, k + 1, cap):
        terms = boundary_terms(p)
        idx = [reg.index[q] for q in terms]
        val = np.fromiter(terms.values(), dtype=float, count=len(terms))
        lam[np.ix_(idx, idx)] += np.outer(val, val)
    return lam


def sampled_hamiltonian(
    cx: ChainComplex, k: int, kind: str = "dirac", cap: int | None = DEFAULT_MAX_REGULAR_PATHS
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(H, P_k, Delta_k)`` as dense arrays over all regular ``k``-paths.

    ``kind="dirac"``: the degree-``k`` block of ``P B P B P``, i.e.
    ``P_k (D_k^T P_{k-1} D_k + D_{k+1} P_{k+1} D_{k+1}^T) P_k``.
    ``kind="laplacian"``: ``P_k Delta_k P_k`` with the total Laplacian.
    """
    n = cx.n
    reg = enumerate_regular(n, k, cap)
    if len(reg) > MAX_DENSE:
        raise SizeLimitError(n, k, len(reg), MAX_DENSE)
    gb = cx.gamma(k)
    proj = _projector(_float_embedding(gb, reg), gb.norm.to_numpy())
    delta = total_laplacian_float(n, k, cap)
    if kind == "laplacian":
        return proj @ delta @ proj, proj, delta
    inner = np.zeros_like(delta)
    lo, up = cx.gamma(k - 1), cx.gamma(k + 1)
    if lo.dim:
        g1 = _columns([coboundary(v, n) for v in lo.vectors()], reg)
        inner += g1 @ np.linalg.solve(lo.norm.to_numpy(), g1.T)
    if up.dim:
        g2 = _columns([boundary(v) for v in up.vectors()], reg)
        inner += g2 @ np.linalg.solve(up.norm.to_numpy(), g2.T)
    h = proj @ inner @ proj
    return (h + h.T) / 2, proj, delta


def _cluster(w: np.ndarray, probs: np.ndarray, tol: float):
    groups: list[list[int]] = []
    for i in np.argsort(w, kind="stable"):
        if groups and abs(w[i] - w[groups[-1][-1]]) <= tol:
            groups[-1].append(int(i))
        else:
            groups.append([int(i)])
    return [(float(np.mean(w[g])), float(probs[g].sum()), len(g)) for g in groups]


def run_phase_estimation(
    cx: ChainComplex,
    cfg: PhaseEstimationConfig,
    cap: int | None = DEFAULT_MAX_REGULAR_PATHS,
) -> EstimateReport:
    """Sample ``cfg.shots`` phase-estimation outcomes for degree ``cfg.degree``.

    The input state is ``P_k / gamma_k``. The estimate is the zero-outcome
    frequency times ``gamma_k``.
    """
    k = cfg.degree
    if k < 0 or k > cx.top_degree or cx.gamma(k).dim == 0:
        raise DegenerateInputError(f"Gamma_{k} is zero-dimensional")
    gamma = cx.gamma(k).dim
    h, proj, delta = sampled_hamiltonian(cx, k, cfg.hamiltonian, cap)
    w, v = np.linalg.eigh(h)
    probs = np.einsum("ij,ij->j", v, proj @ v) / gamma
    probs = np.clip(probs, 0.0, None)
    lam_max = float(np.linalg.eigvalsh(delta)[-1]) if delta.size else 0.0
    scale = lam_max if cfg.rescale and lam_max > 0 else 1.0
    tol = 1e-9 * max(1.0, lam_max)
    lines = []
    for value, prob, mult in _cluster(w, probs, tol):
        # round-off from eigh, not spectral content
        value = 0.0 if abs(value) < tol else value
        prob = 0.0 if prob < 1e-12 else prob
        x = value / scale
        if cfg.phase_bits is None:
            is_zero = abs(x) < ZERO_TOL
            est = 0.0 if is_zero else value
        elif cfg.rescale:
            top = (1 << cfg.phase_bits) - 1
            b = int(round(min(max(x, 0.0), 1.0) * top))
            is_zero, est = b == 0, b / top * scale
        else:
            size = 1 << cfg.phase_bits
            b = int(round((value / (2 * math.pi)) % 1.0 * size)) % size
            is_zero, est = b == 0, b / size * 2 * math.pi
        lines.append(SpectralLine(value, prob, mult, is_zero, est))
    p = np.array([s.prob for s in lines])
    rng = np.random.default_rng(cfg.seed)
    draws = rng.choice(len(lines), size=cfg.shots, p=p / p.sum())
    zero_flags = np.array([s.is_zero for s in lines])
    estimates = np.array([s.estimate for s in lines])
    cplx = complexity_report(cx, k)
    return EstimateReport(
        degree=k,
        shots=cfg.shots,
        seed=cfg.seed,
        phase_bits=cfg.phase_bits,
        hamiltonian=cfg.hamiltonian,
        gamma_dim=gamma,
        regular_dim=h.shape[0],
        lambda_max=lam_max,
        spectrum=lines,
        zero_mass=float(sum(s.prob for s in lines if s.is_zero)),
        kernel_dim=int(sum(s.multiplicity for s in lines if abs(s.value / scale) < ZERO_TOL)),
        samples=estimates[draws],
        zero_count=int(zero_flags[draws].sum()),
        zeta=cplx.zeta,
        qubits=cplx.qubits,
    )


# -- resource accounting ----------------------------------------------------


@dataclass(frozen=True)
class ComplexityReport:
    degree: int
    gamma_dim: int
    regular_dim: int
    zeta: Fraction
    grover_steps: int
    amplitude_steps: int
    qubits: int

    def to_json(self) -> dict:
        return {
            "k": self.degree,
            "gamma_dim": self.gamma_dim,
            "regular_dim": self.regular_dim,
            "zeta": str(self.zeta),
            "grover_steps": self.grover_steps,
            "amplitude_steps": self.amplitude_steps,
            "qubits": self.qubits,
        }


def complexity_report(cx: ChainComplex, k: int) -> ComplexityReport:
    """Occupied fraction ``gamma_k / lambda_k`` and the derived step estimates."""
    n = cx.n
    gamma = cx.gamma(k).dim
    lam = n * (n - 1) ** k if k >= 0 else 0
    zeta = Fraction(gamma, lam) if lam else Fraction(0)
    if gamma:
        # smallest s with s^2 >= lam / gamma
        s = math.isqrt(lam // gamma)
        while s * s * gamma < lam:
            s += 1
        grover = s
    else:
        grover = 0
    amp = math.ceil(gamma**2 * (n * math.log2(n)) ** 2) if n > 1 else 0
    qubits = QubitEncoding.for_complex(cx).total_qubits
    return ComplexityReport(k, gamma, lam, zeta, grover, amp, qubits)
