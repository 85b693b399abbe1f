"""Certificate-level checkers for reduced b-function data.

The central object is the filtered nilpotent module (FNM): a finite
dimensional rational vector space M with a nilpotent operator N and an
exhaustive increasing filtration G preserved by N, G_j = 0 for j < 0.  The
checkers answer, entirely by exact subspace arithmetic:

* the dimensions of the graded pieces Gr^G_j M and Gr^G_j (M / NM), the
  induced nilpotency order on each graded piece, and the global nilpotency
  order of N;
* strict compatibility of N with G (N(M) & G_j = N(G_j) for all j);
* whether a nonzero graded piece survives in the N-coinvariants (the
  positive / negative verdict for the generated-module question), with the
  maximal-multiplicity shortcut reported alongside;
* the Jordan types of N on M and of the induced operator on the direct sum
  of graded pieces, whose disagreement is exactly failure of strictness of
  some power of N.

A reduced b-function is stored through the positive numbers alpha with
btilde(-alpha) = 0; for a weighted homogeneous germ these are the distinct
spectral values, each simple.  The spectral matching estimate is solved as
an exact min-cost bipartite assignment.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidFNMError, NotARootError, PreconditionError
from .linalg import (
    Vec,
    echelon_basis,
    mat_pow,
    mat_vec,
    rank,
    subspace_contains,
    subspace_intersection,
    subspace_sum,
)
from .matching import min_cost_perfect_matching
from .ratio import rat_from_str, rat_to_str
from .spectrum import Spectrum

POSITIVE = "POSITIVE"
NEGATIVE = "NEGATIVE"


# ---------------------------------------------------------------------------
# reduced b-function data


@dataclass(frozen=True)
class BPoly:
    """Roots of the reduced b-function, stored as positive numbers alpha."""

    roots: tuple[tuple[Fraction, int], ...]  # (alpha, multiplicity), sorted
    nvars: int

    def __post_init__(self):
        rts = tuple(sorted((Fraction(a), int(m)) for a, m in self.roots))
        object.__setattr__(self, "roots", rts)
        for a, m in rts:
            if not (0 < a < self.nvars):
                raise ValueError(f"root {a} outside (0, {self.nvars})")
            if m < 1:
                raise ValueError("multiplicities must be positive")


def btilde_wh(s: Spectrum) -> BPoly:
    """Reduced b-function of a weighted homogeneous germ from its spectrum.

    The action being semisimple, the minimal polynomial has each distinct
    spectral value as a simple root.
    """
    distinct = sorted(set(s.values))
    return BPoly(tuple((a, 1) for a in distinct), s.nvars)


# ---------------------------------------------------------------------------
# spectral matching estimates


@dataclass(frozen=True)
class AnnotatedSpectrum:
    """Spectrum with one non-negative integer annotation per element."""

    values: Spectrum
    r_annotations: tuple[int, ...] = ()

    def __post_init__(self):
        r = self.r_annotations or (0,) * len(self.values)
        r = tuple(int(x) for x in r)
        if len(r) != len(self.values):
            raise ValueError("need one annotation per spectral value")
        if any(x < 0 for x in r):
            raise ValueError("annotations must be non-negative")
        object.__setattr__(self, "r_annotations", r)


def delta_matching(a: AnnotatedSpectrum, b) -> tuple[int, ...] | None:
    """Permutation sigma with alpha_k - r_k - beta_sigma(k) a non-negative
    integer for every k, or None.

    ``b`` is a multiset of rationals (any iterable), used in sorted order.
    Among admissible matchings the one minimizing the total defect is
    returned (exact integer min-cost assignment), making output canonical.
    """
    alphas = a.values.values
    betas = tuple(sorted(Fraction(x) for x in b))
    if len(alphas) != len(betas):
        raise PreconditionError("spectra must have equal cardinality")
    n = len(alphas)
    if n == 0:
        return ()
    cost: list[list[int | None]] = []
    for k in range(n):
        row: list[int | None] = []
        target = alphas[k] - a.r_annotations[k]
        for l in range(n):
            d = target - betas[l]
            row.append(int(d) if d.denominator == 1 and d >= 0 else None)
        cost.append(row)
    res = min_cost_perfect_matching(cost)
    if res is None:
        return None
    sigma, _ = res
    for k, l in enumerate(sigma):  # re-verify the defect constraints post hoc
        d = alphas[k] - a.r_annotations[k] - betas[l]
        assert d.denominator == 1 and d >= 0
    return tuple(sigma)


# ---------------------------------------------------------------------------
# filtered nilpotent modules


@dataclass(frozen=True)
class FilteredNilpotentModule:
    """(M, N, G): nilpotent N on Q^dim with an N-stable filtration G."""

    dim: int
    N: tuple[tuple[Fraction, ...], ...]
    # filtration jumps: (level, spanning vectors); G_j = span of levels <= j
    G: tuple[tuple[int, tuple[Vec, ...]], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidFNMError("dim must be positive")
        N = tuple(tuple(Fraction(x) for x in row) for row in self.N)
        if len(N) != self.dim or any(len(r) != self.dim for r in N):
            raise InvalidFNMError("N must be dim x dim")
        G = tuple(
            (int(lvl), tuple(tuple(Fraction(x) for x in v) for v in vecs))
            for lvl, vecs in self.G
        )
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "G", tuple(sorted(G)))
        self._validate()

    def _validate(self):
        if any(len(v) != self.dim for _, vecs in self.G for v in vecs):
            raise InvalidFNMError("spanning vectors must have length dim")
        if not self.G:
            raise InvalidFNMError("filtration must have at least one level")
        if any(lvl < 0 for lvl, _ in self.G):
            raise InvalidFNMError("filtration levels must be >= 0 (G_j = 0 below)")
        levels = [lvl for lvl, _ in self.G]
        if len(set(levels)) != len(levels):
            raise InvalidFNMError("duplicate filtration level")
        if rank([row for row in mat_pow(self.N, self.dim)]) != 0:
            raise InvalidFNMError("N is not nilpotent")
        top = self.level_basis(self.max_level())
        if len(top) != self.dim:
            raise InvalidFNMError("filtration is not exhaustive")
        for lvl, _ in self.G:
            basis = self.level_basis(lvl)
            image = [mat_vec(self.N, v) for v in basis]
            if not subspace_contains(basis, echelon_basis(image)):
                raise InvalidFNMError(f"N does not preserve G_{lvl}")

    def max_level(self) -> int:
        return max(lvl for lvl, _ in self.G)

    def level_basis(self, j: int) -> list[Vec]:
        """Canonical basis of G_j (empty for j < 0)."""
        vecs = [v for lvl, spans in self.G if lvl <= j for v in spans]
        return echelon_basis(vecs)

    def full_basis(self) -> list[Vec]:
        return self.level_basis(self.max_level())


def _image(N, basis: list[Vec]) -> list[Vec]:
    return echelon_basis([mat_vec(N, v) for v in basis])


def _npower_image(M: FilteredNilpotentModule, k: int, basis: list[Vec]) -> list[Vec]:
    Nk = mat_pow(M.N, k)
    return echelon_basis([mat_vec(Nk, v) for v in basis])


def nilpotency_order(M: FilteredNilpotentModule) -> int:
    """min { k : N^k = 0 } on the whole module."""
    k = 0
    while rank(mat_pow(M.N, k)) > 0:
        k += 1
    return k


@dataclass(frozen=True)
class LevelReport:
    level: int
    dim_g: int
    dim_gr: int
    dim_gr_coinvariants: int
    nilpotency_order: int  # induced N on Gr^G_level; 0 on a zero piece


@dataclass(frozen=True)
class FNMReport:
    dim: int
    m_tilde: int
    levels: tuple[LevelReport, ...]
    jordan_ambient: tuple[int, ...]
    jordan_graded: tuple[int, ...]

    @property
    def jordan_mismatch(self) -> bool:
        return self.jordan_ambient != self.jordan_graded


def _jordan_from_ranks(ranks: list[int]) -> tuple[int, ...]:
    """Partition of Jordan block sizes from ranks of the powers N^0, N^1, ..."""
    blocks = []
    kmax = len(ranks) - 1
    for k in range(1, kmax + 1):
        r_prev = ranks[k - 1]
        r_k = ranks[k]
        r_next = ranks[k + 1] if k + 1 < len(ranks) else 0
        count = r_prev - 2 * r_k + r_next
        blocks.extend([k] * count)
    return tuple(sorted(blocks, reverse=True))


def jordan_types(M: FilteredNilpotentModule) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Jordan types of N on M and of the induced maps on the graded pieces."""
    m = nilpotency_order(M)
    ranks = [rank(mat_pow(M.N, k)) for k in range(m + 1)]
    ambient = _jordan_from_ranks(ranks)
    graded: list[int] = []
    prev: list[Vec] = []
    for lvl, _ in M.G:
        basis = M.level_basis(lvl)
        below = prev
        dim_below = len(below)
        piece_ranks = []
        k = 0
        while True:
            img = _npower_image(M, k, basis)
            r = len(subspace_sum(img, below)) - dim_below
            piece_ranks.append(r)
            if r == 0:
                break
            k += 1
        graded.extend(_jordan_from_ranks(piece_ranks))
        prev = basis
    return ambient, tuple(sorted(graded, reverse=True))


def fnm_report(M: FilteredNilpotentModule) -> FNMReport:
    """Dimension, coinvariant, and nilpotency data of every graded piece."""
    n_image = _image(M.N, M.full_basis())
    levels = []
    prev_dim = 0
    prev_plus_im = len(n_image)
    prev_basis: list[Vec] = []
    for lvl, _ in M.G:
        basis = M.level_basis(lvl)
        dim_g = len(basis)
        dim_gr = dim_g - prev_dim
        plus_im = len(subspace_sum(basis, n_image))
        dim_gr_coinv = plus_im - prev_plus_im
        # induced nilpotency order on Gr_lvl: least k with N^k G_lvl inside G_<lvl
        k = 0
        while not subspace_contains(prev_basis, _npower_image(M, k, basis)):
            k += 1
        levels.append(LevelReport(lvl, dim_g, dim_gr, dim_gr_coinv, k))
        prev_dim = dim_g
        prev_plus_im = plus_im
        prev_basis = basis
    assert sum(l.dim_gr for l in levels) == M.dim  # filtration telescoping
    ambient, graded = jordan_types(M)
    return FNMReport(M.dim, nilpotency_order(M), tuple(levels), ambient, graded)


def strictness_check(M: FilteredNilpotentModule) -> bool:
    """True iff N(M) & G_j = N(G_j) for every level j."""
    return power_strictness(M, 1)


def power_strictness(M: FilteredNilpotentModule, k: int) -> bool:
    """Strict compatibility of N^k with the filtration."""
    full_image = _npower_image(M, k, M.full_basis())
    for lvl, _ in M.G:
        basis = M.level_basis(lvl)
        lhs = subspace_intersection(full_image, basis)
        rhs = _npower_image(M, k, basis)
        if len(lhs) != len(rhs):
            return False
    return True


@dataclass(frozen=True)
class Question1Result:
    answer: str  # POSITIVE or NEGATIVE
    via_max_multiplicity: bool  # the maximal-multiplicity shortcut applied


def question1_verdict(M: FilteredNilpotentModule, j: int) -> Question1Result:
    """Does the graded piece at level j survive in the N-coinvariants?

    Raises NotARootError when Gr^G_j M = 0 (then there is nothing to ask).
    The shortcut flag records when the induced nilpotency order at level j
    equals the global one, which forces a positive answer.
    """
    report = fnm_report(M)
    level = next((l for l in report.levels if l.level == j), None)
    if level is None or level.dim_gr == 0:
        raise NotARootError(f"graded piece at level {j} vanishes")
    answer = POSITIVE if level.dim_gr_coinvariants > 0 else NEGATIVE
    shortcut = level.nilpotency_order == report.m_tilde
    if shortcut:
        assert answer == POSITIVE, "maximal multiplicity must force POSITIVE"
    return Question1Result(answer, shortcut)


# ---------------------------------------------------------------------------
# JSON interchange


def fnm_to_json(M: FilteredNilpotentModule) -> str:
    obj = {
        "dim": M.dim,
        "N": [rat_to_str(x) for row in M.N for x in row],
        "G": [
            {"level": lvl, "spanning_vectors": [[rat_to_str(x) for x in v] for v in vecs]}
            for lvl, vecs in M.G
        ],
    }
    return json.dumps(obj, indent=2)


def fnm_from_json(text: str) -> FilteredNilpotentModule:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidFNMError(f"not valid JSON: {e}") from e
    try:
        dim = int(obj["dim"])
        flat = [rat_from_str(s) for s in obj["N"]]
        if len(flat) != dim * dim:
            raise InvalidFNMError("N must have dim*dim entries (row-major)")
        N = tuple(tuple(flat[i * dim : (i + 1) * dim]) for i in range(dim))
        G = tuple(
            (
                int(entry["level"]),
                tuple(tuple(rat_from_str(x) for x in v) for v in entry["spanning_vectors"]),
            )
            for entry in obj["G"]
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidFNMError(f"malformed FNM object: {e}") from e
    return FilteredNilpotentModule(dim, N, G)
