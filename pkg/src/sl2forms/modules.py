"""Finite-dimensional sl₂(ℝ) weight modules over exact rationals.

Everything here is a module with a weight-labelled basis and explicit
matrices for the generators X, Y, H satisfying

    [X, Y] = H,   [H, X] = 2X,   [H, Y] = -2Y.

The irreducible module V_m has basis e_{-m}, e_{-m+2}, ..., e_m ordered by
increasing weight, with

    H e_w = w e_w,
    Y e_{m-2i} = e_{m-2(i+1)}        (and Y kills e_{-m}),
    X e_{m-2i} = i(m-i+1) e_{m-2(i-1)}  (and X kills e_m).

The H eigenvalue equals the basis subscript; this is forced by [X, Y] = H
together with the X and Y lines, and `check_relations` enforces it on every
constructed module.

Tensor products carry the Leibniz action g(a⊗b) = ga⊗b + a⊗gb in the
lexicographic basis (left factor outermost).  Decomposition into
irreducibles is computed by weight-multiplicity differencing, so the
Clebsch-Gordan pattern V_|m-n| ⊕ V_|m-n|+2 ⊕ ... ⊕ V_{m+n} comes out as a
verified result rather than an assumption.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence

from .linalg import ExactMatrix, commutator, identity, kron, mat_vec
from .rationals import Scalar, format_rational

GENERATORS = ("X", "Y", "H")


@dataclass(frozen=True)
class WeightModule:
    """A basis-explicit module: weights plus exact matrices for X, Y, H.

    Construction validates shapes only.  The bracket relations are the job
    of `check_relations`, so deliberately corrupted modules can be built
    for negative tests.
    """

    label: str
    dim: int
    weights: tuple[int, ...]
    basis_names: tuple[str, ...]
    actX: ExactMatrix
    actY: ExactMatrix
    actH: ExactMatrix

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("module dimension must be nonnegative")
        if len(self.weights) != self.dim or len(self.basis_names) != self.dim:
            raise ValueError("weights and basis_names must have one entry per dimension")
        for g in GENERATORS:
            mat = self.generator(g)
            if mat.rows != self.dim or mat.cols != self.dim:
                raise ValueError(f"act{g} must be {self.dim}x{self.dim}")

    def generator(self, g: str) -> ExactMatrix:
        if g == "X":
            return self.actX
        if g == "Y":
            return self.actY
        if g == "H":
            return self.actH
        raise ValueError(f"unknown generator {g!r}; expected one of {GENERATORS}")


@dataclass(frozen=True)
class ModuleVector:
    """Exact coordinate vector in a module's basis."""

    module: WeightModule
    coords: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.module.dim:
            raise ValueError(
                f"vector of length {len(self.coords)} does not live in "
                f"{self.module.label} (dim {self.module.dim})"
            )

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class RelationReport:
    """Outcome of checking the three bracket identities on a module."""

    label: str
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class DecompositionReport:
    """Multiset of irreducible summands: (m_j, multiplicity) pairs, m_j ascending."""

    dim: int
    summands: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        total = sum(mult * (j + 1) for j, mult in self.summands)
        if total != self.dim:
            raise ValueError(
                f"summand dimensions add to {total}, not {self.dim}: "
                "weight multiset is not a direct sum of irreducibles"
            )


@lru_cache(maxsize=None)
def irreducible(m: int, symbol: str = "e") -> WeightModule:
    """The (m+1)-dimensional irreducible module V_m.

    Basis vectors are named ``{symbol}_{w}`` by weight w = -m, -m+2, ..., m
    in increasing order.
    """
    if m < 0:
        raise ValueError(f"irreducible module label must be nonnegative (got {m})")
    dim = m + 1
    weights = tuple(-m + 2 * j for j in range(dim))
    names = tuple(f"{symbol}_{{{w}}}" for w in weights)
    x = [[0] * dim for _ in range(dim)]
    y = [[0] * dim for _ in range(dim)]
    h = [[0] * dim for _ in range(dim)]
    for j in range(dim):
        h[j][j] = weights[j]
        if j + 1 < dim:
            # position j holds e_{m-2i} with i = m-j, so X's coefficient
            # i(m-i+1) reads (m-j)(j+1) and lands one position up.
            x[j + 1][j] = (m - j) * (j + 1)
        if j - 1 >= 0:
            y[j - 1][j] = 1
    return WeightModule(
        label=f"V_{m}",
        dim=dim,
        weights=weights,
        basis_names=names,
        actX=ExactMatrix.from_rows(x),
        actY=ExactMatrix.from_rows(y),
        actH=ExactMatrix.from_rows(h),
    )


def check_relations(module: WeightModule) -> RelationReport:
    """Verify [X,Y] = H, [H,X] = 2X, [H,Y] = -2Y as exact matrix identities."""
    failures = []
    if commutator(module.actX, module.actY) != module.actH:
        failures.append("[X,Y]=H")
    if commutator(module.actH, module.actX) != module.actX.scaled(2):
        failures.append("[H,X]=2X")
    if commutator(module.actH, module.actY) != module.actY.scaled(-2):
        failures.append("[H,Y]=-2Y")
    return RelationReport(label=module.label, failures=tuple(failures))


def act(module: WeightModule, g: str, v: ModuleVector) -> ModuleVector:
    """Apply a generator (tag "X", "Y" or "H") to a vector of this module."""
    if v.module is not module and v.module != module:
        raise ValueError(
            f"vector lives in {v.module.label}, not {module.label}"
        )
    return ModuleVector(module, mat_vec(module.generator(g), v.coords))


def tensor_product(a: WeightModule, b: WeightModule) -> WeightModule:
    """A⊗B with the Leibniz action, basis lexicographic (left factor outer)."""
    dim = a.dim * b.dim
    weights = tuple(wa + wb for wa in a.weights for wb in b.weights)
    names = tuple(f"{na}⊗{nb}" for na in a.basis_names for nb in b.basis_names)

    def leibniz(ga: ExactMatrix, gb: ExactMatrix) -> ExactMatrix:
        return kron(ga, identity(b.dim)) + kron(identity(a.dim), gb)

    return WeightModule(
        label=f"{a.label}⊗{b.label}",
        dim=dim,
        weights=weights,
        basis_names=names,
        actX=leibniz(a.actX, b.actX),
        actY=leibniz(a.actY, b.actY),
        actH=leibniz(a.actH, b.actH),
    )


@lru_cache(maxsize=None)
def tensor_of_irreducibles(m: int, n: int) -> WeightModule:
    """V_m⊗V_n with left basis symbol e and right basis symbol ẽ."""
    return tensor_product(irreducible(m, "e"), irreducible(n, "ẽ"))


def weight_space_indices(module: WeightModule, w: int) -> tuple[int, ...]:
    """Positions (in basis order) of the basis vectors of weight w."""
    return tuple(j for j, wt in enumerate(module.weights) if wt == w)


def weight_space_basis(module: WeightModule, w: int) -> list[ModuleVector]:
    """The standard basis vectors of weight w, in basis order."""
    out = []
    for j in weight_space_indices(module, w):
        coords = [0] * module.dim
        coords[j] = 1
        out.append(ModuleVector(module, tuple(coords)))
    return out


def decompose(module: WeightModule) -> DecompositionReport:
    """Irreducible multiplicities by weight differencing.

    mult(V_j) = #(weights equal to j) - #(weights equal to j+2) for j ≥ 0,
    scanning down from the maximal weight.  A negative difference, or a
    total dimension mismatch, means the weight multiset cannot come from a
    direct sum of irreducibles and raises an error.
    """
    if module.dim == 0:
        return DecompositionReport(dim=0, summands=())
    counts = Counter(module.weights)
    top = max(module.weights)
    summands = []
    for j in range(top, -1, -2):
        mult = counts[j] - counts[j + 2]
        if mult < 0:
            raise ValueError(
                f"weight {j} has multiplicity {counts[j]} but weight {j + 2} has "
                f"{counts[j + 2]}: not a direct sum of irreducibles"
            )
        if mult:
            summands.append((j, mult))
    summands.reverse()
    return DecompositionReport(dim=module.dim, summands=tuple(summands))


def perturbed(
    module: WeightModule, g: str, row: int, col: int, delta: Scalar
) -> WeightModule:
    """Copy of the module with one generator matrix entry bumped by delta.

    Used as a corruption oracle: the result should fail check_relations
    (and downstream verifications) whenever delta breaks a bracket.
    """
    mat = module.generator(g)
    grid = [list(r) for r in mat.entries]
    grid[row][col] += delta
    bumped = ExactMatrix.from_rows(grid)
    return replace(module, **{f"act{g}": bumped, "label": f"{module.label}~corrupt"})


def format_vector(module: WeightModule, coords: Sequence[Scalar]) -> str:
    """Render a coordinate vector as a signed combination of basis names.

    Unit coefficients are suppressed: ``e_{-1}⊗ẽ_{1} - e_{1}⊗ẽ_{-1}``.
    """
    pieces = []
    for name, c in zip(module.basis_names, coords):
        if not c:
            continue
        mag = format_rational(abs(c))
        body = name if mag == "1" else f"{mag}·{name}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(pieces) if pieces else "0"
