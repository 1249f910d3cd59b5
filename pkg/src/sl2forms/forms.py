"""Symmetric bilinear forms compatible with the sl₂ anti-involution.

The anti-involution fixes X and Y and negates H.  A module together with a
nondegenerate symmetric form Q satisfying

    Q(Xu, v) = Q(u, Xv),   Q(Yu, v) = Q(u, Yv),   Q(Hu, v) = -Q(u, Hv)

is what the rest of the package calls a *-module.  On an irreducible V_m
the compatible forms are exactly the anti-diagonal-constant ones,
Q(e_i, e_{-i}) = q for every weight i and zero otherwise: `canonical_form`
constructs that representative and `structure_of` recognizes it, so the
two directions of the classification can be certified independently.

Tensor modules inherit (Q⊗R)(a⊗b, a'⊗b') = Q(a,a')·R(b,b'), a Kronecker
pairing of Gram matrices in the lexicographic tensor basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import ExactMatrix, dot, kron, mat_vec, rank
from .modules import ModuleVector, WeightModule, irreducible
from .rationals import Scalar


@dataclass(frozen=True)
class BilinearForm:
    """A symmetric Gram matrix attached to a module's basis.

    Symmetry is enforced at construction; nondegeneracy is not, so that
    degenerate or otherwise broken forms can be fed to `is_star_form` in
    negative tests.
    """

    module: WeightModule
    gram: ExactMatrix

    def __post_init__(self) -> None:
        d = self.module.dim
        if self.gram.rows != d or self.gram.cols != d:
            raise ValueError(f"gram matrix must be {d}x{d} for {self.module.label}")
        if self.gram != self.gram.transpose:
            raise ValueError("gram matrix must be symmetric")


@dataclass(frozen=True)
class StarFormReport:
    """Compatibility of one form with the anti-involution, plus nondegeneracy."""

    label: str
    failures: tuple[str, ...]
    nondegenerate: bool

    @property
    def ok(self) -> bool:
        return not self.failures and self.nondegenerate


def canonical_form(m: int, q: Scalar) -> BilinearForm:
    """The anti-diagonal constant form Q(e_i, e_{-i}) = q on V_m.

    q must be nonzero: the form is required to be nondegenerate.
    """
    if not q:
        raise ValueError("canonical form requires q != 0 (nondegeneracy)")
    module = irreducible(m)
    d = module.dim
    grid = [[0] * d for _ in range(d)]
    for i in range(d):
        grid[i][d - 1 - i] = q
    return BilinearForm(module, ExactMatrix.from_rows(grid))


def is_star_form(module: WeightModule, form: BilinearForm) -> StarFormReport:
    """Check the three compatibility identities and nondegeneracy, exactly.

    In Gram-matrix terms the identities read Gᵀ·gram = gram·G for G = actX,
    actY and Gᵀ·gram = -gram·G for actH.
    """
    if form.module is not module and form.module != module:
        raise ValueError(
            f"form lives on {form.module.label}, not {module.label}"
        )
    gram = form.gram
    failures = []
    if module.actX.transpose @ gram != gram @ module.actX:
        failures.append("Q(Xu,v)=Q(u,Xv)")
    if module.actY.transpose @ gram != gram @ module.actY:
        failures.append("Q(Yu,v)=Q(u,Yv)")
    if module.actH.transpose @ gram != (gram @ module.actH).scaled(-1):
        failures.append("Q(Hu,v)=-Q(u,Hv)")
    nondegenerate = rank(gram) == module.dim
    return StarFormReport(
        label=module.label, failures=tuple(failures), nondegenerate=nondegenerate
    )


def structure_of(form: BilinearForm) -> tuple[bool, Optional[Scalar]]:
    """Recognize the anti-diagonal-constant shape of a Gram matrix.

    Returns (True, q) when every entry off the anti-diagonal vanishes and
    all anti-diagonal entries equal the same constant q; (False, None)
    otherwise.
    """
    gram = form.gram
    d = gram.rows
    if d == 0:
        return True, None
    q = gram.entries[0][d - 1]
    for i, row in enumerate(gram.entries):
        for j, v in enumerate(row):
            if j == d - 1 - i:
                if v != q:
                    return False, None
            elif v:
                return False, None
    return True, q


def tensor_form(
    left: BilinearForm, right: BilinearForm, module: WeightModule
) -> BilinearForm:
    """The induced form Q⊗R on a tensor module built from left's and right's.

    The target module must have the lexicographic tensor basis: dimension
    the product of the factor dimensions, weights the lexicographic sums.
    """
    a, b = left.module, right.module
    if module.dim != a.dim * b.dim:
        raise ValueError(
            f"{module.label} has dim {module.dim}, expected {a.dim * b.dim} "
            f"for {a.label}⊗{b.label}"
        )
    expected = tuple(wa + wb for wa in a.weights for wb in b.weights)
    if module.weights != expected:
        raise ValueError(
            f"basis order of {module.label} does not match the lexicographic "
            f"tensor basis of {a.label}⊗{b.label}"
        )
    return BilinearForm(module, kron(left.gram, right.gram))


def evaluate(form: BilinearForm, u: ModuleVector, v: ModuleVector) -> Fraction:
    """uᵀ·gram·v, exactly."""
    for w in (u, v):
        if w.module is not form.module and w.module != form.module:
            raise ValueError(
                f"vector lives in {w.module.label}, not {form.module.label}"
            )
    return Fraction(dot(u.coords, mat_vec(form.gram, v.coords)))
