"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from dendrikit import examples
from dendrikit.algebras import FinAlgebra
from dendrikit.exact import (
    ZERO,
    BilinForm,
    LinMap,
    Tensor2,
    Vec,
    mat_inverse,
    mat_mul,
    transpose,
)


@pytest.fixture
def dend_pair():
    return examples.dendriform_pair()


@pytest.fixture
def perm_pair():
    return examples.perm_pair()


@pytest.fixture
def qperm_pair():
    return examples.perm_pair_quadratic()


@pytest.fixture
def dend_theta():
    return examples.dendriform_pair_coalgebra()


@pytest.fixture
def rb_dendriform():
    return examples.rota_baxter_dendriform()


def conjugate_algebra(alg: FinAlgebra, S) -> FinAlgebra:
    """Transport the products along the invertible basis change S.

    The new product is x ∘' y = S⁻¹(Sx ∘ Sy); an algebra of any kind stays
    an algebra of that kind under this change of basis.
    """
    n = alg.dim
    Sinv = mat_inverse(S)
    cubes = {}
    for nm in alg.products:
        cube = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                u = Vec(tuple(S[p][i] for p in range(n)))
                v = Vec(tuple(S[p][j] for p in range(n)))
                w = alg.multiply(nm, u, v)
                out = tuple(
                    sum((Sinv[k][p] * w.coords[p] for p in range(n)), ZERO)
                    for k in range(n)
                )
                for k in range(n):
                    cube[k][i][j] = out[k]
        cubes[nm] = cube
    return FinAlgebra(alg.kind, n, cubes)


def conjugate_tensor(r: Tensor2, S) -> Tensor2:
    """Transport a 2-tensor: r' = (S⁻¹⊗S⁻¹)(r)."""
    Sinv = mat_inverse(S)
    return Tensor2(mat_mul(mat_mul(Sinv, r.coeffs), transpose(Sinv)))


def conjugate_form(form: BilinForm, S) -> BilinForm:
    """Transport a bilinear form: ω'(x, y) = ω(Sx, Sy)."""
    return BilinForm(mat_mul(mat_mul(transpose(S), form.matrix), S))


def conjugate_operator(P: LinMap, S) -> LinMap:
    """Transport an operator V* → V: P' = S⁻¹ · P · S⁻ᵀ."""
    Sinv = mat_inverse(S)
    return LinMap(mat_mul(mat_mul(Sinv, P.matrix), transpose(Sinv)))


def int_matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)
