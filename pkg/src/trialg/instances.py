"""Random test instances: triangular families hidden by a change of basis, and generic sets."""

import random

from .linalg import Matrix


def _entry(rng, field, lo=-3, hi=3):
    if field.is_prime_field:
        return rng.randrange(field.p)
    return rng.randint(lo, hi)


def random_matrix(rng, field, n, lo=-3, hi=3):
    return Matrix(field, [[_entry(rng, field, lo, hi) for _ in range(n)] for _ in range(n)])


def random_invertible(rng, field, n):
    """Product of a random unit lower and unit upper matrix, then a row permutation."""
    L = [[1 if i == j else (_entry(rng, field, -2, 2) if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[1 if i == j else (_entry(rng, field, -2, 2) if j > i else 0) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    M = Matrix(field, L) @ Matrix(field, U)
    return Matrix(field, [M.data[i] for i in perm])


def random_upper(rng, field, n, strict=False, diag_values=None):
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i or (strict and j == i):
                row.append(0)
            elif j == i and diag_values is not None:
                row.append(rng.choice(diag_values))
            else:
                row.append(_entry(rng, field))
        rows.append(row)
    return Matrix(field, rows)


def random_diagonal(rng, field, n):
    return Matrix.diag(field, [_entry(rng, field) for _ in range(n)])


def conjugate_all(Q, mats):
    Qi = Q.inverse()
    return [Q @ m @ Qi for m in mats]


FAMILIES = ("triangular", "strict", "diagonal", "full")


def random_instance(rng, field, n, family, g=None):
    """Generators from one of FAMILIES.

    ``triangular``, ``strict`` and ``diagonal`` are conjugated by a random
    invertible matrix.  ``full`` draws unconstrained matrices, sometimes with
    a pair of matrix units that alone generate all of M_n.
    """
    g = g or rng.randint(1, 3)
    if family == "triangular":
        gens = [random_upper(rng, field, n) for _ in range(g)]
    elif family == "strict":
        gens = [random_upper(rng, field, n, strict=True) for _ in range(g)]
    elif family == "diagonal":
        gens = [random_diagonal(rng, field, n) for _ in range(g)]
    elif family == "full":
        if rng.random() < 0.3:
            # cyclic shift plus E_11 generates the whole matrix algebra
            shift = Matrix(field, [[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)])
            gens = [shift, Matrix.unit(field, n, 0, 0)]
        else:
            gens = [random_matrix(rng, field, n) for _ in range(g)]
    else:
        raise ValueError(f"unknown family {family!r}")
    if family == "full":
        return gens
    return conjugate_all(random_invertible(rng, field, n), gens)


def make_rng(seed):
    return random.Random(seed)
