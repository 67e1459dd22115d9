"""Gram-matrix lattices, a theta-coefficient oracle by short-vector
enumeration, and the catalog of named lattices.

The enumeration oracle is the independent check for every closed-form
expansion in the package: it counts lattice vectors of each norm by
Fincke-Pohst style bounded search.  Bounds are computed in floating
point with a guard band; acceptance of each candidate is decided by an
exact integer/rational norm computation, so counts are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, sqrt

import numpy as np

from .errors import (BoundTooLarge, NotIntegral, RankDeficient,
                     UnknownLattice)


class GramMatrix:
    """Symmetric positive-definite matrix of exact rationals."""

    __slots__ = ("entries", "n")

    def __init__(self, entries, check=True):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "n", n)
        if check and self._ldl() is None:
            raise ValueError("Gram matrix is not positive definite")

    def __setattr__(self, *_):
        raise AttributeError("GramMatrix is immutable")

    def __eq__(self, other):
        return isinstance(other, GramMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def _ldl(self):
        """Exact LDL^T decomposition; None if not positive definite."""
        n = self.n
        L = [[Fraction(0)] * n for _ in range(n)]
        d = [Fraction(0)] * n
        for j in range(n):
            s = self.entries[j][j] - sum(d[k] * L[j][k] ** 2 for k in range(j))
            if s <= 0:
                return None
            d[j] = s
            L[j][j] = Fraction(1)
            for i in range(j + 1, n):
                t = self.entries[i][j] - sum(d[k] * L[i][k] * L[j][k]
                                             for k in range(j))
                L[i][j] = t / s
        return L, d

    def determinant(self):
        ldl = self._ldl()
        if ldl is None:
            # Fall back to Bareiss-free product via LDL on a shifted copy
            # is unnecessary: positive definiteness is a construction
            # invariant, so this path never runs for valid instances.
            raise ValueError("not positive definite")
        _, d = ldl
        out = Fraction(1)
        for x in d:
            out *= x
        return out

    def is_integral(self):
        return all(x.denominator == 1 for row in self.entries for x in row)

    def is_even(self):
        """A lattice with integral Gram is even iff the diagonal is even."""
        if not self.is_integral():
            raise NotIntegral("evenness is only defined for integral Grams")
        return all(self.entries[i][i] % 2 == 0 for i in range(self.n))

    def norm_of(self, x):
        """Exact x^T G x for an integer coordinate vector."""
        acc = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.entries[i]
            acc += xi * sum(row[j] * xj for j, xj in enumerate(x) if xj)
        return acc

    # -- serialization ------------------------------------------------

    def to_json_dict(self):
        return {"n": self.n,
                "entries": [[str(x) for x in row] for row in self.entries]}

    @classmethod
    def from_json_dict(cls, d):
        return cls([[Fraction(x) for x in row] for row in d["entries"]])

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s):
        return cls.from_json_dict(json.loads(s))

    def to_text(self):
        return "\n".join(" ".join(str(x) for x in row)
                         for row in self.entries) + "\n"

    @classmethod
    def from_text(cls, text):
        rows = [[Fraction(x) for x in ln.split()]
                for ln in text.splitlines() if ln.strip()]
        return cls(rows)


def gram_from_generator(rows):
    """Exact M*M^T from rational generator rows; rows must be independent."""
    M = [[Fraction(x) for x in row] for row in rows]
    m = len(M)
    # exact rank check by Gaussian elimination on a copy
    R = [row[:] for row in M]
    rank = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if R[r][col]), None)
        if piv is None:
            continue
        R[rank], R[piv] = R[piv], R[rank]
        for r in range(rank + 1, m):
            if R[r][col]:
                f = R[r][col] / R[rank][col]
                R[r] = [a - f * b for a, b in zip(R[r], R[rank])]
        rank += 1
    if rank < m:
        raise RankDeficient("generator rows are linearly dependent")
    G = [[sum(a * b for a, b in zip(M[i], M[j])) for j in range(m)]
         for i in range(m)]
    return GramMatrix(G)


def hnf_basis(rows):
    """Square basis (row Hermite-style reduction) of the integer row span.

    `rows` is an m x n integer matrix whose rows span a full-rank
    sublattice of Z^n with m >= n.  Returns an n x n integer basis.
    """
    work = [list(map(int, r)) for r in rows]
    n = len(work[0])
    basis = []
    for col in range(n):
        live = [r for r in work if r[col]]
        if not live:
            raise RankDeficient("rows do not span full rank")
        while True:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            done = True
            for r in live[1:]:
                q = r[col] // piv[col]
                if q:
                    for i in range(col, n):
                        r[i] -= q * piv[i]
                if r[col]:
                    done = False
            live = [piv] + [r for r in live[1:] if r[col]]
            if done or len(live) == 1:
                break
        basis.append(piv)
        work = [r for r in work if r is not piv and any(r[col:])]
        for r in work:
            if r[col]:
                q = r[col] // piv[col]
                for i in range(col, n):
                    r[i] -= q * piv[i]
        work = [r for r in work if any(r)]
    return basis


DEFAULT_BUDGET = 10 ** 8


def theta_coefficients(gram: GramMatrix, max_norm, budget=DEFAULT_BUDGET):
    """Exact counts A_m of lattice vectors with norm m for m <= max_norm.

    Bounds come from a floating-point LDL decomposition with a guard
    band; every candidate inside the guard is then verified with an
    exact norm computation, so the returned counts are exact.
    """
    max_norm = Fraction(max_norm)
    if max_norm < 0:
        raise ValueError("max_norm must be non-negative")
    n = gram.n
    ldl = gram._ldl()
    if ldl is None:
        raise ValueError("Gram matrix is not positive definite")
    Lq, dq = ldl
    L = [[float(x) for x in row] for row in Lq]
    d = [float(x) for x in dq]
    C = float(max_norm) + 1e-9 * (float(max_norm) + 1.0)

    candidates = []
    x = [0] * n
    S = [[0.0] * n for _ in range(n + 1)]  # S[j][i]: center offsets at level j
    nodes = 0

    def descend(j, partial, allzero):
        nonlocal nodes
        if j < 0:
            if not allzero:
                candidates.append(x[:])
            return
        c = S[j + 1][j]
        rem = C - partial
        if rem < 0:
            return
        r = sqrt(rem / d[j])
        lo = 0 if allzero else int(-c - r) - 1
        hi = int(-c + r) + 1
        for v in range(lo, hi + 1):
            t = v + c
            contrib = d[j] * t * t
            if contrib > rem:
                continue
            nodes += 1
            if nodes > budget:
                raise BoundTooLarge("enumeration exceeded budget of %d nodes"
                                    % budget)
            x[j] = v
            row = S[j]
            prev = S[j + 1]
            for i in range(j):
                row[i] = prev[i] + L[j][i] * v
            descend(j - 1, partial + contrib, allzero and v == 0)
        x[j] = 0

    descend(n - 1, 0.0, True)

    counts: dict[Fraction, int] = {Fraction(0): 1}
    if candidates:
        if gram.is_integral():
            G = np.array([[int(x_) for x_ in row] for row in gram.entries],
                         dtype=np.int64)
            X = np.array(candidates, dtype=np.int64)
            norms = np.einsum("ij,jk,ik->i", X, G, X)
            for nv in norms:
                m = Fraction(int(nv))
                if m <= max_norm:
                    counts[m] = counts.get(m, 0) + 2
        else:
            for cand in candidates:
                m = gram.norm_of(cand)
                if m <= max_norm:
                    counts[m] = counts.get(m, 0) + 2

    if gram.is_integral():
        out = [(Fraction(m), counts.get(Fraction(m), 0))
               for m in range(int(max_norm) + 1)]
    else:
        out = sorted(counts.items())
    return out


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    gram: GramMatrix
    ell: int
    parity: str  # "even" | "odd"
    source: str  # "paper" | "derived"


def _entry(name, gram, ell, source):
    g = GramMatrix(gram) if not isinstance(gram, GramMatrix) else gram
    parity = "even" if g.is_even() else "odd"
    return CatalogEntry(name, g, ell, parity, source)


def _zn(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


_A2 = [[2, 1], [1, 2]]

_D4 = [[2, -1, 0, 0],
       [-1, 2, -1, -1],
       [0, -1, 2, 0],
       [0, -1, 0, 2]]

_E8 = [[2, -1, 0, 0, 0, 0, 0, 0],
       [-1, 2, -1, 0, 0, 0, 0, 0],
       [0, -1, 2, -1, 0, 0, 0, 0],
       [0, 0, -1, 2, -1, 0, 0, 0],
       [0, 0, 0, -1, 2, -1, 0, -1],
       [0, 0, 0, 0, -1, 2, -1, 0],
       [0, 0, 0, 0, 0, -1, 2, 0],
       [0, 0, 0, 0, -1, 0, 0, 2]]

# 8-dimensional odd 2-modular lattice built from the self-dual code of
# length 4 over F3+vF3; same lattice as codes.construction_a_gram of the
# shipped generator, in a different basis.
EXAMPLE_DIM8 = [[2, 1, 0, -1, 0, 2, -1, -2],
                [1, 2, -1, 0, 1, 0, -1, -2],
                [0, -1, 2, -1, -1, 2, 0, 2],
                [-1, 0, -1, 2, 1, -2, 1, 0],
                [0, 1, -1, 1, 3, 0, 0, 0],
                [2, 0, 2, -2, 0, 6, 0, 0],
                [-1, -1, 0, 1, 0, 0, 3, 0],
                [-2, -2, 2, 0, 0, 0, 0, 6]]


def catalog(name):
    """Named lattice lookup.  Zn is available for any n as e.g. "Z16"."""
    from . import fixtures

    if name.startswith("Z") and name[1:].isdigit():
        n = int(name[1:])
        if n < 1:
            raise UnknownLattice(name)
        return _entry(name, _zn(n), 1, "derived")
    table = {
        "A2": (_A2, 3, "derived"),
        "D4": (_D4, 2, "derived"),
        "E8": (_E8, 1, "derived"),
        "C1": ([[1]], 1, "derived"),
        "C2": ([[1, 0], [0, 2]], 2, "derived"),
        "C3": ([[1, 0], [0, 3]], 3, "derived"),
        "K12": (fixtures.K12_GRAM, 3, "derived"),
        "BW16": (fixtures.BW16_GRAM, 2, "derived"),
        "ExampleDim8": (EXAMPLE_DIM8, 2, "paper"),
    }
    if name not in table:
        raise UnknownLattice("unknown lattice %r" % name)
    gram, ell, source = table[name]
    return _entry(name, gram, ell, source)


CATALOG_NAMES = ("Zn", "A2", "D4", "E8", "C1", "C2", "C3", "K12", "BW16",
                 "ExampleDim8")
