"""Plucker coordinates, the quadratic relations cutting out G(k, N), and the
Plucker entanglement measure for multi-qubit states.

Coordinates P_I are the maximal minors of a k x N matrix, labeled by strictly
increasing k-subsets I of {1..N}.  The relation family is generated from all
increasing index pairs (I, J) with |I| = k-1, |J| = k+1; each term resolves
repeated indices to zero and out-of-order indices by permutation sign, and the
surviving polynomials are sign-canonicalized and deduplicated.

The measure reads "square root of the sum of each coordinate times its
conjugate" (an l2 norm of the coordinate vector).  A literal product over all
coordinates would vanish for almost every state, so the l2 reading is the one
implemented, scaled by 2 so the two-qubit case reproduces the concurrence.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import IndexOutOfRange, ShapeError, TooLarge, WrongShape
from .gaussrat import GR_ZERO, GaussRat, Scalar
from .poly import Monomial, MultiPoly, PluVar, evaluate
from .states import Bipartition, PureState, flatten, normalize

DEFAULT_MAX_CHOOSE = 10000


@dataclass(frozen=True)
class PlueckerSet:
    """The C(N, k) maximal minors of a k x N matrix, keyed by sorted subsets."""

    k: int
    N: int
    coords: dict[tuple[int, ...], Scalar]

    @property
    def exact(self) -> bool:
        return isinstance(next(iter(self.coords.values())), GaussRat)

    def get(self, indices) -> Scalar:
        """Coordinate for an arbitrary index list: 0 on repeats, signed on
        out-of-order indices (parity of the sorting permutation)."""
        indices = tuple(indices)
        if len(set(indices)) != len(indices):
            return GR_ZERO if self.exact else 0j
        key = tuple(sorted(indices))
        if key not in self.coords:
            raise IndexOutOfRange(f"no coordinate {indices} in G({self.k},{self.N})")
        value = self.coords[key]
        return value if _parity(indices) == 0 else -value


@dataclass(frozen=True)
class PlueckerRelation:
    """One quadric of the relation family, with the (I, J) pair it came from."""

    poly: MultiPoly
    I: tuple[int, ...]
    J: tuple[int, ...]


def _parity(indices: tuple[int, ...]) -> int:
    inv = sum(1 for a, b in itertools.combinations(indices, 2) if a > b)
    return inv % 2


def _det(rows: list[list], exact: bool):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows[0]
        d, e, f = rows[1]
        g, h, i = rows[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    work = [list(r) for r in rows]
    det = GaussRat(1) if exact else 1 + 0j
    for col in range(n):
        if exact:
            piv = next((r for r in range(col, n) if work[r][col]), None)
        else:
            piv = max(range(col, n), key=lambda r: abs(work[r][col]))
            if work[piv][col] == 0:
                piv = None
        if piv is None:
            return GaussRat(0) if exact else 0j
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        det = det * work[col][col]
        for r in range(col + 1, n):
            factor = work[r][col] / work[col][col]
            work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return det


def _coerce_matrix(mat) -> tuple[list[list[Scalar]], bool]:
    if isinstance(mat, np.ndarray):
        rows = [[complex(x) for x in row] for row in mat]
        return rows, False
    rows = [list(r) for r in mat]
    if not rows or not rows[0]:
        raise ShapeError("matrix must be nonempty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ShapeError("ragged matrix")
    flat = [x for r in rows for x in r]
    exact = all(isinstance(x, (int, Fraction, GaussRat)) for x in flat)
    if exact:
        return [[x if isinstance(x, GaussRat) else GaussRat(x) for x in r] for r in rows], True
    return [[complex(x) for x in r] for r in rows], False


def _maximal_minors(rows: list[list[Scalar]], exact: bool) -> dict[tuple[int, ...], Scalar]:
    k = len(rows)
    n = len(rows[0])
    coords = {}
    for subset in itertools.combinations(range(1, n + 1), k):
        sub = [[row[i - 1] for i in subset] for row in rows]
        coords[subset] = _det(sub, exact)
    return coords


def pluecker_coordinates(mat) -> PlueckerSet:
    """All k x k column minors of a k x N matrix (k < N); exact for exact input."""
    rows, exact = _coerce_matrix(mat)
    k, n = len(rows), len(rows[0])
    if k >= n:
        raise ShapeError(f"need k < N, got k={k}, N={n}")
    return PlueckerSet(k, n, _maximal_minors(rows, exact))


def _insert_sorted(base: tuple[int, ...], extra: int) -> tuple[tuple[int, ...], int]:
    """Sorted merge of a strictly increasing tuple with one new index, plus the
    permutation sign of moving the new index into place."""
    bigger = sum(1 for i in base if i > extra)
    merged = tuple(sorted(base + (extra,)))
    return merged, (-1) ** bigger


def pluecker_relations(k: int, N: int, max_choose: int = DEFAULT_MAX_CHOOSE) -> list[PlueckerRelation]:
    """The quadratic relation family for G(k, N).

    Each (I, J) with |I| = k-1 and |J| = k+1 contributes
    sum_t (-1)^t P_{I, j_t} P_{J \\ j_t}; zero polynomials are dropped and the
    rest deduplicated under sign.  For k = 1 the family is empty.
    """
    if k < 1 or k >= N:
        raise ShapeError(f"need 1 <= k < N, got k={k}, N={N}")
    if comb(N, k) > max_choose:
        raise TooLarge(f"C({N},{k}) = {comb(N, k)} exceeds cap {max_choose}")
    universe = range(1, N + 1)
    seen: dict[MultiPoly, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for I in itertools.combinations(universe, k - 1):
        for J in itertools.combinations(universe, k + 1):
            terms: dict[Monomial, GaussRat] = {}
            for t, jt in enumerate(J, start=1):
                if jt in I:
                    continue  # repeated index: coordinate is zero
                first, sign = _insert_sorted(I, jt)
                rest = J[:t - 1] + J[t:]
                mono = Monomial.from_pairs([(PluVar(first), 1), (PluVar(rest), 1)])
                coeff = GaussRat((-1) ** t * sign)
                acc = terms.get(mono, GR_ZERO) + coeff
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
            poly = MultiPoly(terms)
            if poly.is_zero():
                continue
            canon = poly.sign_canonical()
            seen.setdefault(canon, (I, J))
    rels = [PlueckerRelation(p, ij[0], ij[1]) for p, ij in seen.items()]
    rels.sort(key=lambda r: tuple((m.key(), (c.re, c.im)) for m, c in r.poly.sorted_terms()))
    return rels


def check_relations(ps: PlueckerSet, max_choose: int = DEFAULT_MAX_CHOOSE):
    """Max |relation(coords)| over the relation family; exact 0 for minors."""
    rels = pluecker_relations(ps.k, ps.N, max_choose)
    if not rels:
        return Fraction(0) if ps.exact else 0.0
    assignment = {PluVar(i): v for i, v in ps.coords.items()}
    if ps.exact:
        worst = Fraction(0)
        for rel in rels:
            worst = max(worst, evaluate(rel.poly, assignment).abs_sq())
        return Fraction(0) if worst == 0 else math.sqrt(float(worst))
    return max(abs(evaluate(rel.poly, assignment)) for rel in rels)


def pluecker_measure(s: PureState, pivot: int = 1) -> float:
    """2 * sqrt(sum_I |P_I|^2) of the k=2 coordinates of the pivot flattening.

    The normalized state is flattened to 2 x 2^(m-1) with rows indexed by the
    pivot qubit; for m = 2 this is the concurrence.  The default pivot is
    mode 1; the value is pivot-independent only up to the bipartition it
    selects, so the pivot stays caller-visible.
    """
    if any(d != 2 for d in s.dims):
        raise WrongShape(f"measure is defined for qubit modes only, got dims {s.dims}")
    if s.num_modes < 2:
        raise WrongShape("measure needs >= 2 modes")
    if not 1 <= pivot <= s.num_modes:
        raise IndexOutOfRange(f"pivot {pivot} out of range 1..{s.num_modes}")
    b = Bipartition((pivot,))
    if s.exact:
        f = flatten(s, b)
        n2 = s.norm_sq()
        total = Fraction(0)
        for kk, ll in itertools.combinations(range(f.cols), 2):
            d = f.entries[0][kk] * f.entries[1][ll] - f.entries[0][ll] * f.entries[1][kk]
            total += d.abs_sq()
        return 2.0 * math.sqrt(float(total / (n2 * n2)))
    mat = flatten(normalize(s), b).entries
    coords = _maximal_minors([list(mat[0]), list(mat[1])], False)
    total = sum(abs(p) ** 2 for p in coords.values())
    return 2.0 * math.sqrt(float(total))


def pluecker_set_to_json(ps: PlueckerSet) -> dict:
    coords = []
    for subset in sorted(ps.coords):
        v = ps.coords[subset]
        if ps.exact:
            coords.append({"I": list(subset), "re": str(v.re), "im": str(v.im)})
        else:
            coords.append({"I": list(subset), "re": v.real, "im": v.imag})
    return {"k": ps.k, "N": ps.N, "coords": coords}
