"""Multipartite pure states, flattenings, and the coordinate Segre map.

A state is a complex amplitude tensor over m modes, stored flat in row-major
order with mode 1 most significant: multi-index (i1, ..., im) sits at offset
sum_j i_j * prod_{l>j} dims_l.  States are projective objects; they are kept
unnormalized and measures normalize internally.

Two scalar backends are supported throughout: Python ``complex`` and exact
:class:`~qsegre.gaussrat.GaussRat`.  A state is exact iff all its amplitudes
are; ``make_state`` coerces int/Fraction input to the exact backend.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    MalformedInput,
    NonFinite,
    NotProduct,
    ZeroVector,
)
from .gaussrat import GaussRat, Scalar, rational_sqrt, to_complex


@dataclass(frozen=True)
class PureState:
    """Validated amplitude tensor; build through :func:`make_state`."""

    dims: tuple[int, ...]
    amps: tuple[Scalar, ...]

    @property
    def num_modes(self) -> int:
        return len(self.dims)

    @property
    def exact(self) -> bool:
        return isinstance(self.amps[0], GaussRat)

    def to_numpy(self) -> np.ndarray:
        return np.fromiter((to_complex(a) for a in self.amps), dtype=np.complex128, count=len(self.amps))

    def norm_sq(self):
        """Squared 2-norm; exact Fraction in the exact backend."""
        if self.exact:
            return sum((a.abs_sq() for a in self.amps), Fraction(0))
        return float(np.sum(np.abs(self.to_numpy()) ** 2))

    def offset(self, index: Sequence[int]) -> int:
        off = 0
        for i, d in zip(index, self.dims):
            off = off * d + i
        return off

    def amplitude(self, index: Sequence[int]) -> Scalar:
        return self.amps[self.offset(index)]


@dataclass(frozen=True)
class LocalState:
    """One mode's amplitude vector; the projective factor of a product state."""

    dim: int
    vec: tuple[Scalar, ...]

    @property
    def exact(self) -> bool:
        return isinstance(self.vec[0], GaussRat)


@dataclass(frozen=True)
class Bipartition:
    """An unordered split of the modes {1..m}, stored by its row group.

    The canonical representative of a split contains mode 1; use
    :meth:`canonicalize` to get it.  Non-canonical row groups are still legal
    for :func:`flatten`, which only reindexes.
    """

    left: tuple[int, ...]

    def canonicalize(self, num_modes: int) -> "Bipartition":
        if 1 in self.left:
            return self
        comp = tuple(j for j in range(1, num_modes + 1) if j not in self.left)
        return Bipartition(comp)

    def complement(self, num_modes: int) -> tuple[int, ...]:
        return tuple(j for j in range(1, num_modes + 1) if j not in self.left)


@dataclass(frozen=True)
class Flattening:
    """Matrix view of a state under a bipartition.

    ``entries`` is a complex numpy array in the float backend and a tuple of
    tuples of GaussRat in the exact backend; both index as entries[r][c].
    """

    rows: int
    cols: int
    entries: object

    @property
    def exact(self) -> bool:
        return not isinstance(self.entries, np.ndarray)


def _coerce_amps(amps: Sequence, label: str = "amps") -> tuple[tuple[Scalar, ...], bool]:
    """Return (amps, exact); exact iff every entry is int/Fraction/GaussRat."""
    exact = all(isinstance(a, (int, Fraction, GaussRat)) for a in amps)
    if exact:
        return tuple(a if isinstance(a, GaussRat) else GaussRat(a) for a in amps), True
    out = []
    for k, a in enumerate(amps):
        c = complex(a)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise NonFinite(f"{label}[{k}] is not finite")
        out.append(c)
    return tuple(out), False


def make_state(dims: Sequence[int], amps: Sequence) -> PureState:
    """Validate and build a PureState.  Does not normalize.

    Raises DimensionMismatch for bad dims or amplitude count, ZeroVector for
    the zero tensor, NonFinite for NaN/Inf in the float backend.
    """
    dims = tuple(dims)
    if not dims:
        raise DimensionMismatch("dims must be nonempty")
    for j, d in enumerate(dims):
        if not isinstance(d, int) or d < 2:
            raise DimensionMismatch(f"dims[{j}] must be an integer >= 2, got {d!r}")
    total = math.prod(dims)
    if len(amps) != total:
        raise DimensionMismatch(f"amps has length {len(amps)}, expected {total}")
    coerced, _ = _coerce_amps(amps)
    if not any(bool(a) for a in coerced):
        raise ZeroVector("all amplitudes are zero")
    return PureState(dims, coerced)


def make_local(vec: Sequence) -> LocalState:
    """Validate and build a LocalState from its amplitude vector."""
    if len(vec) < 2:
        raise DimensionMismatch(f"local vector needs >= 2 entries, got {len(vec)}")
    coerced, _ = _coerce_amps(vec, label="vec")
    if not any(bool(a) for a in coerced):
        raise ZeroVector("local vector is zero")
    return LocalState(len(coerced), coerced)


def make_bipartition(left: Iterable[int], num_modes: int) -> Bipartition:
    """Validate a row group against the mode count {1..num_modes}."""
    modes = tuple(sorted(set(left)))
    if not modes:
        raise IndexOutOfRange("bipartition is empty")
    if modes[0] < 1 or modes[-1] > num_modes:
        raise IndexOutOfRange(f"bipartition {modes} out of range 1..{num_modes}")
    if len(modes) == num_modes:
        raise IndexOutOfRange("bipartition must be a proper subset of the modes")
    return Bipartition(modes)


def canonical_bipartitions(num_modes: int) -> list[Bipartition]:
    """All 2^(m-1) - 1 unordered splits, each by its 1-containing representative."""
    rest = range(2, num_modes + 1)
    out = []
    for r in range(0, num_modes - 1):
        for extra in itertools.combinations(rest, r):
            out.append(Bipartition((1,) + extra))
    return sorted(out, key=lambda b: b.left)


def normalize(s: PureState) -> PureState:
    """Scale to unit 2-norm.  Stays exact when the norm is rational."""
    if s.exact:
        n2 = s.norm_sq()
        r = rational_sqrt(n2)
        if r is not None:
            inv = GaussRat(1 / r)
            return PureState(s.dims, tuple(a * inv for a in s.amps))
        scale = 1.0 / math.sqrt(float(n2))
        return PureState(s.dims, tuple(to_complex(a) * scale for a in s.amps))
    arr = s.to_numpy()
    arr = arr / np.linalg.norm(arr)
    return PureState(s.dims, tuple(complex(x) for x in arr))


def segre_map(factors: Sequence[LocalState]) -> PureState:
    """Tensor product of local states: amplitude at (i1..im) = prod_j vec_j[i_j]."""
    if len(factors) < 2:
        raise DimensionMismatch(f"segre_map needs >= 2 factors, got {len(factors)}")
    dims = tuple(f.dim for f in factors)
    exact = all(f.exact for f in factors)
    if exact:
        amps = []
        for index in itertools.product(*(range(d) for d in dims)):
            prod = GaussRat(1)
            for f, i in zip(factors, index):
                prod = prod * f.vec[i]
            amps.append(prod)
        return PureState(dims, tuple(amps))
    vecs = [np.array([to_complex(x) for x in f.vec], dtype=np.complex128) for f in factors]
    arr = vecs[0]
    for v in vecs[1:]:
        arr = np.multiply.outer(arr, v)
    return PureState(dims, tuple(complex(x) for x in arr.reshape(-1)))


def _split_axes(dims: tuple[int, ...], b: Bipartition) -> tuple[list[int], list[int], int, int]:
    m = len(dims)
    left = b.left
    if not left or list(left) != sorted(set(left)) or left[0] < 1 or left[-1] > m:
        raise IndexOutOfRange(f"bipartition {left} invalid for {m} modes")
    if len(left) == m:
        raise IndexOutOfRange("bipartition must be a proper subset of the modes")
    right = [j for j in range(1, m + 1) if j not in left]
    rows = math.prod(dims[j - 1] for j in left)
    cols = math.prod(dims[j - 1] for j in right)
    return list(left), right, rows, cols


def flatten(s: PureState, b: Bipartition) -> Flattening:
    """Matrix of amplitudes with rows indexed by b.left, columns by the rest.

    Row and column indices are row-major in the sorted order of their mode
    groups, consistent with the global amplitude order.
    """
    left, right, rows, cols = _split_axes(s.dims, b)
    perm = [j - 1 for j in left] + [j - 1 for j in right]
    if not s.exact:
        arr = s.to_numpy().reshape(s.dims)
        mat = np.ascontiguousarray(arr.transpose(perm).reshape(rows, cols))
        return Flattening(rows, cols, mat)
    left_dims = [s.dims[j - 1] for j in left]
    right_dims = [s.dims[j - 1] for j in right]
    m = s.num_modes
    entries = []
    for rindex in itertools.product(*(range(d) for d in left_dims)):
        row = []
        for cindex in itertools.product(*(range(d) for d in right_dims)):
            full = [0] * m
            for j, i in zip(left, rindex):
                full[j - 1] = i
            for j, i in zip(right, cindex):
                full[j - 1] = i
            row.append(s.amplitude(full))
        entries.append(tuple(row))
    return Flattening(rows, cols, tuple(entries))


def _pivot_index(s: PureState) -> tuple[int, ...]:
    """Multi-index of the largest-modulus amplitude (first on ties)."""
    if s.exact:
        best, best_sq = 0, Fraction(-1)
        for k, a in enumerate(s.amps):
            sq = a.abs_sq()
            if sq > best_sq:
                best, best_sq = k, sq
    else:
        best = int(np.argmax(np.abs(s.to_numpy())))
    index = []
    for d in reversed(s.dims):
        index.append(best % d)
        best //= d
    return tuple(reversed(index))


def local_factors(s: PureState, tol: float) -> list[LocalState]:
    """Invert the Segre map through the max-modulus pivot fiber.

    For factor j the vector is the amplitude fiber through the pivot with the
    j-th index varying.  Raises NotProduct when rebuilding the product from
    the factors misses the state by more than 10*tol (max-abs, measured on
    the unit-norm state in the float backend, relative to the norm in the
    exact backend).
    """
    if tol < 0:
        raise MalformedInput("tol must be nonnegative")
    if s.num_modes == 1:
        hat = normalize(s)
        return [LocalState(hat.dims[0], hat.amps)]
    if s.exact:
        return _local_factors_exact(s, tol)
    return _local_factors_float(s, tol)


def _fiber(s: PureState, pivot: tuple[int, ...], j: int) -> list[Scalar]:
    out = []
    for i in range(s.dims[j]):
        index = list(pivot)
        index[j] = i
        out.append(s.amplitude(index))
    return out


def _local_factors_exact(s: PureState, tol: float) -> list[LocalState]:
    pivot = _pivot_index(s)
    pv = s.amplitude(pivot)
    factors = []
    for j in range(s.num_modes):
        vec = _fiber(s, pivot, j)
        anchor = vec[pivot[j]]  # equals pv, nonzero
        factors.append(LocalState(s.dims[j], tuple(a / anchor for a in vec)))
    # rebuilt pivot entry is exactly 1, so compare in the pivot chart
    bound = Fraction(10 * tol) ** 2 * s.norm_sq() / pv.abs_sq() if tol else Fraction(0)
    worst = Fraction(0)
    for index in itertools.product(*(range(d) for d in s.dims)):
        rebuilt = GaussRat(1)
        for j, i in enumerate(index):
            rebuilt = rebuilt * factors[j].vec[i]
        diff = s.amplitude(index) / pv - rebuilt
        worst = max(worst, diff.abs_sq())
    if worst > bound:
        raise NotProduct(f"residual^2 {float(worst):.3e} exceeds bound")
    return factors


def _local_factors_float(s: PureState, tol: float) -> list[LocalState]:
    hat = normalize(s)
    pivot = _pivot_index(hat)
    factors = []
    for j in range(hat.num_modes):
        vec = np.array([to_complex(a) for a in _fiber(hat, pivot, j)], dtype=np.complex128)
        vec = vec / np.linalg.norm(vec)
        factors.append(LocalState(hat.dims[j], tuple(complex(x) for x in vec)))
    rebuilt = segre_map(factors)
    t = rebuilt.to_numpy()
    h = hat.to_numpy()
    lam = h[rebuilt.offset(pivot)] / t[rebuilt.offset(pivot)]
    residual = float(np.max(np.abs(h - lam * t)))
    if residual > 10 * tol:
        raise NotProduct(f"residual {residual:.3e} exceeds {10 * tol:.3e}")
    return factors


def permute_modes(s: PureState, perm: Sequence[int]) -> PureState:
    """Reorder modes: new mode k carries old mode perm[k-1] (perm is 1-based)."""
    m = s.num_modes
    if sorted(perm) != list(range(1, m + 1)):
        raise IndexOutOfRange(f"perm {perm} is not a permutation of 1..{m}")
    axes = [p - 1 for p in perm]
    new_dims = tuple(s.dims[a] for a in axes)
    if not s.exact:
        arr = s.to_numpy().reshape(s.dims).transpose(axes)
        return PureState(new_dims, tuple(complex(x) for x in arr.reshape(-1)))
    amps = []
    for index in itertools.product(*(range(d) for d in new_dims)):
        old = [0] * m
        for k, a in enumerate(axes):
            old[a] = index[k]
        amps.append(s.amplitude(old))
    return PureState(new_dims, tuple(amps))


def apply_local_unitary(s: PureState, mode: int, u: np.ndarray) -> PureState:
    """Apply a d x d matrix to one mode (float backend)."""
    if mode < 1 or mode > s.num_modes:
        raise IndexOutOfRange(f"mode {mode} out of range 1..{s.num_modes}")
    d = s.dims[mode - 1]
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (d, d):
        raise DimensionMismatch(f"matrix shape {u.shape} does not match dim {d}")
    arr = s.to_numpy().reshape(s.dims)
    arr = np.moveaxis(np.tensordot(u, arr, axes=([1], [mode - 1])), 0, mode - 1)
    return PureState(s.dims, tuple(complex(x) for x in arr.reshape(-1)))


def apply_local_unitaries(s: PureState, mats: Sequence[np.ndarray]) -> PureState:
    if len(mats) != s.num_modes:
        raise DimensionMismatch(f"got {len(mats)} matrices for {s.num_modes} modes")
    for k, u in enumerate(mats):
        s = apply_local_unitary(s, k + 1, u)
    return s


# ---------------------------------------------------------------------------
# State JSON format: {"dims": [d1, ...], "amps": [[re, im], ...]} with amps in
# the row-major order above.  Components are JSON numbers (floats select the
# float backend) or "p/q" strings / integers (exact backend).  A single float
# anywhere makes the whole state float; --exact parsing rejects floats.
# ---------------------------------------------------------------------------


def _parse_component(value, field: str, exact_only: bool):
    if isinstance(value, bool):
        raise MalformedInput(f"{field}: expected number or 'p/q' string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"{field}: bad fraction literal {value!r}") from None
    if isinstance(value, float):
        if exact_only:
            raise MalformedInput(f"{field}: float not allowed in exact mode")
        return value
    raise MalformedInput(f"{field}: expected number or 'p/q' string")


def state_from_json(obj, exact: bool = False) -> PureState:
    """Parse the state JSON object; messages name the first offending field."""
    if not isinstance(obj, dict):
        raise MalformedInput("top level: expected an object")
    if "dims" not in obj:
        raise MalformedInput("dims: missing")
    if "amps" not in obj:
        raise MalformedInput("amps: missing")
    dims = obj["dims"]
    if not isinstance(dims, list) or not dims:
        raise MalformedInput("dims: expected a nonempty list")
    for j, d in enumerate(dims):
        if not isinstance(d, int) or isinstance(d, bool) or d < 2:
            raise MalformedInput(f"dims[{j}]: expected an integer >= 2")
    raw = obj["amps"]
    if not isinstance(raw, list):
        raise MalformedInput("amps: expected a list")
    parsed = []
    all_exact = True
    for k, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise MalformedInput(f"amps[{k}]: expected a [re, im] pair")
        re = _parse_component(pair[0], f"amps[{k}][0]", exact)
        im = _parse_component(pair[1], f"amps[{k}][1]", exact)
        if isinstance(re, float) or isinstance(im, float):
            all_exact = False
        parsed.append((re, im))
    if all_exact:
        amps = [GaussRat(re, im) for re, im in parsed]
    else:
        amps = [complex(float(re), float(im)) for re, im in parsed]
    try:
        return make_state(dims, amps)
    except (DimensionMismatch, ZeroVector, NonFinite) as exc:
        raise MalformedInput(str(exc)) from None


def state_to_json(s: PureState) -> dict:
    if s.exact:
        amps = [[str(a.re), str(a.im)] for a in s.amps]
    else:
        amps = [[a.real, a.imag] for a in s.amps]
    return {"dims": list(s.dims), "amps": amps}
