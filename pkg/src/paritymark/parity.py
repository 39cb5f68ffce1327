"""Constrained parity-check systems over GF(2).

A state vector ``r`` (one bit per anchor) is feasible for ``(M, c)`` when

* ``M @ r == c`` modulo 2, and
* for every group ``G_i`` the threshold bit ``sum(r[G_i]) >= tau`` equals ``c[i]``.

:func:`solve_constrained` draws uniformly from the feasible set. It first
parametrises the affine solution space of the parity rows by Gaussian
elimination and rejection-samples it; when rejection keeps failing it falls
back to an exact method (enumeration of the affine space for small ``n``,
a dynamic-programming sampler over groups otherwise).

:func:`enumerate_solutions` is a brute-force reference that shares no code
with the sampler and is meant for testing.

Bit vectors cross the API as ``"0101"`` strings; matrices are ``uint8``
numpy arrays.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

MAX_ENUMERATE = 24
REJECTION_TRIALS = 10_000

Grouping = Sequence[Sequence[int]]


class Infeasible(Exception):
    """No state vector satisfies the parity rows and the group thresholds."""


class SizeLimit(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def as_bits(value) -> np.ndarray:
    if isinstance(value, str):
        return np.frombuffer(value.encode("ascii"), dtype=np.uint8) - ord("0")
    return np.asarray(value, dtype=np.uint8).ravel()


def bits_str(bits) -> str:
    return "".join("1" if b else "0" for b in bits)


def as_matrix(M) -> np.ndarray:
    M = np.atleast_2d(np.asarray(M, dtype=np.uint8))
    if M.ndim != 2:
        raise DimensionMismatch("matrix must be two-dimensional")
    return M & 1


def consecutive_groups(q: int, alpha: int) -> list[list[int]]:
    """Group ``i`` owns columns ``i*alpha .. i*alpha + alpha - 1``."""
    return [list(range(i * alpha, (i + 1) * alpha)) for i in range(q)]


def threshold_groups(r, grouping: Grouping, tau: int) -> str:
    bits = as_bits(r)
    return bits_str(int(bits[list(g)].sum()) >= tau for g in grouping)


def verify(M, r, c) -> bool:
    M, r, c = as_matrix(M), as_bits(r), as_bits(c)
    if M.shape != (len(c), len(r)):
        raise DimensionMismatch(f"matrix {M.shape} vs r={len(r)}, c={len(c)}")
    return bool(np.array_equal((M.astype(np.int64) @ r) % 2, c))


def gf2_rank(M) -> int:
    return len(_rref(as_matrix(M).copy())[1])


def _rref(A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """In-place reduced row echelon form; returns the matrix and pivot columns."""
    pivots: list[int] = []
    row = 0
    rows, cols = A.shape
    for col in range(cols):
        if row == rows:
            break
        hits = np.flatnonzero(A[row:, col])
        if not len(hits):
            continue
        pivot = row + hits[0]
        if pivot != row:
            A[[row, pivot]] = A[[pivot, row]]
        others = np.flatnonzero(A[:, col])
        others = others[others != row]
        A[others] ^= A[row]
        pivots.append(col)
        row += 1
    return A, pivots


def affine_solutions(M, c) -> tuple[np.ndarray, np.ndarray] | None:
    """Particular solution and nullspace basis of ``M @ r == c``, or None."""
    M, c = as_matrix(M), as_bits(c)
    l, n = M.shape
    aug, pivots = _rref(np.hstack([M, c.reshape(-1, 1)]))
    if n in pivots:
        return None
    x0 = np.zeros(n, dtype=np.uint8)
    for i, col in enumerate(pivots):
        x0[col] = aug[i, n]
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for i, col in enumerate(pivots):
            basis[b, col] = aug[i, f]
    return x0, basis


def _check_dims(M: np.ndarray, c: np.ndarray, grouping: Grouping) -> None:
    if M.shape[0] != len(c):
        raise DimensionMismatch(f"{M.shape[0]} rows but |c| = {len(c)}")
    if len(grouping) != len(c):
        raise DimensionMismatch(f"{len(grouping)} groups but |c| = {len(c)}")
    covered = sorted(j for g in grouping for j in g)
    if covered != list(range(M.shape[1])):
        raise DimensionMismatch("grouping must partition the matrix columns")


def _group_ok(R: np.ndarray, grouping: Grouping, c: np.ndarray, tau: int) -> np.ndarray:
    ok = np.ones(len(R), dtype=bool)
    for g, bit in zip(grouping, c):
        ok &= (R[:, list(g)].sum(axis=1) >= tau) == bool(bit)
    return ok


def solve_constrained(M, c, grouping: Grouping, tau: int,
                      rng: np.random.Generator, nonzero: bool = False) -> str:
    """Uniform draw from the feasible set; ``nonzero`` drops the all-zero vector."""
    M, c = as_matrix(M), as_bits(c)
    _check_dims(M, c, grouping)
    n = M.shape[1]
    affine = affine_solutions(M, c)
    if affine is None:
        raise Infeasible("parity rows are inconsistent")
    x0, basis = affine
    drawn = 0
    while drawn < REJECTION_TRIALS:
        batch = min(256, REJECTION_TRIALS - drawn)
        coeffs = rng.integers(0, 2, size=(batch, len(basis)), dtype=np.uint8)
        R = (x0 ^ (coeffs.astype(np.int64) @ basis % 2)).astype(np.uint8)
        ok = _group_ok(R, grouping, c, tau)
        if nonzero:
            ok &= R.any(axis=1)
        hits = np.flatnonzero(ok)
        if len(hits):
            return bits_str(R[hits[0]])
        drawn += batch
    if n <= MAX_ENUMERATE:
        return _enumerate_affine(x0, basis, grouping, c, tau, rng, nonzero)
    return _dp_sample(M, c, grouping, tau, rng, nonzero)


def _masks(bits_rows: np.ndarray) -> np.ndarray:
    """Pack rows of a bit matrix into ints, column ``j`` at bit ``j``."""
    weights = np.left_shift(np.uint32(1), np.arange(bits_rows.shape[-1], dtype=np.uint32))
    return (bits_rows.astype(np.uint32) * weights).sum(axis=-1, dtype=np.uint32)


def _unpack(mask: int, n: int) -> str:
    return bits_str((mask >> j) & 1 for j in range(n))


def _threshold_filter(points: np.ndarray, grouping: Grouping, c, tau: int) -> np.ndarray:
    ok = np.ones(len(points), dtype=bool)
    for g, bit in zip(grouping, c):
        gmask = np.uint32(sum(1 << j for j in g))
        ok &= (np.bitwise_count(points & gmask) >= tau) == bool(bit)
    return ok


def _enumerate_affine(x0, basis, grouping, c, tau, rng, nonzero) -> str:
    points = np.array([_masks(x0)], dtype=np.uint32)
    for b in _masks(basis) if len(basis) else ():
        points = np.concatenate([points, points ^ b])
    ok = _threshold_filter(points, grouping, c, tau)
    if nonzero:
        ok &= points != 0
    feasible = points[ok]
    if not len(feasible):
        raise Infeasible("no assignment meets the group thresholds")
    return _unpack(int(feasible[rng.integers(len(feasible))]), len(x0))


def _group_options(M: np.ndarray, group: Sequence[int], bit: int, tau: int):
    """(assignment, syndrome contribution) pairs for one group and threshold bit."""
    cols = [int(sum(int(M[i, j]) << i for i in range(M.shape[0]))) for j in group]
    options = []
    for a in range(1 << len(group)):
        if (a.bit_count() >= tau) != bool(bit):
            continue
        syn = 0
        for k, col in enumerate(cols):
            if a >> k & 1:
                syn ^= col
        options.append((a, syn))
    return options


def count_solutions(M, c, grouping: Grouping, tau: int) -> int:
    """Exact size of the feasible set, by dynamic programming over groups."""
    M, c = as_matrix(M), as_bits(c)
    _check_dims(M, c, grouping)
    table = _dp_tables(M, c, grouping, tau)
    return table[-1].get(_target(c), 0)


def _target(c) -> int:
    return sum(int(b) << i for i, b in enumerate(c))


def _dp_tables(M, c, grouping, tau) -> list[dict[int, int]]:
    tables = [{0: 1}]
    for g, bit in zip(grouping, c):
        nxt: dict[int, int] = {}
        for a, syn in _group_options(M, g, bit, tau):
            for s, count in tables[-1].items():
                nxt[s ^ syn] = nxt.get(s ^ syn, 0) + count
        tables.append(nxt)
    return tables


def _dp_sample(M, c, grouping, tau, rng, nonzero) -> str:
    tables = _dp_tables(M, c, grouping, tau)
    total = tables[-1].get(_target(c), 0)
    zero_ok = total > 0 and not c.any() and verify(M, np.zeros(M.shape[1]), c)
    if total == 0 or (nonzero and zero_ok and total == 1):
        raise Infeasible("no assignment meets the group thresholds")
    while True:
        r = np.zeros(M.shape[1], dtype=np.uint8)
        s = _target(c)
        for g_index in range(len(grouping) - 1, -1, -1):
            group, bit = grouping[g_index], c[g_index]
            options = _group_options(M, group, bit, tau)
            weights = [tables[g_index].get(s ^ syn, 0) for _, syn in options]
            pick = _weighted_index(weights, rng)
            a, syn = options[pick]
            for k, j in enumerate(group):
                r[j] = a >> k & 1
            s ^= syn
        if not (nonzero and not r.any()):
            return bits_str(r)


def _weighted_index(weights: list[int], rng: np.random.Generator) -> int:
    # counts can exceed float precision, so draw an exact integer
    total = sum(weights)
    if total < 2**63:
        x = int(rng.integers(total))
    else:
        x = int.from_bytes(rng.bytes(64), "big") % total
    for i, w in enumerate(weights):
        if x < w:
            return i
        x -= w
    raise AssertionError("unreachable")


def enumerate_solutions(M, c, grouping: Grouping, tau: int) -> set[str]:
    """Every feasible state vector, by exhaustive search (n <= 24)."""
    M, c = as_matrix(M), as_bits(c)
    _check_dims(M, c, grouping)
    n = M.shape[1]
    if n > MAX_ENUMERATE:
        raise SizeLimit(f"n = {n} exceeds {MAX_ENUMERATE}")
    found: set[str] = set()
    chunk = 1 << 20
    for start in range(0, 1 << n, chunk):
        r = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint32)
        ok = np.ones(len(r), dtype=bool)
        for i in range(M.shape[0]):
            row = np.uint32(sum(1 << j for j in range(n) if M[i, j]))
            ok &= (np.bitwise_count(r & row) & 1) == c[i]
        for g, bit in zip(grouping, c):
            gmask = np.uint32(sum(1 << j for j in g))
            ok &= (np.bitwise_count(r & gmask) >= tau) == bool(bit)
        found.update(_unpack(int(v), n) for v in r[ok])
    return found
