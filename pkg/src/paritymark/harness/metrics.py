"""Detection rates and indistinguishability statistics."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np
from scipy.spatial.distance import jensenshannon
from scipy.stats import entropy


def rate(hits: Sequence[bool]) -> float:
    return float(np.mean(hits)) if len(hits) else float("nan")


def activation_frequency(states: np.ndarray) -> np.ndarray:
    """Per-anchor share of runs with the anchor active; ``states`` is runs x anchors."""
    return np.asarray(states, dtype=float).mean(axis=0)


def bernoulli_jsd(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Per-anchor JSD (nats) between Bernoulli(p) and Bernoulli(q)."""
    p, q = np.atleast_1d(p), np.atleast_1d(q)
    return np.array([jensenshannon([1 - a, a], [1 - b, b]) ** 2 for a, b in zip(p, q)])


def jsd_matrix(freqs: dict[str, np.ndarray]) -> tuple[list[str], np.ndarray]:
    """Mean per-anchor JSD for every pair of messages."""
    keys = sorted(freqs)
    out = np.zeros((len(keys), len(keys)))
    for i, j in combinations(range(len(keys)), 2):
        out[i, j] = out[j, i] = bernoulli_jsd(freqs[keys[i]], freqs[keys[j]]).mean()
    return keys, out


def mutual_information(states: np.ndarray, labels: Sequence) -> np.ndarray:
    """Plug-in estimate, in bits, of I(anchor state; label) for every anchor."""
    states = np.asarray(states, dtype=int)
    labels = np.asarray(labels)
    values, counts = np.unique(labels, return_counts=True)
    weights = counts / counts.sum()
    out = []
    for column in states.T:
        marginal = entropy(np.bincount(column, minlength=2), base=2)
        conditional = sum(w * entropy(np.bincount(column[labels == v], minlength=2), base=2)
                          for v, w in zip(values, weights))
        out.append(max(0.0, marginal - conditional))
    return np.array(out)


def hamming_similarity(states: np.ndarray) -> np.ndarray:
    """Pairwise share of agreeing positions; symmetric with a unit diagonal."""
    s = np.asarray(states, dtype=np.int8)
    agree = (s[:, None, :] == s[None, :, :]).mean(axis=2)
    return agree


def off_diagonal(matrix: np.ndarray) -> np.ndarray:
    return matrix[~np.eye(len(matrix), dtype=bool)]
