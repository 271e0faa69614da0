"""Dense tensor utilities and the sequentially truncated HOSVD.

The last tensor mode is treated as the component mode: its factor is stored
transposed (rows orthonormal) so a Tucker model is core x sample factors,
contracted with the component factor on the right.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matfun import thin_svd

__all__ = [
    "unfold",
    "fold",
    "mode_multiply",
    "TuckerModel",
    "sthosvd",
    "reconstruct",
]


def unfold(tensor, mode):
    """Mode-``mode`` unfolding: that mode's index runs over rows."""
    tensor = np.asarray(tensor)
    if not 0 <= mode < tensor.ndim:
        raise ValueError(f"mode {mode} out of range for ndim {tensor.ndim}")
    return np.moveaxis(tensor, mode, 0).reshape(tensor.shape[mode], -1)


def fold(matrix, mode, shape):
    """Inverse of :func:`unfold` for a tensor of the given shape."""
    shape = tuple(shape)
    moved = (shape[mode],) + shape[:mode] + shape[mode + 1 :]
    return np.moveaxis(np.asarray(matrix).reshape(moved), 0, mode)


def mode_multiply(tensor, matrix, mode):
    """Mode-``mode`` product with ``matrix`` of shape (new_size, old_size)."""
    tensor = np.asarray(tensor)
    matrix = np.asarray(matrix)
    if matrix.shape[1] != tensor.shape[mode]:
        raise ValueError(
            f"matrix columns {matrix.shape[1]} != mode-{mode} size {tensor.shape[mode]}"
        )
    out = np.tensordot(matrix, tensor, axes=(1, mode))
    return np.moveaxis(out, 0, mode)


@dataclass(frozen=True)
class TuckerModel:
    """Orthogonal Tucker model with a distinguished component (last) mode.

    ``factors[k]`` has shape (size_k, rank_k) with orthonormal columns;
    ``component`` has shape (component_rank, component_size) with orthonormal
    rows.  ``core`` has shape ranks + (component_rank,).
    """

    core: np.ndarray
    factors: tuple
    component: np.ndarray

    @property
    def ranks(self):
        return tuple(f.shape[1] for f in self.factors) + (self.component.shape[0],)

    @property
    def shape(self):
        return tuple(f.shape[0] for f in self.factors) + (self.component.shape[1],)


def _ranks_from_tolerance(sing_sq_tail, budget):
    """Smallest kept rank whose discarded energy stays within the budget."""
    total = 0.0
    rank = len(sing_sq_tail)
    for sq in reversed(sing_sq_tail):
        if total + sq > budget:
            break
        total += sq
        rank -= 1
    return max(rank, 1)


def sthosvd(tensor, ranks=None, tol=None):
    """Sequentially truncated HOSVD, processing modes in index order.

    Exactly one of ``ranks`` (one entry per mode, component mode last) or
    ``tol`` (relative Frobenius tolerance, error budget split evenly across
    modes) may be given; with neither, no truncation is performed and the
    reconstruction is exact up to round-off.
    """
    tensor = np.asarray(tensor, dtype=float)
    if tensor.size == 0:
        raise ValueError("empty tensor")
    if ranks is not None and tol is not None:
        raise ValueError("give ranks or tol, not both")
    nmodes = tensor.ndim
    if ranks is not None:
        ranks = [int(r) for r in ranks]
        if len(ranks) != nmodes:
            raise ValueError(f"need {nmodes} ranks, got {len(ranks)}")
        for r, size in zip(ranks, tensor.shape):
            if not 1 <= r <= size:
                raise ValueError(f"rank {r} outside [1, {size}]")
    budget = None
    if tol is not None:
        if tol < 0.0:
            raise ValueError("tolerance must be >= 0")
        budget = (tol * np.linalg.norm(tensor)) ** 2 / nmodes

    current = tensor
    factors = []
    for mode in range(nmodes):
        u, s, _ = thin_svd(unfold(current, mode))
        if ranks is not None:
            keep = min(ranks[mode], len(s))
        elif budget is not None:
            keep = _ranks_from_tolerance(s**2, budget)
        else:
            keep = len(s)
        u = u[:, :keep]
        factors.append(u)
        current = mode_multiply(current, u.T, mode)

    return TuckerModel(core=current, factors=tuple(factors[:-1]), component=factors[-1].T)


def reconstruct(model):
    """Expand a Tucker model back to the dense tensor."""
    out = model.core
    for mode, factor in enumerate(model.factors):
        out = mode_multiply(out, factor, mode)
    return mode_multiply(out, model.component.T, out.ndim - 1)
