"""Syndrome-based sum-product decoding on the Tanner graph of a binary matrix.

Messages are log-likelihood ratios (positive favours "no flip").  The check
rule folds the target syndrome bit into the sign, so a check with syndrome 1
asks its neighbours for odd parity.  Updates use a flooding schedule and
the sign/magnitude form ``phi(x) = -log tanh(x/2)`` of the tanh rule.

Decoding is batched: many syndromes share one graph, and each row of the
batch stops as soon as its hard decision reproduces its syndrome.  Every
row is computed with exactly the same floating-point operations it would
see alone, so results do not depend on batch composition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import BinaryMatrix

_PHI_FLOOR = 1e-12
_BLOCK_MESSAGES = 2**17


@dataclass(frozen=True)
class TannerGraph:
    n: int
    m: int
    #: Edge endpoints, edges sorted by (check, variable).
    edge_check: np.ndarray
    edge_var: np.ndarray
    #: Edge ids sorted by (variable, check).
    var_order: np.ndarray

    @property
    def n_edges(self) -> int:
        return self.edge_check.size

    @property
    def check_degree(self) -> np.ndarray:
        return np.bincount(self.edge_check, minlength=self.m)

    @property
    def var_degree(self) -> np.ndarray:
        return np.bincount(self.edge_var, minlength=self.n)

    def var_neighbors(self, v: int) -> np.ndarray:
        return np.sort(self.edge_check[self.edge_var == v])


def build_tanner(H: BinaryMatrix) -> TannerGraph:
    checks, variables = H.nonzero()
    m, n = H.shape
    return TannerGraph(
        n=n,
        m=m,
        edge_check=checks,
        edge_var=variables,
        var_order=np.lexsort((checks, variables)),
    )


class _Segments:
    """Sum edge values into their nodes with ``np.add.reduceat`` over contiguous runs."""

    def __init__(self, degree: np.ndarray):
        self.count = degree.size
        self.nonempty = np.flatnonzero(degree)
        self.starts = np.concatenate(([0], np.cumsum(degree[self.nonempty])[:-1]))
        self.dense = self.nonempty.size == self.count

    def sum(self, values: np.ndarray) -> np.ndarray:
        if values.shape[1] == 0:
            return np.zeros((values.shape[0], self.count), dtype=values.dtype)
        partial = np.add.reduceat(values, self.starts, axis=1)
        if self.dense:
            return partial
        out = np.zeros((values.shape[0], self.count), dtype=partial.dtype)
        out[:, self.nonempty] = partial
        return out


@dataclass(frozen=True)
class DecoderConfig:
    max_iterations: int = 100
    prior_flip_probability: float = 0.01
    perturbation_enabled: bool = False
    perturbation_strength: float = 0.1
    perturbation_period: int = 6
    perturbation_seed: int = 0
    #: Messages and posteriors are clipped to +-llr_clamp.
    llr_clamp: float = 30.0

    def __post_init__(self):
        if not 0.0 < self.prior_flip_probability < 0.5:
            raise ValueError(f"prior {self.prior_flip_probability} outside (0, 1/2)")
        if not 0.0 < self.perturbation_strength < 1.0:
            raise ValueError(f"perturbation strength {self.perturbation_strength} outside (0, 1)")
        if self.perturbation_period < 1:
            raise ValueError("perturbation period must be at least 1")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be non-negative")


@dataclass(frozen=True)
class DecodeOutcome:
    estimate: np.ndarray
    converged: bool
    iterations_used: int


def _phi(x: np.ndarray) -> np.ndarray:
    return -np.log(np.tanh(0.5 * np.maximum(x, _PHI_FLOOR)))


def _syndrome(g: TannerGraph, checks: _Segments, est: np.ndarray) -> np.ndarray:
    return (checks.sum(est[:, g.edge_var]) & 1).astype(np.uint8)


def _llr(p: np.ndarray) -> np.ndarray:
    return np.log((1.0 - p) / p)


def decode_batch(
    g: TannerGraph,
    syndromes: np.ndarray,
    cfg: DecoderConfig,
    rngs: list[np.random.Generator] | None = None,
    block_rows: int | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Decode each row of ``syndromes``.

    Returns ``(estimates, converged, iterations_used)``.  ``rngs`` supplies one
    generator per row and is required when perturbation is enabled.
    """
    syndromes = np.atleast_2d(np.asarray(syndromes, dtype=np.uint8))
    if syndromes.shape[1] != g.m:
        raise ValueError(f"syndrome length {syndromes.shape[1]} != {g.m} checks")
    B = syndromes.shape[0]
    if cfg.perturbation_enabled and (rngs is None or len(rngs) != B):
        raise ValueError("perturbed decoding needs one generator per syndrome")
    if block_rows is None:
        # Keep per-block message arrays around 1 MB; larger blocks fall out of cache.
        block_rows = max(1, _BLOCK_MESSAGES // max(g.n_edges, 1))
    if B <= block_rows:
        return _decode_block(g, syndromes, cfg, rngs)
    parts = [
        _decode_block(g, syndromes[i:i + block_rows], cfg, None if rngs is None else rngs[i:i + block_rows])
        for i in range(0, B, block_rows)
    ]
    return tuple(np.concatenate(arrays) for arrays in zip(*parts))


def _decode_block(g, syndromes, cfg, rngs):
    B = syndromes.shape[0]
    clamp = cfg.llr_clamp

    estimates = np.zeros((B, g.n), dtype=np.uint8)
    converged = np.zeros(B, dtype=bool)
    iterations = np.full(B, cfg.max_iterations, dtype=np.int64)

    # Uniform priors below 1/2 make the all-zero word the initial hard decision.
    prob = np.full((B, g.n), cfg.prior_flip_probability)
    done = ~syndromes.any(axis=1)
    converged[done] = True
    iterations[done] = 0

    active = np.flatnonzero(~done)
    target = syndromes[active]
    prob = prob[active]
    prior = _llr(prob)
    v2c = prior[:, g.edge_var]
    since_reset = 0

    checks = _Segments(g.check_degree)
    variables = _Segments(g.var_degree)
    check_degree = g.check_degree

    for it in range(1, cfg.max_iterations + 1):
        if active.size == 0:
            break
        # Check nodes.
        mag = _phi(np.abs(v2c))
        neg = v2c < 0
        total_mag = np.repeat(checks.sum(mag), check_degree, axis=1)
        parity = np.repeat((checks.sum(neg.view(np.uint8)) + target) & 1, check_degree, axis=1)
        c2v_mag = _phi(np.maximum(total_mag - mag, 0.0))
        c2v = np.clip(np.where(parity ^ neg, -c2v_mag, c2v_mag), -clamp, clamp)

        # Variable nodes.
        posterior = prior + variables.sum(c2v[:, g.var_order])
        v2c = np.clip(posterior[:, g.edge_var] - c2v, -clamp, clamp)
        est = (posterior < 0).astype(np.uint8)
        since_reset += 1

        hit = np.all(_syndrome(g, checks, est) == target, axis=1)
        if hit.any():
            rows = active[hit]
            estimates[rows] = est[hit]
            converged[rows] = True
            iterations[rows] = it
            keep = ~hit
            active, target, est = active[keep], target[keep], est[keep]
            prob, prior, v2c = prob[keep], prior[keep], v2c[keep]

        if it == cfg.max_iterations:
            estimates[active] = est
        elif cfg.perturbation_enabled and since_reset == cfg.perturbation_period and active.size:
            prob, prior, v2c = _perturb(g, checks, cfg, est, target, prob, [rngs[r] for r in active])
            since_reset = 0

    return estimates, converged, iterations


def _perturb(g, checks, cfg, est, target, prob, rngs):
    """Scale priors of variables touching unsatisfied checks by U[1-s, 1+s]; reset messages."""
    unsatisfied = _syndrome(g, checks, est) != target
    touched = np.zeros(prob.shape, dtype=bool)
    rows, edges = np.nonzero(unsatisfied[:, g.edge_check])
    touched[rows, g.edge_var[edges]] = True
    s = cfg.perturbation_strength
    factors = np.stack([rng.uniform(1.0 - s, 1.0 + s, size=g.n) for rng in rngs])
    prob = np.where(touched, np.clip(prob * factors, 1e-12, 0.5), prob)
    prior = _llr(prob)
    return prob, prior, prior[:, g.edge_var]


def spa_decode(g: TannerGraph, syndrome: np.ndarray, cfg: DecoderConfig) -> DecodeOutcome:
    if cfg.perturbation_enabled:
        cfg = DecoderConfig(**{**cfg.__dict__, "perturbation_enabled": False})
    est, conv, its = decode_batch(g, np.asarray(syndrome)[None, :], cfg)
    return DecodeOutcome(est[0], bool(conv[0]), int(its[0]))


def spa_decode_perturbed(g: TannerGraph, syndrome: np.ndarray, cfg: DecoderConfig) -> DecodeOutcome:
    if not cfg.perturbation_enabled:
        raise ValueError("spa_decode_perturbed requires perturbation_enabled")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(cfg.perturbation_seed)))
    est, conv, its = decode_batch(g, np.asarray(syndrome)[None, :], cfg, [rng])
    return DecodeOutcome(est[0], bool(conv[0]), int(its[0]))
