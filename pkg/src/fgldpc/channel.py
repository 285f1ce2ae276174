"""Depolarizing channel in binary symplectic form.

Each qubit independently suffers X, Y or Z with probability ``f_m`` each.
A pattern is the pair ``(e_x, e_z)``: X sets ``e_x``, Z sets ``e_z``, Y sets both.

Randomness is a pure function of ``(seed, trial_index, stream)``: the
generator is numpy's PCG64 seeded by ``SeedSequence(seed, spawn_key=(trial_index, stream))``.
SeedSequence hashing and PCG64 are specified bit-exactly by numpy, so
patterns are reproducible across platforms and independent of the order in
which trials are evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RNG_ALGORITHM = "numpy-PCG64/SeedSequence(seed,spawn_key=(trial,stream))"

#: Stream ids within a trial.
CHANNEL_STREAM = 0
PERTURBATION_STREAM = 1


def trial_rng(seed: int, trial_index: int, stream: int = CHANNEL_STREAM) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1), spawn_key=(int(trial_index), int(stream)))
    return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True)
class ChannelConfig:
    f_m: float
    seed: int = 0
    trial_index: int = 0

    def __post_init__(self):
        if not 0.0 <= self.f_m <= 1.0 / 3.0:
            raise ValueError(f"f_m = {self.f_m} outside [0, 1/3]")


@dataclass(frozen=True)
class PauliErrorPattern:
    e_x: np.ndarray
    e_z: np.ndarray

    @property
    def n(self) -> int:
        return self.e_x.size

    def counts(self) -> dict[str, int]:
        x, z = self.e_x.astype(bool), self.e_z.astype(bool)
        return {"X": int((x & ~z).sum()), "Y": int((x & z).sum()), "Z": int((~x & z).sum())}


def _draw(rng: np.random.Generator, n: int, f_m: float) -> tuple[np.ndarray, np.ndarray]:
    u = rng.random(n)
    # u < f: X, f <= u < 2f: Y, 2f <= u < 3f: Z.
    e_x = u < 2 * f_m
    e_z = (u >= f_m) & (u < 3 * f_m)
    return e_x.astype(np.uint8), e_z.astype(np.uint8)


def sample_error(n: int, cfg: ChannelConfig) -> PauliErrorPattern:
    e_x, e_z = _draw(trial_rng(cfg.seed, cfg.trial_index), n, cfg.f_m)
    return PauliErrorPattern(e_x, e_z)


def sample_errors(n: int, f_m: float, seed: int, trial_indices) -> tuple[np.ndarray, np.ndarray]:
    """Stacked ``(e_x, e_z)`` for several trials; row ``i`` equals ``sample_error`` for trial ``trial_indices[i]``."""
    ChannelConfig(f_m)
    trial_indices = list(trial_indices)
    e_x = np.empty((len(trial_indices), n), dtype=np.uint8)
    e_z = np.empty_like(e_x)
    for row, t in enumerate(trial_indices):
        e_x[row], e_z[row] = _draw(trial_rng(seed, t), n, f_m)
    return e_x, e_z
