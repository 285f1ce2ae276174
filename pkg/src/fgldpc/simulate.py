"""Monte Carlo block error rates over the depolarizing channel.

Each trial samples one Pauli pattern ``(e_x, e_z)``, decodes ``H e_x`` and
``H e_z`` independently with binary sum-product (prior ``2 f_m`` each), and
succeeds iff both decodes converge and both residuals ``estimate + error``
lie in the row space of ``H`` (degenerate success).  Exact recovery of both
halves is tallied separately as strict success.
"""

from __future__ import annotations

import csv
import hashlib
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace

import numpy as np

from .channel import PERTURBATION_STREAM, RNG_ALGORITHM, ChannelConfig, sample_errors, trial_rng
from .decoder import DecoderConfig, build_tanner, decode_batch
from .gf2 import BinaryMatrix, RowSpace, pack_bits

#: Trials are processed in fixed chunks so the split never depends on worker count.
CHUNK_TRIALS = 1024

_Z95 = 1.959963984540054

CSV_COLUMNS = (
    "code_id", "family", "p", "q", "n", "k_quantum", "e", "f_m", "trials", "block_errors",
    "bler", "ci_low", "ci_high", "strict_errors", "seed", "max_iter", "perturb",
    "perturb_strength", "perturb_period",
)


def wilson_interval(k: int, n: int, z: float = _Z95) -> tuple[float, float]:
    if n == 0:
        return 0.0, 1.0
    phat = k / n
    denom = 1 + z * z / n
    centre = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    lo = 0.0 if k == 0 else max(0.0, centre - half)
    hi = 1.0 if k == n else min(1.0, centre + half)
    return lo, hi


def prior_for(f_m: float) -> float:
    """Marginal flip probability ``2 f_m`` of each half, kept inside (0, 1/2)."""
    return min(max(2 * f_m, 1e-9), 0.5 - 1e-9)


@dataclass(frozen=True)
class CodeInfo:
    code_id: str = ""
    family: str = ""
    p: int = 0
    q: int = 0
    k_quantum: int = 0
    e: int = 0


@dataclass(frozen=True)
class SimRecord:
    code: CodeInfo
    n: int
    f_m: float
    trials: int
    block_errors: int
    strict_errors: int
    seed: int
    decoder: DecoderConfig

    @property
    def bler(self) -> float:
        return self.block_errors / self.trials

    @property
    def interval(self) -> tuple[float, float]:
        return wilson_interval(self.block_errors, self.trials)

    @property
    def decoder_digest(self) -> str:
        text = repr(sorted(asdict(self.decoder).items())) + RNG_ALGORITHM
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def csv_row(self) -> dict:
        lo, hi = self.interval
        c, d = self.code, self.decoder
        g = repr  # shortest round-trip float text
        return {
            "code_id": c.code_id, "family": c.family, "p": c.p, "q": c.q, "n": self.n,
            "k_quantum": c.k_quantum, "e": c.e, "f_m": g(self.f_m), "trials": self.trials,
            "block_errors": self.block_errors, "bler": g(self.bler), "ci_low": g(lo),
            "ci_high": g(hi), "strict_errors": self.strict_errors, "seed": self.seed,
            "max_iter": d.max_iterations, "perturb": int(d.perturbation_enabled),
            "perturb_strength": g(d.perturbation_strength), "perturb_period": d.perturbation_period,
        }


class _Decoding:
    """Per-code state shared by all trials: Tanner graph and row-space oracle."""

    def __init__(self, H: BinaryMatrix):
        self.H = H
        self.graph = build_tanner(H)
        self.space = RowSpace(H)

    def run(self, f_m: float, cfg: DecoderConfig, seed: int, trial_indices) -> tuple[np.ndarray, np.ndarray]:
        """Per-trial ``(success, strict_success)`` flags."""
        trial_indices = list(trial_indices)
        e_x, e_z = sample_errors(self.H.n_cols, f_m, seed, trial_indices)
        cfg = replace(cfg, prior_flip_probability=prior_for(f_m))
        success = np.ones(len(trial_indices), dtype=bool)
        strict = np.ones(len(trial_indices), dtype=bool)
        for half, errors in enumerate((e_x, e_z)):
            rngs = None
            if cfg.perturbation_enabled:
                rngs = [trial_rng(seed, t, PERTURBATION_STREAM + half) for t in trial_indices]
            est, conv, _ = decode_batch(self.graph, self.H.matvec(errors), cfg, rngs)
            residual = est ^ errors
            exact = ~residual.any(axis=1)
            in_space = exact.copy()
            check = conv & ~exact
            if check.any():
                in_space[check] = ~self.space.reduce(pack_bits(residual[check])).any(axis=1)
            success &= conv & in_space
            strict &= conv & exact
        return success, strict


@dataclass(frozen=True)
class TrialOutcome:
    success: bool
    strict_success: bool

    def __bool__(self) -> bool:
        return self.success


def run_trial(H: BinaryMatrix, f_m: float, cfg: DecoderConfig, trial_index: int, seed: int = 0) -> TrialOutcome:
    ChannelConfig(f_m, seed, trial_index)
    success, strict = _Decoding(H).run(f_m, cfg, seed, [trial_index])
    return TrialOutcome(bool(success[0]), bool(strict[0]))


_worker_state: dict = {}


def _chunk_job(args):
    H, f_m, cfg, seed, start, stop = args
    key = H.__hash__()
    if _worker_state.get("key") != key:
        _worker_state.update(key=key, decoding=_Decoding(H))
    success, strict = _worker_state["decoding"].run(f_m, cfg, seed, range(start, stop))
    return int((~success).sum()), int((~strict).sum())


def run_sweep(
    H: BinaryMatrix,
    f_ms,
    trials: int,
    seed: int = 0,
    cfg: DecoderConfig | None = None,
    code: CodeInfo | None = None,
    workers: int = 1,
) -> list[SimRecord]:
    """One record per ``f_m``; trial ``t`` always uses the substream ``(seed, t)``."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    cfg = cfg or DecoderConfig()
    code = code or CodeInfo()
    f_ms = [float(f) for f in f_ms]
    for f in f_ms:
        ChannelConfig(f)

    jobs = [
        (H, f, cfg, seed, start, min(start + CHUNK_TRIALS, trials))
        for f in f_ms
        for start in range(0, trials, CHUNK_TRIALS)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk_job, jobs))
    else:
        decoding = _Decoding(H)
        results = []
        for _, f, c, s, start, stop in jobs:
            success, strict = decoding.run(f, c, s, range(start, stop))
            results.append((int((~success).sum()), int((~strict).sum())))

    per_f = len(range(0, trials, CHUNK_TRIALS))
    records = []
    for i, f in enumerate(f_ms):
        chunk = results[i * per_f:(i + 1) * per_f]
        records.append(
            SimRecord(
                code=code,
                n=H.n_cols,
                f_m=f,
                trials=trials,
                block_errors=sum(r[0] for r in chunk),
                strict_errors=sum(r[1] for r in chunk),
                seed=seed,
                decoder=cfg,
            )
        )
    return records


def records_csv(records: list[SimRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()
