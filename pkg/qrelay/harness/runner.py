"""Seeded Monte Carlo trials.

Every trial draws from its own stream, derived from (seed, point index, trial
index), so results do not depend on how trials are split across workers.
Outcomes are collected in index order and reduced in that order.
"""
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .. import config
from ..network.links import age_link, assign_holders, distribute_pairs
from ..network.topology import Topology
from ..protocol.adversary import AdversaryStrategy, adversary_decode
from ..protocol.messages import draw_message
from ..protocol.relay import DecodeStatus, decode, encode, relay_forward
from ..utils import duration_ms, trial_rng
from .analysis import resolve_beta
from .models import ExperimentConfig, MetricsRecord, TrialOutcome

# keeps adversary streams disjoint from sweep-point streams
ADVERSARY_POINT_OFFSET = 1_000_000
CHUNK_SIZE = 250


def run_trial(
    cfg: ExperimentConfig,
    x: float,
    trial_index: int,
    point_index: int = 0,
    beta: Optional[float] = None,
    strategy: Optional[AdversaryStrategy] = None,
    topo: Optional[Topology] = None,
) -> TrialOutcome:
    """distribute -> encode -> forward every hop -> (intercept) -> age -> decode."""
    beta = resolve_beta(cfg) if beta is None else beta
    topo = topo or cfg.topology()
    rng = trial_rng(cfg.seed, point_index, trial_index)

    links, attempts = distribute_pairs(topo, topo.sender, topo.receiver, 2, x, cfg.herald_loss, 0.0, rng, beta=beta)
    topo = assign_holders(topo, links)
    sender_coh = topo.node(topo.sender).memory_coh
    receiver_coh = topo.node(topo.receiver).memory_coh
    msg = draw_message(cfg.message_kind, rng, cfg.message_bit, cfg.message_theta, cfg.message_phi)
    payload = encode(msg, links[0], links[1], now=0.0, coh=sender_coh)
    for hop in topo.hop_attenuations:
        payload = relay_forward(payload, hop, cfg.hop_depolarizing, rng)
        if payload.erased:
            return TrialOutcome(trial_index=trial_index, status=DecodeStatus.ERASED, delivered=False, distribution_attempts=attempts)

    intercepted = None
    if strategy is not None:
        intercepted = adversary_decode(payload, strategy, rng, msg, topo=topo)

    now = cfg.bob_delay
    for link in links:
        age_link(link, now, receiver_coh)
    result = decode(payload, links[0], links[1], msg, now, receiver_coh)

    guess_correct = None
    if intercepted is not None and msg.bit is not None:
        guess_correct = intercepted.guessed_bit == msg.bit
    return TrialOutcome(
        trial_index=trial_index,
        status=result.status,
        fidelity=result.fidelity,
        delivered=True,
        distribution_attempts=attempts,
        adversary_fidelity=intercepted.fidelity if intercepted is not None else None,
        guess_correct=guess_correct,
    )


def _run_chunk(args: Tuple[ExperimentConfig, int, float, float, Optional[AdversaryStrategy], int, int]) -> List[TrialOutcome]:
    cfg, point_index, x, beta, strategy, start, stop = args
    topo = cfg.topology()
    return [run_trial(cfg, x, i, point_index, beta, strategy, topo) for i in range(start, stop)]


def _chunks(cfg: ExperimentConfig, point_index: int, x: float, beta: float, strategy: Optional[AdversaryStrategy]) -> List[tuple]:
    return [
        (cfg, point_index, x, beta, strategy, start, min(start + CHUNK_SIZE, cfg.trials))
        for start in range(0, cfg.trials, CHUNK_SIZE)
    ]


def _run_point(pool: Optional[ProcessPoolExecutor], chunks: Sequence[tuple]) -> List[TrialOutcome]:
    results: Iterable[List[TrialOutcome]] = pool.map(_run_chunk, chunks) if pool else map(_run_chunk, chunks)
    return [outcome for chunk in results for outcome in chunk]


def _mean_stderr(values: Sequence[float]) -> Tuple[Optional[float], Optional[float]]:
    if not values:
        return None, None
    arr = np.asarray(values, dtype=float)
    stderr = float(arr.std(ddof=1) / math.sqrt(arr.size)) if arr.size > 1 else 0.0
    return float(arr.mean()), stderr


def aggregate(x: float, outcomes: Sequence[TrialOutcome]) -> MetricsRecord:
    """Post-selected statistics: fidelity only over delivered trials."""
    delivered = [o for o in outcomes if o.delivered]
    mean, stderr = _mean_stderr([o.fidelity for o in delivered if o.fidelity is not None])
    adversary = [o.adversary_fidelity for o in delivered if o.adversary_fidelity is not None]
    guesses = [o.guess_correct for o in delivered if o.guess_correct is not None]
    return MetricsRecord(
        x=x,
        mean_fidelity=mean,
        stderr_fidelity=stderr,
        delivery_rate=len(delivered) / len(outcomes) if outcomes else 0.0,
        n_delivered=len(delivered),
        adversary_mean_fidelity=float(np.mean(adversary)) if adversary else None,
        guess_rate=float(np.mean(guesses)) if guesses else None,
    )


def _pool(workers: int) -> Optional[ProcessPoolExecutor]:
    return ProcessPoolExecutor(max_workers=workers) if workers > 1 else None


def run_sweep(cfg: ExperimentConfig, workers: Optional[int] = None) -> List[MetricsRecord]:
    workers = workers or config.WORKERS
    beta = resolve_beta(cfg)
    records: List[MetricsRecord] = []
    pool = _pool(workers)
    try:
        for point_index, x in enumerate(cfg.degradation_sweep):
            started = time.perf_counter()
            outcomes = _run_point(pool, _chunks(cfg, point_index, x, beta, None))
            record = aggregate(x, outcomes)
            records.append(record)
            logging.info(
                "sweep_point x=%.3f x_eff=%.5f trials=%d delivered=%d expired=%d mean_fidelity=%s attempts=%d workers=%d duration_ms=%d",
                x,
                beta * x,
                cfg.trials,
                record.n_delivered,
                sum(o.status == DecodeStatus.EXPIRED for o in outcomes),
                "na" if record.mean_fidelity is None else f"{record.mean_fidelity:.6f}",
                sum(o.distribution_attempts for o in outcomes),
                workers,
                duration_ms(started),
            )
    finally:
        if pool:
            pool.shutdown()
    return records


def run_adversary(cfg: ExperimentConfig, strategy: AdversaryStrategy | str, workers: Optional[int] = None) -> MetricsRecord:
    """Authorized and intercepted reconstructions on the same delivered trials."""
    strategy = AdversaryStrategy(strategy)
    workers = workers or config.WORKERS
    beta = resolve_beta(cfg)
    x = cfg.adversary_degradation
    point_index = ADVERSARY_POINT_OFFSET + list(AdversaryStrategy).index(strategy)
    started = time.perf_counter()
    pool = _pool(workers)
    try:
        outcomes = _run_point(pool, _chunks(cfg, point_index, x, beta, strategy))
    finally:
        if pool:
            pool.shutdown()
    record = aggregate(x, outcomes)
    logging.info(
        "adversary strategy=%s x=%.3f trials=%d delivered=%d adversary_mean_fidelity=%s guess_rate=%s duration_ms=%d",
        strategy.value,
        x,
        cfg.trials,
        record.n_delivered,
        "na" if record.adversary_mean_fidelity is None else f"{record.adversary_mean_fidelity:.6f}",
        "na" if record.guess_rate is None else f"{record.guess_rate:.6f}",
        duration_ms(started),
    )
    return record
