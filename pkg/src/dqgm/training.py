"""Full-batch training loop."""

import logging
import time
from dataclasses import dataclass

import numpy as np

from dqgm.ansatz import AnsatzSpec, ModelParams
from dqgm.model import TrainingSet, build_training_set, loss_and_grad
from dqgm.optimizers import make_optimizer
from dqgm.training_config import TrainingConfig
from simcore.sampling import INIT_STREAM, make_rng
from utils.exceptions import NumericalError
from utils.resources import ResourceManager

logger = logging.getLogger(__name__)

INIT_HALF_WIDTH = np.pi / 10


@dataclass(frozen=True)
class TrainingResult:
    """Outcome of :func:`train`.

    ``history[e]`` is the loss at the start of epoch ``e``; ``final_loss`` is
    evaluated after the last update.
    """
    params: ModelParams
    history: np.ndarray
    final_loss: float
    best_loss: float
    best_epoch: int
    final_grad_max_norm: float
    training_set: TrainingSet


def initial_params(ansatz: AnsatzSpec, seed: int) -> ModelParams:
    """Angles drawn uniformly from ``[-pi/10, pi/10]`` on the initialization stream."""
    rng = make_rng(seed, INIT_STREAM)
    return ModelParams(theta=rng.uniform(-INIT_HALF_WIDTH, INIT_HALF_WIDTH, ansatz.n_params), ansatz=ansatz)


def _checked(loss: float, epoch: int) -> float:
    if not np.isfinite(loss):
        raise NumericalError(f"Loss became non-finite ({loss}) at epoch {epoch}")
    return loss


def train(cfg: TrainingConfig) -> TrainingResult:
    """Minimize the MSE between model and target over the training grid."""
    training_set = build_training_set(cfg)
    params = initial_params(cfg.ansatz(), cfg.seed)
    optimizer = make_optimizer(cfg.optimizer, cfg.learning_rate)

    logger.info(
        "Training %s model: N=%d depth=%d params=%d points=%d epochs=%d lr=%g (%s)",
        cfg.feature_map.value, cfg.qubits, cfg.depth, params.ansatz.n_params,
        len(training_set), cfg.epochs, cfg.learning_rate, cfg.optimizer.kind,
    )
    start = time.perf_counter()
    history = np.empty(cfg.epochs)
    theta = params.theta
    for epoch in range(cfg.epochs):
        loss, grad = loss_and_grad(params.with_theta(theta), training_set)
        history[epoch] = _checked(loss, epoch)
        if (epoch + 1) % cfg.log_every == 0:
            logger.info("epoch %d/%d loss %.6e", epoch + 1, cfg.epochs, loss)
        else:
            logger.debug("epoch %d loss %.6e", epoch, loss)
        theta = optimizer.step(theta, grad)
        if not np.all(np.isfinite(theta)):
            raise NumericalError(f"Parameters became non-finite at epoch {epoch}")

    params = params.with_theta(theta)
    final_loss, final_grad = loss_and_grad(params, training_set)
    final_loss = _checked(final_loss, cfg.epochs)
    best_epoch = int(np.argmin(history))
    best_loss = float(history[best_epoch])
    if final_loss < best_loss:
        best_epoch, best_loss = cfg.epochs, final_loss

    logger.info(
        "Training finished in %.1fs: final loss %.6e, best %.6e at epoch %d, RSS %.1f MiB",
        time.perf_counter() - start, final_loss, best_loss, best_epoch, ResourceManager.current_rss_mb(),
    )
    return TrainingResult(
        params=params,
        history=history,
        final_loss=final_loss,
        best_loss=best_loss,
        best_epoch=best_epoch,
        final_grad_max_norm=float(np.max(np.abs(final_grad))),
        training_set=training_set,
    )
