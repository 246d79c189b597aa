"""First-order update rules for the variational angles."""

from abc import ABC, abstractmethod

import numpy as np

from dqgm.training_config import OptimizerSettings


class Optimizer(ABC):
    """Stateful map from (theta, gradient) to the next theta."""

    def __init__(self, learning_rate: float):
        self.learning_rate = learning_rate

    @abstractmethod
    def step(self, theta: np.ndarray, gradient: np.ndarray) -> np.ndarray:
        pass


class GradientDescent(Optimizer):
    """Plain full-batch gradient descent."""

    def step(self, theta: np.ndarray, gradient: np.ndarray) -> np.ndarray:
        return theta - self.learning_rate * gradient


class Adam(Optimizer):
    """Adam with bias-corrected first and second moments."""

    def __init__(self, learning_rate: float, beta1: float = 0.9, beta2: float = 0.999, eps: float = 1e-8):
        super().__init__(learning_rate)
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self._m = None
        self._v = None
        self._t = 0

    def step(self, theta: np.ndarray, gradient: np.ndarray) -> np.ndarray:
        if self._m is None:
            self._m = np.zeros_like(theta)
            self._v = np.zeros_like(theta)
        self._t += 1
        self._m = self.beta1 * self._m + (1 - self.beta1) * gradient
        self._v = self.beta2 * self._v + (1 - self.beta2) * gradient * gradient
        m_hat = self._m / (1 - self.beta1 ** self._t)
        v_hat = self._v / (1 - self.beta2 ** self._t)
        return theta - self.learning_rate * m_hat / (np.sqrt(v_hat) + self.eps)


def make_optimizer(settings: OptimizerSettings, learning_rate: float) -> Optimizer:
    if settings.kind == "gd":
        return GradientDescent(learning_rate)
    return Adam(learning_rate, settings.beta1, settings.beta2, settings.eps)
