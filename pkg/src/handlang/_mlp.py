"""Minimal two-hidden-layer softmax network (Adam, early stopping).

Hand-rolled on numpy so that training is fully seed-deterministic and model
files round-trip as plain JSON.
"""

from __future__ import annotations

import numpy as np


def softmax(z: np.ndarray) -> np.ndarray:
    z = z - z.max(axis=-1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)


def forward(weights: list[np.ndarray], x: np.ndarray) -> np.ndarray:
    w1, b1, w2, b2, w3, b3 = weights
    h1 = np.tanh(x @ w1 + b1)
    h2 = np.tanh(h1 @ w2 + b2)
    return softmax(h2 @ w3 + b3)


def init_weights(sizes: list[int], rng: np.random.Generator) -> list[np.ndarray]:
    weights: list[np.ndarray] = []
    for a, b in zip(sizes, sizes[1:]):
        weights.append(rng.normal(0.0, np.sqrt(2.0 / a), size=(a, b)))
        weights.append(np.zeros(b))
    return weights


def train_mlp(x: np.ndarray, y: np.ndarray, n_classes: int, *,
              hidden: tuple[int, int] = (32, 32), seed: int = 0, epochs: int = 200,
              batch_size: int = 64, learning_rate: float = 3e-3,
              patience: int = 20) -> list[np.ndarray]:
    """Maximum-likelihood fit; early stopping on a held-out eighth."""
    rng = np.random.default_rng(seed)
    weights = init_weights([x.shape[1], hidden[0], hidden[1], n_classes], rng)

    order = rng.permutation(len(x))
    n_val = max(1, len(x) // 8)
    val_idx, train_idx = order[:n_val], order[n_val:]
    if len(train_idx) == 0:
        train_idx = val_idx
    xt, yt = x[train_idx], y[train_idx]
    xv, yv = x[val_idx], y[val_idx]

    m = [np.zeros_like(w) for w in weights]
    v = [np.zeros_like(w) for w in weights]
    beta1, beta2, eps = 0.9, 0.999, 1e-8
    best_loss, best_weights, bad_epochs, step = np.inf, [w.copy() for w in weights], 0, 0

    for _ in range(epochs):
        perm = rng.permutation(len(xt))
        for s in range(0, len(xt), batch_size):
            idx = perm[s:s + batch_size]
            xb, yb = xt[idx], yt[idx]
            w1, b1, w2, b2, w3, b3 = weights
            h1 = np.tanh(xb @ w1 + b1)
            h2 = np.tanh(h1 @ w2 + b2)
            probs = softmax(h2 @ w3 + b3)
            delta3 = probs.copy()
            delta3[np.arange(len(yb)), yb] -= 1.0
            delta3 /= len(yb)
            grads = [None] * 6
            grads[4] = h2.T @ delta3
            grads[5] = delta3.sum(axis=0)
            delta2 = (delta3 @ w3.T) * (1.0 - h2 ** 2)
            grads[2] = h1.T @ delta2
            grads[3] = delta2.sum(axis=0)
            delta1 = (delta2 @ w2.T) * (1.0 - h1 ** 2)
            grads[0] = xb.T @ delta1
            grads[1] = delta1.sum(axis=0)
            step += 1
            for i, g in enumerate(grads):
                m[i] = beta1 * m[i] + (1 - beta1) * g
                v[i] = beta2 * v[i] + (1 - beta2) * g * g
                mh = m[i] / (1 - beta1 ** step)
                vh = v[i] / (1 - beta2 ** step)
                weights[i] = weights[i] - learning_rate * mh / (np.sqrt(vh) + eps)
        val_probs = forward(weights, xv)
        val_loss = float(-np.log(val_probs[np.arange(len(yv)), yv] + 1e-12).mean())
        if val_loss < best_loss - 1e-5:
            best_loss = val_loss
            best_weights = [w.copy() for w in weights]
            bad_epochs = 0
        else:
            bad_epochs += 1
            if bad_epochs >= patience:
                break
    return best_weights
