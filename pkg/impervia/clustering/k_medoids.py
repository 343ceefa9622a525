"""
k_medoids.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import string
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt
from sklearn_extra.cluster import KMedoids  # type: ignore[import]

from .dtw import distance_matrix
from .sampling_weights import sampling_weights
from .temporal_signature import TemporalSignature

CLUSTER_INITS = ("build", "random", "k-medoids++")


@dataclass
class ClusterModel:
    """
    k-medoids の結果. クラスタ番号 0.. は平均変化の大きい順に並べ替えてあり,
    ラベル A, B, ... と対応する.
    """

    k: int
    signatures: List[TemporalSignature]
    medoids: List[int]  # signatures の添字, クラスタ番号順
    assignments: npt.NDArray[np.int64]
    distances: npt.NDArray[np.float64]  # 所属する medoid までの距離
    cost: float
    n_iter: int = 0  # PAM の交換の回数

    @property
    def labels(self) -> List[str]:
        return list(string.ascii_uppercase[:self.k])

    @property
    def patch_ids(self) -> List[str]:
        return [s.patch_id for s in self.signatures]

    @property
    def medoid_signatures(self) -> List[TemporalSignature]:
        """クラスタ番号順の代表 signature."""
        return [self.signatures[m] for m in self.medoids]

    @property
    def counts(self) -> npt.NDArray[np.int64]:
        return np.bincount(self.assignments, minlength=self.k)

    @property
    def ratios(self) -> npt.NDArray[np.float64]:
        """各クラスタに属するパッチの割合. 和は 1."""
        return self.counts / float(len(self.assignments))

    @property
    def sampling_weights(self) -> npt.NDArray[np.float64]:
        return sampling_weights(self.ratios)

    def label_of(self, patch_index: int) -> str:
        return self.labels[int(self.assignments[patch_index])]

    def index_of_label(self, label: str) -> int:
        if label not in self.labels:
            raise ValueError(f"{__name__}: unknown cluster label {label!r}, expected one of {self.labels}")
        return self.labels.index(label)

    def patch_weights(self) -> npt.NDArray[np.float64]:
        """パッチごとの抽出重み. 所属クラスタの重みをそのまま使う."""
        return self.sampling_weights[self.assignments]

    def centroids(self) -> npt.NDArray[np.float64]:
        """クラスタごとの平均 signature (k, L)."""
        stacked = np.stack([s.values for s in self.signatures])
        return np.stack([stacked[self.assignments == c].mean(axis=0) for c in range(self.k)])

    def persistence_cluster(self) -> str:
        """平均 |signature| が最も小さいクラスタのラベル. 変化なしとみなして予測を省ける."""
        abs_mean = np.array([
            np.mean([self.signatures[i].mean_abs_change for i in np.flatnonzero(self.assignments == c)])
            for c in range(self.k)
        ])
        return self.labels[int(np.argmin(abs_mean))]


def _assign(dist: npt.NDArray[np.float64], medoids: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    sub = dist[:, list(medoids)]
    assignments = np.argmin(sub, axis=1).astype(np.int64)
    # 距離 0 の重複があっても medoid は自分のクラスタに入れる.
    for c, m in enumerate(medoids):
        assignments[m] = c
    return assignments, sub[np.arange(len(sub)), assignments]


def cluster(
    signatures: Sequence[TemporalSignature],
    k: int = 5,
    seed: int = 0,
    *,
    max_iter: int = 100,
    init: str = "build",
    dist: Optional[npt.NDArray[np.float64]] = None,
    show_progress: bool = False,
) -> ClusterModel:
    """
    DTW 距離行列の上で PAM による k-medoids を行う (sklearn_extra の KMedoids, metric="precomputed").

    Parameters
    ----------
    signatures : Sequence[TemporalSignature]
        k 個以上の signature.
    seed : int
        init が "random" / "k-medoids++" のときの初期 medoid の選択に使う.
    init : str
        "build" (決定的), "random", "k-medoids++" のいずれか.
    dist : np.ndarray, optional
        計算済みの距離行列. 省略すると distance_matrix で求める.

    Returns
    -------
    model : ClusterModel
    """
    n = len(signatures)
    if k < 1 or n < k:
        raise ValueError(f"{__name__}: need at least k={k} signatures, got {n}")
    if init not in CLUSTER_INITS:
        raise ValueError(f"{__name__}: unknown init {init!r}, expected one of {CLUSTER_INITS}")
    if max_iter < 1:
        raise ValueError(f"{__name__}: max_iter must be >= 1, got {max_iter}")
    if dist is None:
        dist = distance_matrix(signatures, show_progress=show_progress)
    if dist.shape != (n, n):
        raise ValueError(f"{__name__}: distance matrix {dist.shape} does not match {n} signatures")

    if k == n:
        medoids = list(range(n))
        n_iter = 0
    else:
        kmedoids = KMedoids(n_clusters=k, metric="precomputed", method="pam", init=init,
                            max_iter=max_iter, random_state=seed)
        kmedoids.fit(dist)
        medoids = sorted(int(m) for m in kmedoids.medoid_indices_)
        n_iter = int(getattr(kmedoids, "n_iter_", 0))
    assignments, distances = _assign(dist, medoids)
    cost = float(distances.sum())

    # 平均変化の大きい順にクラスタを並べ替える (ラベル A が最も変化が大きい).
    means = np.array([
        np.mean([signatures[i].mean_change for i in np.flatnonzero(assignments == c)]) for c in range(k)
    ])
    order = sorted(range(k), key=lambda c: (-means[c], c))
    remap = np.empty(k, dtype=np.int64)
    remap[order] = np.arange(k)
    medoids = [medoids[c] for c in order]

    print(f"{__name__}: {k = }, {n = }, {init = }, cost {cost:.4f} after {n_iter} iterations")
    return ClusterModel(k, list(signatures), medoids, remap[assignments], distances, cost, n_iter)
