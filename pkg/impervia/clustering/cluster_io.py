"""
cluster_io.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import csv
import os
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .k_medoids import ClusterModel
from .sampling_weights import sampling_weights
from .temporal_signature import TemporalSignature


def _ensure_parent(path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)


def write_assignments(path: str, model: ClusterModel) -> None:
    """patch_id,cluster_label,distance の CSV を書く."""
    _ensure_parent(path)
    with open(path, "w", newline="", encoding="utf-8") as stream:
        writer = csv.writer(stream)
        writer.writerow(["patch_id", "cluster_label", "distance"])
        for i, patch_id in enumerate(model.patch_ids):
            writer.writerow([patch_id, model.label_of(i), f"{model.distances[i]:.9g}"])


def read_assignments(path: str) -> List[Tuple[str, str, float]]:
    """write_assignments で書いた CSV を (patch_id, label, distance) の列にする."""
    with open(path, newline="", encoding="utf-8") as stream:
        reader = csv.DictReader(stream)
        if reader.fieldnames != ["patch_id", "cluster_label", "distance"]:
            raise ValueError(f"{__name__}: {path} is not an assignments CSV")
        return [(row["patch_id"], row["cluster_label"], float(row["distance"])) for row in reader]


def write_weights(path: str, model: ClusterModel) -> None:
    """cluster_label,ratio,weight,persistence の CSV を書く. persistence は変化なしとみなすクラスタで 1."""
    _ensure_parent(path)
    persistence = model.persistence_cluster()
    with open(path, "w", newline="", encoding="utf-8") as stream:
        writer = csv.writer(stream)
        writer.writerow(["cluster_label", "ratio", "weight", "persistence"])
        for label, ratio, weight in zip(model.labels, model.ratios, model.sampling_weights):
            writer.writerow([label, f"{ratio:.9g}", f"{weight:.9g}", int(label == persistence)])


def read_persistence_label(path: str) -> Optional[str]:
    """write_weights で書いた CSV から persistence のクラスタのラベルを読む."""
    with open(path, newline="", encoding="utf-8") as stream:
        for row in csv.DictReader(stream):
            if row.get("persistence") == "1":
                return row["cluster_label"]
    return None


def label_weights(assignments: Sequence[Tuple[str, str, float]]) -> Dict[str, float]:
    """
    読み込んだ割り当てからパッチごとの抽出重みを求める (patch_id -> 重み).
    """
    labels = sorted({label for _, label, _ in assignments})
    counts = np.array([sum(1 for _, lab, _ in assignments if lab == label) for label in labels], dtype=np.float64)
    weights = dict(zip(labels, sampling_weights(counts / counts.sum())))
    return {patch_id: float(weights[label]) for patch_id, label, _ in assignments}


def write_signatures(path: str, signatures: Sequence[TemporalSignature]) -> None:
    """patch_id に続けて signature の値を並べた CSV を書く."""
    _ensure_parent(path)
    with open(path, "w", newline="", encoding="utf-8") as stream:
        writer = csv.writer(stream)
        for s in signatures:
            writer.writerow([s.patch_id] + [f"{v:.9g}" for v in s.values])


def read_signatures(path: str) -> List[TemporalSignature]:
    with open(path, newline="", encoding="utf-8") as stream:
        return [TemporalSignature(row[0], np.asarray(row[1:], dtype=np.float64)) for row in csv.reader(stream) if row]
