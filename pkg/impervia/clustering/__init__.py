"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .cluster_io import (
    label_weights,
    read_assignments,
    read_persistence_label,
    read_signatures,
    write_assignments,
    write_signatures,
    write_weights,
)
from .dtw import distance_matrix, dtw
from .k_medoids import CLUSTER_INITS, ClusterModel, cluster
from .sampling_weights import sampling_weights
from .temporal_signature import SIGNATURE_STATS, TemporalSignature, signature

__all__ = [
    "label_weights",
    "read_assignments",
    "read_persistence_label",
    "read_signatures",
    "write_assignments",
    "write_signatures",
    "write_weights",
    "distance_matrix",
    "dtw",
    "CLUSTER_INITS",
    "ClusterModel",
    "cluster",
    "sampling_weights",
    "SIGNATURE_STATS",
    "TemporalSignature",
    "signature",
]
