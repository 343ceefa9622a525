"""
gradients.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Dict, Optional

import torch
from torch import nn

from ..diffusion.forward_process import diffusion_loss
from ..diffusion.noise_schedule import NoiseSchedule
from ..errors import GradientError


def gradients(
    model: nn.Module,
    x0: torch.Tensor,
    cond: Optional[torch.Tensor],
    schedule: NoiseSchedule,
    seed: int = 0,
) -> Dict[str, torch.Tensor]:
    """
    1バッチぶんの損失に対する全パラメータの勾配を返す. キーは state_dict の名前.
    使われないパラメータの勾配は 0.
    """
    generator = torch.Generator().manual_seed(seed)
    named = [(name, p) for name, p in model.named_parameters() if p.requires_grad]
    loss = diffusion_loss(model, x0, cond, schedule, generator)
    grads = torch.autograd.grad(loss, [p for _, p in named], allow_unused=True)

    out: Dict[str, torch.Tensor] = {}
    for (name, param), grad in zip(named, grads):
        grad = torch.zeros_like(param) if grad is None else grad.detach()
        if not torch.isfinite(grad).all():
            raise GradientError(f"{__name__}: non-finite gradient in {name}")
        out[name] = grad
    return out
