"""
sample_main4.py
小さなデノイザを合成課題で学習し, 予測を変化なしモデルと比べるサンプルプログラム.
CPU でも数分で終わる大きさにしてあります.
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import numpy as np
import torch

import impervia as imp
from impervia.raster.synthetic_series import ToySample


def to_stack(sample: ToySample) -> imp.ConditioningStack:
    return imp.ConditioningStack(imp.percent_to_latent(sample.history), sample.likelihood)


if __name__ == "__main__":
    # truth = past + 5 * Lambda となる合成課題です.
    train_samples = imp.make_toy_task(64, seed=0)
    test_samples = imp.make_toy_task(4, seed=1)

    dataset = imp.ForecastDataset.from_stacks([s.truth for s in train_samples], [to_stack(s) for s in train_samples])
    schedule = imp.make_schedule(1000)

    # DefaultDenoiserParam を書き換えると UNet の大きさを変えられます.
    model = imp.build_denoiser(imp.DefaultDenoiserParam(), seed=0)
    result = imp.train(model, dataset, schedule, imp.TrainParam(learning_rate=1e-3, steps=2000))
    model.load_state_dict(result.ema_params)
    model.eval()
    print(f"final loss = {result.loss_history[-1]:.4f}")

    preds = []
    for index, sample in enumerate(test_samples):
        cond = to_stack(sample).to_tensor()[None]
        x = imp.ddim_sample(model, cond, schedule, torch.Generator().manual_seed(index), steps=50)
        preds.append(imp.latent_to_percent(x[0, 0].numpy().astype(np.float64)))

    # 4 枚を横に並べて 1 つの AOI として評価します.
    pred = imp.Grid.continuous(np.concatenate(preds, axis=1))
    past = imp.Grid.continuous(np.concatenate([s.past for s in test_samples], axis=1))
    truth = imp.Grid.continuous(np.concatenate([s.truth for s in test_samples], axis=1))
    report = imp.evaluate([pred], past, truth, (1, 2, 4, 8, 16, 32), name="toy")
    print(imp.format_report(report))
    imp.CurveDisplayer().save(report, "result/sample_main4.svg")
