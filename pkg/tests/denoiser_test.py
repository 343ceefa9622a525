"""
denoiser_test.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import math
import unittest

import numpy as np
import torch
import torch.nn.functional as F
from torch import nn

from impervia.denoiser.cond_group_norm import cond_group_norm
from impervia.denoiser.conditioning_stack import ConditioningStack, batch_stacks
from impervia.denoiser.default_denoiser_param import DefaultDenoiserParam
from impervia.denoiser.fusion import SharedFusion, fuse_conditions
from impervia.denoiser.gradients import gradients
from impervia.denoiser.spade import SpadeSite, spade_modulation
from impervia.denoiser.tiny_denoiser_param import TinyDenoiserParam
from impervia.denoiser.unet import ResBlock, build_denoiser, timestep_embedding
from impervia.diffusion.forward_process import diffusion_loss
from impervia.diffusion.noise_schedule import make_schedule
from impervia.errors import GradientError, ShapeMismatchError
from impervia.raster.grid import Grid


def _perturb(model, seed, scale=0.1):
    g = torch.Generator().manual_seed(seed)
    with torch.no_grad():
        for p in model.parameters():
            p.add_(scale * torch.randn(p.shape, generator=g, dtype=p.dtype))


def _conv3x3_oracle(x, weight, bias):
    """零パディングの 3x3 畳み込みを画素ごとのループで計算する."""
    batch, cin, height, width = x.shape
    cout = weight.shape[0]
    padded = np.pad(x, ((0, 0), (0, 0), (1, 1), (1, 1)))
    out = np.zeros((batch, cout, height, width))
    for b in range(batch):
        for o in range(cout):
            for r in range(height):
                for c in range(width):
                    out[b, o, r, c] = bias[o] + np.sum(weight[o] * padded[b, :, r:r + 3, c:c + 3])
    return out


class TestConditioningStack(unittest.TestCase):
    """
    Test cases for ConditioningStack.
    """

    def test_from_grids(self):
        """
        nodata becomes 0 % imperviousness and likelihood 0.
        """

        mask = np.array([[True, False], [False, False]])
        imp = Grid.continuous([[80.0, 50.0], [0.0, 100.0]], nodata_mask=mask)
        lik = Grid.continuous([[0.3, 0.2], [0.1, 1.0]], nodata_mask=mask, value_range=(0.0, 1.0))
        stack = ConditioningStack.from_grids([imp, imp], [lik, lik], (2004, 2006))
        np.testing.assert_allclose(stack.imperviousness[0], [[-1.0, 0.0], [-1.0, 1.0]])
        np.testing.assert_allclose(stack.likelihood[1], [[0.0, 0.2], [0.1, 1.0]])
        self.assertEqual((stack.n_cond, stack.side), (2, 2))
        self.assertEqual(tuple(stack.to_tensor().shape), (2, 2, 2, 2))
        self.assertEqual(tuple(batch_stacks([stack, stack]).shape), (2, 2, 2, 2, 2))

    def test_mismatch(self):
        with self.assertRaises(ShapeMismatchError):
            ConditioningStack(np.zeros((3, 4, 4)), np.zeros((2, 4, 4)))
        with self.assertRaises(ShapeMismatchError):
            ConditioningStack(np.zeros((3, 4, 4)), np.zeros((3, 4, 4)), (2001, 2004))


class TestFusion(unittest.TestCase):
    """
    Test cases for fuse_conditions.
    """

    def setUp(self):
        self.stack = torch.rand((2, 3, 2, 5, 5), dtype=torch.float64)

    def test_projection(self):
        """
        w = [1, 0], b = 0 picks I_t.
        """

        weight = torch.tensor([1.0, 0.0], dtype=torch.float64).reshape(1, 2, 1, 1)
        out = fuse_conditions(self.stack, weight, torch.zeros(1, dtype=torch.float64))
        torch.testing.assert_close(out, self.stack[:, :, 0])

    def test_constant(self):
        weight = torch.zeros((1, 2, 1, 1), dtype=torch.float64)
        out = fuse_conditions(self.stack, weight, torch.tensor([0.7], dtype=torch.float64))
        torch.testing.assert_close(out, torch.full((2, 3, 5, 5), 0.7, dtype=torch.float64))

    def test_pixel_oracle(self):
        """
        Random weights give the per-pixel affine map of each pair.
        """

        w0, w1, b = 0.3, -1.2, 0.05
        weight = torch.tensor([w0, w1], dtype=torch.float64).reshape(1, 2, 1, 1)
        out = fuse_conditions(self.stack, weight, torch.tensor([b], dtype=torch.float64)).numpy()
        s = self.stack.numpy()
        for i in range(2):
            for n in range(3):
                for r in range(5):
                    for c in range(5):
                        self.assertAlmostEqual(out[i, n, r, c], w0 * s[i, n, 0, r, c] + w1 * s[i, n, 1, r, c] + b)

    def test_channel_permutation(self):
        """
        Swapping I and Lambda together with the weights leaves the output unchanged.
        """

        weight = torch.tensor([0.4, 0.9], dtype=torch.float64).reshape(1, 2, 1, 1)
        bias = torch.tensor([0.1], dtype=torch.float64)
        a = fuse_conditions(self.stack, weight, bias)
        b = fuse_conditions(self.stack.flip(2), weight.flip(1), bias)
        torch.testing.assert_close(a, b)

    def test_shared_weights(self):
        fusion = SharedFusion(3)
        self.assertEqual(tuple(fusion.conv.weight.shape), (1, 2, 1, 1))
        self.assertEqual(tuple(fusion(self.stack.float()).shape), (2, 3, 5, 5))
        with self.assertRaises(ShapeMismatchError):
            fusion(torch.rand((2, 4, 2, 5, 5)))


class TestSpade(unittest.TestCase):
    """
    Test cases for spade_modulation.
    """

    def setUp(self):
        torch.manual_seed(0)
        self.site = SpadeSite(3, 4, 2).double()
        self.fused = torch.rand((1, 3, 6, 6), dtype=torch.float64)

    def test_zero_init(self):
        gamma, beta = spade_modulation(self.fused, self.site)
        self.assertEqual(float(gamma.abs().max()), 0.0)
        self.assertEqual(float(beta.abs().max()), 0.0)

    def test_gamma_bias(self):
        """
        Zero trunk and gamma bias 0.5 give gamma = 0.5 everywhere.
        """

        with torch.no_grad():
            self.site.trunk.weight.zero_()
            self.site.gamma.bias.fill_(0.5)
        gamma, _ = spade_modulation(self.fused, self.site)
        torch.testing.assert_close(gamma, torch.full_like(gamma, 0.5))

    def test_conv_oracle(self):
        """
        Random weights match a brute-force convolution, and resizing takes the nearest pixel.
        """

        _perturb(self.site, 1, 0.5)
        gamma, beta = spade_modulation(self.fused, self.site)
        s = self.site
        actv = np.maximum(_conv3x3_oracle(self.fused.numpy(), s.trunk.weight.detach().numpy(),
                                          s.trunk.bias.detach().numpy()), 0.0)
        np.testing.assert_allclose(
            gamma.detach().numpy(),
            _conv3x3_oracle(actv, s.gamma.weight.detach().numpy(), s.gamma.bias.detach().numpy()), atol=1e-12)
        np.testing.assert_allclose(
            beta.detach().numpy(),
            _conv3x3_oracle(actv, s.beta.weight.detach().numpy(), s.beta.bias.detach().numpy()), atol=1e-12)

        small, _ = spade_modulation(self.fused, self.site, (3, 3))
        torch.testing.assert_close(small, gamma[:, :, ::2, ::2])


class TestCondGroupNorm(unittest.TestCase):
    """
    Test cases for cond_group_norm.
    """

    def test_identity_modulation(self):
        h = torch.randn((2, 4, 5, 5), dtype=torch.float64)
        zero = torch.zeros_like(h)
        torch.testing.assert_close(cond_group_norm(h, zero, zero, 2), F.group_norm(h, 2, eps=1e-5))
        torch.testing.assert_close(cond_group_norm(h, None, None, 2), F.group_norm(h, 2, eps=1e-5))

    def test_constant_input(self):
        """
        A constant group normalizes to 0 so the output is beta.
        """

        h = torch.full((1, 2, 3, 3), 4.0, dtype=torch.float64)
        gamma = torch.rand_like(h)
        beta = torch.rand_like(h)
        torch.testing.assert_close(cond_group_norm(h, gamma, beta, 2), beta)

    def test_group_statistics(self):
        """
        Random input matches per-group mean / variance.
        """

        g = torch.Generator().manual_seed(2)
        h = torch.randn((2, 6, 4, 4), generator=g, dtype=torch.float64)
        gamma = torch.randn((2, 6, 4, 4), generator=g, dtype=torch.float64)
        beta = torch.randn((2, 6, 4, 4), generator=g, dtype=torch.float64)
        out = cond_group_norm(h, gamma, beta, 3).numpy()
        x = h.numpy()
        for b in range(2):
            for k in range(3):
                block = x[b, 2 * k:2 * k + 2]
                norm = (block - block.mean()) / np.sqrt(block.var() + 1e-5)
                expected = norm * (1.0 + gamma.numpy()[b, 2 * k:2 * k + 2]) + beta.numpy()[b, 2 * k:2 * k + 2]
                np.testing.assert_allclose(out[b, 2 * k:2 * k + 2], expected, atol=1e-10)

    def test_divisibility(self):
        with self.assertRaises(ValueError):
            cond_group_norm(torch.zeros((1, 3, 2, 2)), None, None, 2)


class TestDenoiserForward(unittest.TestCase):
    """
    Test cases for the UNet forward pass.
    """

    def test_zero_parameters(self):
        model = build_denoiser(TinyDenoiserParam(), seed=0)
        with torch.no_grad():
            for p in model.parameters():
                p.zero_()
        out = model(torch.randn((2, 1, 8, 8)), 5, torch.rand((2, 3, 2, 8, 8)))
        self.assertEqual(float(out.abs().max()), 0.0)

    def test_shapes(self):
        """
        Output shape equals input shape for sides 16, 32, 64.
        """

        model = build_denoiser(DefaultDenoiserParam(), seed=0)
        for side in (16, 32, 64):
            x = torch.randn((1, 1, side, side))
            out = model(x, torch.tensor([10]), torch.rand((1, 3, 2, side, side)))
            self.assertEqual(out.shape, x.shape)

    def test_shape_errors(self):
        model = build_denoiser(DefaultDenoiserParam(), seed=0)
        with self.assertRaises(ShapeMismatchError):
            model(torch.randn((1, 1, 30, 30)), 1, None)
        with self.assertRaises(ShapeMismatchError):
            model(torch.randn((1, 1, 16, 16)), 1, torch.rand((1, 3, 2, 8, 8)))
        with self.assertRaises(ShapeMismatchError):
            model(torch.randn((1, 1, 16, 16)), 1, torch.rand((1, 2, 2, 16, 16)))

    def test_group_check(self):
        param = TinyDenoiserParam()
        param.gn_groups = 3
        with self.assertRaises(ValueError):
            ResBlock(2, 2, param)

    def test_modulation_identity(self):
        """
        Untrained SPADE sites make the conditional output equal the unconditional twin.
        """

        model = build_denoiser(DefaultDenoiserParam(), seed=3)
        x = torch.randn((2, 1, 16, 16))
        torch.testing.assert_close(model(x, 7, torch.rand((2, 3, 2, 16, 16))), model(x, 7, None))

    def test_deterministic(self):
        a = build_denoiser(TinyDenoiserParam(), seed=4)
        b = build_denoiser(TinyDenoiserParam(), seed=4)
        x = torch.randn((1, 1, 8, 8))
        cond = torch.rand((1, 3, 2, 8, 8))
        torch.testing.assert_close(a(x, 3, cond), b(x, 3, cond), rtol=0, atol=0)

    def test_timestep_embedding(self):
        emb = timestep_embedding(torch.tensor([0, 3]), 5, torch.float64)
        self.assertEqual(tuple(emb.shape), (2, 5))
        freqs = np.exp(-math.log(10000.0) * np.arange(2) / 2)
        np.testing.assert_allclose(emb[1, :2].numpy(), np.cos(3 * freqs))
        np.testing.assert_allclose(emb[1, 2:4].numpy(), np.sin(3 * freqs))
        self.assertEqual(float(emb[1, 4]), 0.0)

    def test_tiny_oracle(self):
        """
        The depth-1 model equals a straight-line composition of its layers.
        """

        model = build_denoiser(TinyDenoiserParam(), seed=5).double()
        _perturb(model, 6)
        g = torch.Generator().manual_seed(7)
        x = torch.randn((2, 1, 8, 8), generator=g, dtype=torch.float64)
        cond = torch.rand((2, 3, 2, 8, 8), generator=g, dtype=torch.float64)
        t = torch.tensor([3, 40])

        def site(s, fused):
            a = F.relu(F.conv2d(fused, s.trunk.weight, s.trunk.bias, padding=1))
            return (F.conv2d(a, s.gamma.weight, s.gamma.bias, padding=1),
                    F.conv2d(a, s.beta.weight, s.beta.bias, padding=1))

        def norm(h, gamma, beta, groups=2):
            grouped = h.reshape(h.shape[0], groups, -1)
            mean = grouped.mean(dim=2, keepdim=True)
            var = grouped.var(dim=2, unbiased=False, keepdim=True)
            return ((grouped - mean) / torch.sqrt(var + 1e-5)).reshape(h.shape) * (1 + gamma) + beta

        def block(b, h, emb, fused):
            g1, b1 = site(b.site1, fused)
            out = F.conv2d(F.silu(norm(h, g1, b1)), b.conv1.weight, b.conv1.bias, padding=1)
            out = out + F.linear(emb, b.time_proj.weight, b.time_proj.bias)[:, :, None, None]
            g2, b2 = site(b.site2, fused)
            out = F.conv2d(F.silu(norm(out, g2, b2)), b.conv2.weight, b.conv2.bias, padding=1)
            skip = h if isinstance(b.skip, nn.Identity) else F.conv2d(h, b.skip.weight, b.skip.bias)
            return skip + out

        with torch.no_grad():
            w = model.fusion.conv.weight.reshape(2)
            fused = w[0] * cond[:, :, 0] + w[1] * cond[:, :, 1] + model.fusion.conv.bias[0]
            half = np.exp(-math.log(10000.0) * np.arange(2) / 2)
            args = t.double()[:, None] * torch.from_numpy(half)[None, :]
            emb = torch.cat([torch.cos(args), torch.sin(args)], dim=1)
            m = model.time_mlp
            emb = F.linear(F.silu(F.linear(emb, m[0].weight, m[0].bias)), m[2].weight, m[2].bias)
            h = F.conv2d(x, model.in_conv.weight, model.in_conv.bias, padding=1)
            skip = block(model.down[0], h, emb, fused)
            h = block(model.mid, skip, emb, fused)
            h = block(model.up[0], torch.cat([h, skip], dim=1), emb, fused)
            expected = F.conv2d(F.silu(h), model.out_conv.weight, model.out_conv.bias, padding=1)
            torch.testing.assert_close(model(x, t, cond), expected)


class TestGradients(unittest.TestCase):
    """
    Test cases for gradients.
    """

    def setUp(self):
        self.schedule = make_schedule(50)
        self.model = build_denoiser(TinyDenoiserParam(), seed=0).double()
        _perturb(self.model, 1)
        g = torch.Generator().manual_seed(2)
        self.x0 = torch.rand((2, 1, 8, 8), generator=g, dtype=torch.float64) * 2.0 - 1.0
        self.cond = torch.rand((2, 3, 2, 8, 8), generator=g, dtype=torch.float64)

    def _loss(self, cond, seed=0):
        return float(diffusion_loss(self.model, self.x0, cond, self.schedule, torch.Generator().manual_seed(seed)))

    def test_finite_differences(self):
        """
        Every parameter tensor agrees with central differences to 1e-4 relative.
        """

        grads = gradients(self.model, self.x0, self.cond, self.schedule, seed=0)
        step = 1e-4
        with torch.no_grad():
            for name, param in self.model.named_parameters():
                flat = param.view(-1)
                numeric = torch.zeros_like(flat)
                for i in range(flat.numel()):
                    original = float(flat[i])
                    flat[i] = original + step
                    plus = self._loss(self.cond)
                    flat[i] = original - step
                    minus = self._loss(self.cond)
                    flat[i] = original
                    numeric[i] = (plus - minus) / (2.0 * step)
                analytic = grads[name].reshape(-1)
                scale = max(float(numeric.norm() + analytic.norm()), 1e-8)
                self.assertLess(float((numeric - analytic).norm()) / scale, 1e-4, name)

    def test_covers_conditioning(self):
        """
        Fusion and SPADE parameters receive non-zero gradients.
        """

        grads = gradients(self.model, self.x0, self.cond, self.schedule)
        self.assertEqual(set(grads), {name for name, _ in self.model.named_parameters()})
        self.assertGreater(float(grads["fusion.conv.weight"].abs().sum()), 0.0)
        self.assertGreater(float(grads["down.0.site1.gamma.weight"].abs().sum()), 0.0)

    def test_dead_branch(self):
        """
        Without conditioning the fusion and SPADE parameters get zero gradients.
        """

        grads = gradients(self.model, self.x0, None, self.schedule)
        self.assertEqual(float(grads["fusion.conv.weight"].abs().sum()), 0.0)
        self.assertEqual(float(grads["mid.site2.trunk.bias"].abs().sum()), 0.0)

    def test_linearity(self):
        """
        Doubling the loss doubles every gradient.
        """

        grads = gradients(self.model, self.x0, self.cond, self.schedule, seed=3)
        loss = diffusion_loss(self.model, self.x0, self.cond, self.schedule, torch.Generator().manual_seed(3))
        params = list(self.model.parameters())
        doubled = torch.autograd.grad(2.0 * loss, params, allow_unused=True)
        for (name, _), grad in zip(self.model.named_parameters(), doubled):
            expected = torch.zeros_like(grads[name]) if grad is None else grad
            torch.testing.assert_close(expected, 2.0 * grads[name])

    def test_nan(self):
        with torch.no_grad():
            self.model.out_conv.bias.fill_(float("nan"))
        with self.assertRaises(GradientError):
            gradients(self.model, self.x0, self.cond, self.schedule)


if __name__ == "__main__":
    unittest.main()
