#!/usr/bin/env python3
"""Throughput comparison of the bundle-inference backends.

Exports a randomly initialized generator, then pushes the same batch of
windows through every available numpy backend (compiled kernels and the
pure-Python fallback) plus the torch reference, reporting windows/second.

Usage: python3 benchmarks/bench_infer.py [--windows 50] [--arch ae unet]
"""

import argparse
import tempfile
import time
from pathlib import Path

import numpy as np
import torch

from imu2shoe.bundle import export_bundle, load_generator
from imu2shoe.infer import available_backends
from imu2shoe.infer.engine import BundleModel
from imu2shoe.nets import ModelSpec, build_model, initialize_weights
from imu2shoe.signals import ScalingSpec


def time_loop(fn, windows, repeats: int) -> float:
    """Best-of-N windows/second for fn over the given inputs."""
    fn(windows[0])  # warm-up
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for w in windows:
            fn(w)
        best = min(best, time.perf_counter() - start)
    return len(windows) / best


def bench_arch(arch: str, n_windows: int, repeats: int, seed: int) -> None:
    torch.manual_seed(seed)
    spec = ModelSpec(arch, out_channels=6)
    gen = build_model(spec)
    initialize_weights(gen, seed=seed)

    rng = np.random.default_rng(seed)
    windows = [rng.uniform(0, 1, size=(6, 256)).astype(np.float32)
               for _ in range(n_windows)]

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / f"{arch}.bundle"
        export_bundle(gen, spec, ScalingSpec.default(), path)

        rows = []
        outputs = {}
        for backend in available_backends():
            model = BundleModel.from_file(path, backend=backend)
            rows.append((backend, time_loop(model.translate, windows, repeats)))
            outputs[backend] = model.translate(windows[0])

        ref = load_generator(path).eval()

        def torch_translate(w):
            with torch.no_grad():
                return ref(torch.from_numpy(w[None]))[0].numpy()

        rows.append(("torch", time_loop(torch_translate, windows, repeats)))
        outputs["torch"] = torch_translate(windows[0])

    worst = max(float(np.max(np.abs(outputs[a] - outputs[b])))
                for a in outputs for b in outputs)
    base = dict(rows).get("python", rows[0][1])
    print(f"\n{arch} (6 out-channels, {n_windows} windows, best of {repeats}; "
          f"max cross-backend deviation {worst:.1e})")
    for backend, rate in sorted(rows, key=lambda r: -r[1]):
        print(f"  {backend:<8} {rate:9.1f} windows/s  ({rate / base:5.1f}x python)")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--windows", type=int, default=50)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--arch", nargs="+", default=["ae", "unet"],
                        choices=["ae", "unet"])
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    print(f"backends available: {', '.join(available_backends())}")
    for arch in args.arch:
        bench_arch(arch, args.windows, args.repeats, args.seed)


if __name__ == "__main__":
    main()
