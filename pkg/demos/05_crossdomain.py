# Out-of-domain inference: crop dark depths, upscale, snap to multiples of
# 256, enhance at several scales. The input here is a simulated frame, but
# any grayscale dB image works (the CLI accepts PNGs too).
#
# Depends on demos/02_train_small_gan.py for the checkpoint.
# Run from the repo root: python3 demos/05_crossdomain.py

import sys
from pathlib import Path

import numpy as np

from octgan import evaluation, fringes, panels, training

root = Path(__file__).parent / "out"
checkpoints = sorted((root / "train_demo" / "run").glob("checkpoint_epoch*.pt"))
if not checkpoints:
    sys.exit("run demos/02_train_small_gan.py first")
ckpt = training.Checkpoint.load(checkpoints[-1])

rng = np.random.default_rng(5)
volume = fringes.simulate_fringes(
    fringes.random_phantom(rng, 150, extent=(60.0, 80.0)),
    fringes.micro_oct_source(samples=512),
    noise_floor=0.02,
    seed=5,
)
frame_db = fringes.reconstruct(fringes.degrade_2d(volume)).intensity_db[0]
print(f"input frame {frame_db.shape}")

pairs = evaluation.crossdomain_scale_sweep(
    frame_db,
    scales=(1, 2, 4),
    enhance_fn=lambda img: training.infer_full(img, ckpt),
)
for scale, enhanced in pairs:
    print(f"  scale {scale}: enhanced at {enhanced.shape}")

peak = frame_db.max()
panels.save_png(
    root / "crossdomain_sweep.png",
    panels.assemble_panel([img for _, img in pairs],
                          labels=[f"x{s}" for s, _ in pairs],
                          value_range=(peak - 50, peak)),
)
print(f"wrote {root / 'crossdomain_sweep.png'}")
