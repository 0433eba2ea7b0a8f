"""End-to-end miniature: simulate volumes, build a patch dataset, train a
small cGAN for a few epochs, and render val patches before/after.

Run from the repo root: python3 demos/02_train_small_gan.py
Takes a couple of minutes on CPU. Artifacts land in demos/out/train_demo/.
Bump EPOCHS for something closer to a real run.
"""

from pathlib import Path

import numpy as np

from octgan import GeneratorConfig, TrainConfig, panels, training
from octgan import dataset as ds
from octgan.cli import cmd_dataset, cmd_simulate

EPOCHS = 6

root = Path(__file__).parent / "out" / "train_demo"
root.mkdir(parents=True, exist_ok=True)

volumes = []
for idx, seed in enumerate((21, 22, 23)):
    path = root / f"vol{idx}.oct"
    if not path.exists():
        cmd_simulate(path, seed=seed, scatterers=700, extent_lat=410.0,
                     extent_depth=100.0, frames=2, noise_floor=0.02)
    volumes.append(path)

manifest = cmd_dataset(volumes, root / "dataset", mode="2d", frames="single",
                       train_count=2, val_count=1, seed=0)

result = training.train(
    manifest,
    gen_cfg=GeneratorConfig(depth=5, base_channels=8, max_channels=32),
    train_cfg=TrainConfig(epochs=EPOCHS, batch_size=4, seed=0),
    out_dir=root / "run",
)
training.export_curves_csv(result.records, root / "run" / "curves.csv")
print(f"trained {len(result.records)} generator steps; "
      f"final L1 {result.records[-1].l1_component:.4f}")

low, high = ds.load_split_arrays(ds.DatasetManifest.load(manifest), "val")
low, high = low[:4], high[:4]
enhanced = training.enhance_patches(result.checkpoint, low)
tiles, labels = [], []
for i in range(len(low)):
    tiles += [low[i], enhanced[i], high[i]]
    labels += ["input", "enhanced", "truth"]
panels.save_png(root / "val_patches.png",
                panels.assemble_panel(tiles, labels=labels, columns=3, value_range=(-1, 1)))
print(f"wrote {root / 'val_patches.png'} and {root / 'run' / 'curves.csv'}")
