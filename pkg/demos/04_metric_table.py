"""Quantitative before/after table for a trained checkpoint.

Depends on demos/02_train_small_gan.py having run (it leaves a dataset and a
checkpoint under demos/out/train_demo/). Prints the markdown table and writes
the CSV next to it.

Run from the repo root: python3 demos/04_metric_table.py
"""

import sys
from pathlib import Path

from octgan import evaluation

root = Path(__file__).parent / "out" / "train_demo"
manifest = root / "dataset" / "manifest.jsonl"
checkpoints = sorted((root / "run").glob("checkpoint_epoch*.pt"))
if not manifest.exists() or not checkpoints:
    sys.exit("run demos/02_train_small_gan.py first")

report = evaluation.evaluate(checkpoints[-1], manifest, mode="2d", frames="single")
report.to_csv(root / "metrics.csv")
print(report.to_markdown())
print(f"\nwrote {root / 'metrics.csv'}")
