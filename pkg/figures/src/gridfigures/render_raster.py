"""Render a state raster: one pixel column per time step, one row per agent.

Pixel colors: cooperate white, ignore black, defect red. Written directly
with Pillow so the mapping is exact at scale 1.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np
from PIL import Image

from . import STATE_COLORS
from .io import SchemaError, read_raster


def render(raster: np.ndarray, scale: int = 1) -> Image.Image:
    frames, n_agents = raster.shape
    rgb = np.zeros((n_agents, frames, 3), dtype=np.uint8)
    for state, color in STATE_COLORS.items():
        rgb[raster.T == state] = color
    image = Image.fromarray(rgb, mode="RGB")
    if scale > 1:
        image = image.resize((frames * scale, n_agents * scale), Image.NEAREST)
    return image


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Render a gridcommons raster file as an image.")
    parser.add_argument("raster", help="raster.txt produced by `gridcommons run`")
    parser.add_argument("--out", required=True, help="output image path (e.g. raster.png)")
    parser.add_argument("--scale", type=int, default=1, help="integer pixel upscaling (default 1)")
    args = parser.parse_args(argv)
    try:
        raster = read_raster(args.raster)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    render(raster, args.scale).save(args.out)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
