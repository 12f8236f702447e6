#!/usr/bin/env python3
"""Regenerate the natural-image fixtures under tests/data.

Each image is a scikit-image sample picture: converted to 8-bit gray,
center-cropped to a square and resized to 256x256, then written as binary PGM.
"""
import pathlib
import sys

import numpy as np
import skimage.data
from skimage.color import rgb2gray
from skimage.transform import resize

NAMES = ["camera", "moon", "coins", "astronaut", "coffee", "chelsea", "clock", "brick", "grass", "gravel",
         "immunohistochemistry", "hubble_deep_field"]
SIZE = 256


def to_unit_gray(img):
    if img.ndim == 3:
        img = rgb2gray(img[..., :3])
        return img
    return img.astype(np.float64) / 255.0


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in NAMES:
        gray = to_unit_gray(getattr(skimage.data, name)())
        h, w = gray.shape
        side = min(h, w)
        top, left = (h - side) // 2, (w - side) // 2
        square = gray[top:top + side, left:left + side]
        small = resize(square, (SIZE, SIZE), anti_aliasing=True)
        pixels = np.clip(np.rint(small * 255.0), 0, 255).astype(np.uint8)
        with open(out / f"{name}.pgm", "wb") as f:
            f.write(f"P5\n{SIZE} {SIZE}\n255\n".encode())
            f.write(pixels.tobytes())
        print(out / f"{name}.pgm")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "tests" / "data")
