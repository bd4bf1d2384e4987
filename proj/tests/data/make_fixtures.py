"""Regenerates the 256x256 grayscale PGM fixtures from scikit-image's bundled photos.

cameraman (CC0), astronaut (NASA, public domain) and coffee (CC0) are center-cropped to a
square, resized with anti-aliasing and rounded to 8 bits.
"""
import numpy as np
import skimage.data as data
from skimage.color import rgb2gray
from skimage.transform import resize

SOURCES = {"cameraman": data.camera, "astronaut": data.astronaut, "coffee": data.coffee}

for name, load in SOURCES.items():
    im = load()
    if im.ndim == 3:
        im = rgb2gray(im) * 255
    im = np.asarray(im, float)
    h, w = im.shape
    s = min(h, w)
    im = im[(h - s) // 2:(h - s) // 2 + s, (w - s) // 2:(w - s) // 2 + s]
    g = np.clip(np.round(resize(im, (256, 256), anti_aliasing=True, preserve_range=True)), 0, 255)
    with open(f"{name}.pgm", "wb") as f:
        f.write(b"P5\n256 256\n255\n" + g.astype(np.uint8).tobytes())
