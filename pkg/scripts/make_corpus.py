"""Regenerate tests/data/corpus/ from the sample images bundled with scikit-image.

Each image is converted to 8-bit greyscale and centre-cropped so the whole
corpus round-trips quickly under all four systems.
"""

from pathlib import Path

import numpy as np
import skimage.data
from skimage.color import rgb2gray
from skimage.util import img_as_ubyte

from i2icodec.pgm import write_pgm

# name -> crop (height, width); one odd size exercises edge padding
IMAGES = {
    "camera": (256, 256),
    "moon": (256, 256),
    "coins": (256, 256),
    "brick": (256, 256),
    "grass": (256, 256),
    "gravel": (256, 256),
    "chelsea": (256, 256),
    "astronaut": (256, 256),
    "text": (171, 250),
    "page": (190, 256),
    "coffee": (256, 256),
    "rocket": (203, 250),
}


def load(name: str) -> np.ndarray:
    img = getattr(skimage.data, name)()
    if img.ndim == 3:
        img = img_as_ubyte(rgb2gray(img[..., :3]))
    return img_as_ubyte(img)


def centre_crop(img: np.ndarray, h: int, w: int) -> np.ndarray:
    y = (img.shape[0] - h) // 2
    x = (img.shape[1] - w) // 2
    return img[y : y + h, x : x + w]


def main(out_dir: Path = Path(__file__).resolve().parents[1] / "tests" / "data" / "corpus"):
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, (h, w) in IMAGES.items():
        img = load(name)
        h, w = min(h, img.shape[0]), min(w, img.shape[1])
        write_pgm(centre_crop(img, h, w), out_dir / f"{name}.pgm")
        print(f"{name}: {w}x{h}")


if __name__ == "__main__":
    main()
