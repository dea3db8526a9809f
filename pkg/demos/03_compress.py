"""Quantize and compress an octree, then check what the round trip costs.

Colors are vector-quantized with a deterministic median-cut codebook
(one 2^16-entry codebook per basis function), densities kept at half
precision, and the whole payload DEFLATE-compressed.
"""
import pathlib
import time

import numpy as np

from octrad import RenderConfig, render_image
from octrad import codec
from octrad.convert import ConversionConfig, convert
from octrad.scenes import make_camera_rig, make_oracle

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

oracle = make_oracle("sh_sphere", seed=3)
cams = make_camera_rig(8, 3.2, resolution=256, focal=1.2 * 256)
tree = convert(oracle, cams, ConversionConfig(
    n_grid=128, lmax=2, samples_per_leaf=8, use_auto_bbox=False))
print(f"tree: {tree.n_leaves} leaves")

raw = codec.encode_raw(tree)
t0 = time.time()
comp = codec.encode_compressed(tree)
print(f"raw {len(raw) / 1e6:.1f} MB -> compressed {len(comp) / 1e6:.1f} MB "
      f"({len(comp) / len(raw):.1%}) in {time.time() - t0:.0f}s")

(out / "sphere.ploc").write_bytes(raw)
(out / "sphere.plocz").write_bytes(comp)

back = codec.decode(comp)
assert np.array_equal(back.children, tree.children), "topology must survive"

cfg = RenderConfig()
a = render_image(tree, cams[0], cfg)
b = render_image(back, cams[0], cfg)
print(f"render PSNR after quantization: "
      f"{-10 * np.log10(np.mean((a - b) ** 2)):.1f} dB")
print("wrote", out / "sphere.ploc", "and", out / "sphere.plocz")
