#!/usr/bin/env python3
# Copyright 2026 The Snapcode Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates src/glyph_atlas_data.inc from DejaVu Sans Mono.

The generated table is committed; this script only needs to run when the
atlas changes (bump ATLAS_ID when it does).
"""

import argparse
import sys

from PIL import Image, ImageDraw, ImageFont

ATLAS_ID = "dejavu-sans-mono-16px-10x20-v1"
CELL_W = 10
CELL_H = 20
FONT_PX = 16
TOP_PAD = 1
THRESHOLD = 96


def render_glyph(font, ch):
    img = Image.new("L", (CELL_W, CELL_H), 0)
    ImageDraw.Draw(img).text((0, TOP_PAD), ch, fill=255, font=font)
    rows = []
    for y in range(CELL_H):
        bits = 0
        for x in range(CELL_W):
            if img.getpixel((x, y)) >= THRESHOLD:
                bits |= 1 << (CELL_W - 1 - x)
        rows.append(bits)
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--font", default="/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf")
    ap.add_argument("-o", "--out", default="-")
    args = ap.parse_args()

    font = ImageFont.truetype(args.font, FONT_PX)
    out = sys.stdout if args.out == "-" else open(args.out, "w")
    out.write("// Generated by tools/gen_glyph_atlas.py. Do not edit.\n")
    out.write(f"// Source font: DejaVu Sans Mono (Bitstream Vera license), {FONT_PX}px.\n\n")
    out.write(f'inline constexpr std::string_view kBuiltinAtlasId = "{ATLAS_ID}";\n')
    out.write(f"inline constexpr int kBuiltinCellWidth = {CELL_W};\n")
    out.write(f"inline constexpr int kBuiltinCellHeight = {CELL_H};\n")
    out.write("inline constexpr char32_t kBuiltinFirstCodePoint = 0x20;\n")
    out.write("inline constexpr char32_t kBuiltinLastCodePoint = 0x7e;\n\n")
    out.write("// One row bitmask per pixel row, MSB is the leftmost column.\n")
    out.write(f"inline constexpr std::uint16_t kBuiltinGlyphRows[95][{CELL_H}] = {{\n")
    for cp in range(0x20, 0x7F):
        ch = chr(cp)
        rows = [0] * CELL_H if ch == " " else render_glyph(font, ch)
        body = ", ".join(f"0x{r:03x}" for r in rows)
        label = "space" if ch == " " else ("backslash" if ch == "\\" else ch)
        out.write(f"    {{{body}}},  // {label}\n")
    out.write("};\n")


if __name__ == "__main__":
    main()
