"""Pictures: arc diagrams as SVG and Hasse diagrams as DOT.

Writes into demos/out/.  The same drawings are reachable from the
command line, e.g.

    weakorder sn arcs 25143 --format svg --out arcs.svg
    weakorder render arcs --n 4 --mode circle '<2,7|5 6|3 4>' --out w.svg
    weakorder render hasse --kind sn --n 3 --out hasse.dot

(quote the window and arc arguments: ~, < and | are shell syntax).
"""

from __future__ import annotations

from pathlib import Path

from weakorder.lattices import weak_order_poset
from weakorder.render import render_arcs, render_hasse
from weakorder.sn import lower_arcs_sn, parse_perm
from weakorder.tito import parse_wrapped_arc

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)

# Lower arcs of a permutation on a horizontal baseline.
arcs = lower_arcs_sn(parse_perm("25143"))
svg = render_arcs(arcs, mode="line", n=5)
(out / "arcs_25143.svg").write_text(svg)

# A wrapped arc drawn on the residue circle, translates spiraling out.
w = parse_wrapped_arc("<2,7|5 6|3 4>", 4)
svg = render_arcs([w], mode="circle", n=4)
(out / "wrapped_2_7.svg").write_text(svg)

# The weak order on 1..3 as a ranked Hasse diagram (render with
# `dot -Tpng hasse_s3.dot -o hasse_s3.png` if graphviz is around).
dot = render_hasse(weak_order_poset(3))
(out / "hasse_s3.dot").write_text(dot)

for f in sorted(out.iterdir()):
    print(f"wrote {f.relative_to(out.parent)} ({f.stat().st_size} bytes)")
