"""Changing the section of an extension moves the cocycle by a gauge map.

Take an extension e of g = ab1 by h = sl2 and two sections s2 (canonical)
and s1 = s2 + beta.  Extracting cocycles through each section gives c2 and
c1, and c1 is the gauge transform of c2 by beta.  The witness search
recovers beta from the two cocycles alone, because sl2 has trivial center.
"""

from nabext import catalog
from nabext.dgla import GaugeElement
from nabext.extensions import (
    build_extension, canonical_maps, cocycle_equiv_apply, extension_to_cocycle, find_witness,
)
from nabext.lie import LinearMap

g, h = catalog.algebra("ab1"), catalog.algebra("sl2")
c = catalog.cocycle("shifted_cocycle_ab1_sl2", g.dim, h.dim)
e = build_extension(g, h, c).algebra
h_embed, proj, s2 = canonical_maps(g.dim, h.dim)

beta = GaugeElement(LinearMap.from_images([(0, 1, 1)], h.dim))
s1 = s2 + h_embed.compose(beta.beta)

c2 = extension_to_cocycle(e, h_embed, proj, s2)
c1 = extension_to_cocycle(e, h_embed, proj, s1)
print("canonical section returns the input cocycle:", c2 == c)
print("c1 equals beta acting on c2:", cocycle_equiv_apply(g, h, c2, beta) == c1)

w = find_witness(g, h, c2, c1)
print("witness search:", w.kind, "beta =", [[str(x) for x in row] for row in w.beta.beta.matrix.to_rows()])
