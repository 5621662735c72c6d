"""Build both inclusions of sp(k,l) + sp(1) for a signature and summarise m.

    python3 scripts/embedding_summary.py 2,1
"""
import sys

from quatlie.liecore import derivations, is_lie_algebra
from quatlie.spfactory import Signature, Variant, build_embedding, build_m_algebra

sig = Signature.parse(sys.argv[1] if len(sys.argv) > 1 else "1,1")
for v in Variant:
    E = build_embedding(sig, v)
    m = build_m_algebra(E)
    lie, wit = is_lie_algebra(m)
    print(f"{v.value}: h = {E.target.name} (dim {E.target.dim}), parts {E.parts.dims()}")
    print(f"  m dim {m.dim}, Lie: {lie}, Jacobi witness triple: {wit and wit['triple']}")
    print(f"  dim Der(m) = {derivations(m).dim}")
