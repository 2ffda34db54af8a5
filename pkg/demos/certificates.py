"""Certificates: draw a random member of each class, replay it, check it, take it apart again.

A certificate is a small construction program. Replaying it rebuilds the
graph; the definitional recognizer then confirms membership, and the
matching extractor recovers a program for the same graph.

    python3 demos/certificates.py [seed]
"""

import sys

from biradial import CHARACTERIZED, recognize
from biradial.construct import decompose, random_program, replay
from biradial.io import serialize_certificate

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7

for cls in CHARACTERIZED:
    cert = random_program(cls, seed, (8, 12))
    G = replay(cert)
    alpha = getattr(cert, "alpha", None)
    member = recognize(G, cert.root, alpha, cls)
    again = replay(decompose(G, cert.root, alpha, cls))
    sign = alpha.value if alpha is not None else "either"
    print(
        f"{cls.value:22s} alpha={sign:6s} {len(G)} vertices, {len(G.edges):2d} edges; "
        f"{type(cert).__name__}; recognized={member}; extractor replays to same graph={again == G}"
    )

print()
print("the strong radial certificate as JSON (first lines):")
text = serialize_certificate(random_program("strong", seed, (5, 7)), seed=seed)
print("\n".join(text.splitlines()[:24]))
print("...")
