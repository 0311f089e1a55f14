"""Faces of a plane embedding and the explicit planar bases."""

from quiverhh import HypothesisError, h1_basis_planar, hh1_basis_planar
from quiverhh.fixtures import embedding, kr2, sq
from quiverhh.planar import face_operator

for name, p in (("SQ", sq()), ("KR2", kr2())):
    fs = embedding(name, p)
    print(f"{name}: |V| - |E| + |F| = {fs.euler_characteristic}")
    for i, face in enumerate(fs.faces):
        tag = "outer" if i == fs.outer_face_index else "bounded"
        print(f"   face {i} ({tag}): {' '.join(map(str, face))}   {face_operator(fs, i)}")
    print("   H1 basis:", ", ".join(map(str, h1_basis_planar(p, fs))))
    try:
        print("   HH1 basis:", ", ".join(map(str, hh1_basis_planar(p, fs))) or "(empty)")
    except HypothesisError as exc:
        print("   HH1 basis unavailable:", exc)
