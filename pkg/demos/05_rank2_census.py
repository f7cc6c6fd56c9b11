"""
Faces generated by rank-2 channels
==================================

For n = 2 a rank-2 channel generates a face of dimension 0 or 2, for n >= 3
of dimension 0, 1 or 2. Random samples are almost always extreme; the other
values come from explicit constructions.
"""
from collections import Counter

from choifaces import (
    Rank2FamilyN2Params,
    a3,
    case_iia_example,
    embed_rank1_example,
    face_dimension,
    random_member,
    rank2_family_n2,
)

for n in (2, 3):
    hist = Counter(face_dimension(random_member(n, 2, (n, k))) for k in range(300))
    print(f"n = {n}, 300 random rank-2 members:", dict(hist))

witnesses = {
    "rank2_family_n2(c=1)": rank2_family_n2(Rank2FamilyN2Params(c=1.0)),
    "rank2_family_n2(c=1/2, s=1/2)": rank2_family_n2(Rank2FamilyN2Params(c=0.5, s=0.5)),
    "case_iia_example(3)": case_iia_example(3),
    "a3()": a3(),
    "embed_rank1_example(3)": embed_rank1_example(3),
}
for name, m in witnesses.items():
    print(f"{name:32s} face dimension {face_dimension(m)}")
