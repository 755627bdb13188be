"""
Finite simplicial complexes on non-negative integer vertices, stored by facets.

A complex is kept as its inclusion-maximal faces in canonical order (size, then
lexicographic), so two complexes are equal exactly when they have the same faces.
Isolated vertices are singleton facets and the empty complex is the single facet ().
"""

from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Set, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from config import log, parallel_map

VertexId = int
Face = Tuple[VertexId, ...]


def make_face(vertices: Iterable[int]) -> Face:
    """Sorted tuple of distinct non-negative integers."""
    face = tuple(sorted(set(vertices)))
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"vertex labels must be non-negative integers, got {v!r}")
    return face


def _face_order(face: Face):
    return (len(face), face)


class SimplicialComplex(BaseModel):
    model_config = ConfigDict(frozen=True)

    facets: Tuple[Face, ...] = ((),)

    @field_validator("facets", mode="before")
    @classmethod
    def _canonical_facets(cls, value):
        faces = {make_face(f) for f in value}
        maximal: List[Face] = []
        for face in sorted(faces, key=len, reverse=True):
            fs = set(face)
            if not any(fs <= set(kept) for kept in maximal):
                maximal.append(face)
        if not maximal:
            return ((),)
        return tuple(sorted(maximal, key=_face_order))

    @property
    def vertices(self) -> FrozenSet[VertexId]:
        return frozenset(v for f in self.facets for v in f)

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, f)) for f in self.facets)


def from_facets(candidate_faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of the candidates, reduced to its facets."""
    return SimplicialComplex(facets=tuple(candidate_faces))


def is_face(K: SimplicialComplex, sigma: Iterable[int]) -> bool:
    s = set(sigma)
    return any(s <= set(f) for f in K.facets)


def faces(K: SimplicialComplex) -> List[Face]:
    """Every face of K (including the empty face), in canonical order."""
    out: Set[Face] = set()
    for facet in K.facets:
        for k in range(len(facet) + 1):
            out.update(combinations(facet, k))
    return sorted(out, key=_face_order)


def induced(K: SimplicialComplex, tau: Iterable[int]) -> SimplicialComplex:
    t = set(tau)
    return from_facets(tuple(v for v in f if v in t) for f in K.facets)


def cone_vertices(K: SimplicialComplex) -> Set[VertexId]:
    common = set(K.facets[0])
    for f in K.facets[1:]:
        common &= set(f)
    return common


def one_skeleton(K: SimplicialComplex) -> SimplicialComplex:
    pieces: List[Face] = []
    for f in K.facets:
        if len(f) <= 2:
            pieces.append(f)
        else:
            pieces.extend(combinations(f, 2))
    return from_facets(pieces)


def relabel_complex(K: SimplicialComplex, mapping: Dict[int, int]) -> SimplicialComplex:
    return from_facets(tuple(mapping.get(v, v) for v in f) for f in K.facets)


def expand_faces(vertices: Iterable[int], test: Callable[[Face], bool]) -> SimplicialComplex:
    """Build the complex of all faces passing `test`, level by level.

    A candidate of size k+1 is only tested once all of its k-subsets are faces,
    so `test` must describe a downward-closed family. Candidates of one level may be
    evaluated in parallel (see config.WORKERS); `test` then has to be picklable.
    """
    singles = [(v,) for v in sorted(set(vertices))]
    level = [f for f, ok in zip(singles, parallel_map(test, singles)) if ok]
    found: Set[Face] = set(level)
    size = 1
    while len(level) > 1:
        candidates: List[Face] = []
        for a, b in combinations(level, 2):
            if a[:-1] != b[:-1]:
                continue
            cand = a + (b[-1],) if a[-1] < b[-1] else b + (a[-1],)
            if all(sub in found for sub in combinations(cand, size)):
                candidates.append(cand)
        size += 1
        level = [c for c, ok in zip(candidates, parallel_map(test, candidates)) if ok]
        found.update(level)
        log("COMPLEX", f"{len(level)} faces of size {size} out of {len(candidates)} candidates")
    return from_facets(found)
