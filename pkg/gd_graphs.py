"""
The bipartite graphs G_d and a bounded search for representing words.

G_d has an independent side A of n vertices and, for every subset σ of A,
`multiplicity` vertices in B whose neighbourhood is exactly σ. The multiplicities
that rule out colorful representations are astronomically large, so the
generator takes a cap and refuses graphs above config.GD_VERTEX_CAP vertices.
"""

from itertools import combinations
from math import comb
from typing import List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from complexes import SimplicialComplex, from_facets, is_face
from config import GD_VERTEX_CAP, SEARCH_LETTER_CAP, log
from words import Word, delta_complex


class GdParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    d: int
    multiplicity: int = 1

    @model_validator(mode="after")
    def _positive(self):
        if self.n < 1 or self.d < 1 or self.multiplicity < 1:
            raise ValueError("n, d and multiplicity must all be at least 1")
        return self

    @property
    def k(self) -> int:
        return 2 * self.n * (self.n - 1) * (self.d + 2) + 1

    @property
    def vertex_count(self) -> int:
        return self.n + self.multiplicity * 2 ** self.n


def paper_multiplicity(n: int, d: int) -> int:
    """(d+2)^K copies per neighbourhood, with K = 2n(n-1)(d+2)+1."""
    return (d + 2) ** GdParams(n=n, d=d).k


def paper_n(d: int) -> int:
    """Least n >= 2 with 2^n > C(K(n), (d+2)^2).

    n = 1 satisfies the inequality vacuously (K(1) = 1), so the search starts at 2.
    """
    n = 2
    while 2 ** n <= comb(GdParams(n=n, d=d).k, (d + 2) ** 2):
        n += 1
    return n


def _subsets(n: int) -> List[Tuple[int, ...]]:
    """Subsets of 1..n in lexicographic order of their sorted tuples."""
    out = [s for k in range(n + 1) for s in combinations(range(1, n + 1), k)]
    return sorted(out)


def gd_sides(params: GdParams) -> Tuple[Set[int], Set[int]]:
    a_side = set(range(1, params.n + 1))
    b_side = set(range(params.n + 1, params.vertex_count + 1))
    return a_side, b_side


def build_gd(params: GdParams) -> SimplicialComplex:
    """G_d as a 1-dimensional complex; A is 1..n, then B grouped by neighbourhood."""
    if params.vertex_count > GD_VERTEX_CAP:
        raise ValueError(
            f"G_d with n={params.n}, multiplicity={params.multiplicity} has "
            f"{params.vertex_count} vertices, above the cap of {GD_VERTEX_CAP}"
        )
    pieces: List[Tuple[int, ...]] = [(a,) for a in range(1, params.n + 1)]
    vertex = params.n
    for sigma in _subsets(params.n):
        for _ in range(params.multiplicity):
            vertex += 1
            pieces.append((vertex,))
            pieces.extend((a, vertex) for a in sigma)
    log("GD", f"G_{params.d} with {params.vertex_count} vertices")
    return from_facets(pieces)


def _fits(K: SimplicialComplex, candidate: SimplicialComplex) -> bool:
    return all(is_face(K, f) for f in candidate.facets)


def search_word(
    K: SimplicialComplex, d: int, max_len: int, prune: bool = True
) -> Optional[Word]:
    """Least word (shorter first, then lexicographic) of length <= max_len that
    d-colorfully represents K, or None within the bound.

    With `prune`, a prefix is abandoned once it represents a non-face of K;
    appending letters never removes faces.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    letters = sorted(K.vertices)
    if len(letters) > SEARCH_LETTER_CAP:
        raise ValueError(f"{len(letters)} letters exceed the search cap of {SEARCH_LETTER_CAP}")
    if delta_complex((), d) == K:
        return ()

    visited = 0

    def extend(prefix: Tuple[int, ...], length: int) -> Optional[Word]:
        nonlocal visited
        visited += 1
        if len(prefix) == length:
            return prefix if delta_complex(prefix, d) == K else None
        for letter in letters:
            word = prefix + (letter,)
            if prune and not _fits(K, delta_complex(word, d)):
                continue
            found = extend(word, length)
            if found is not None:
                return found
        return None

    for length in range(1, max_len + 1):
        found = extend((), length)
        if found is not None:
            log("SEARCH", f"found {found} after {visited} nodes")
            return found
    log("SEARCH", f"nothing up to length {max_len} after {visited} nodes")
    return None
