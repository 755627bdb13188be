"""
Tverberg partitions of point sequences: nerves of partitions, the word of a
partition and back, minimal Tverberg partition enumeration, colorful partitions,
and the check that a sequence's minimal Tverberg partitions are exactly its
colorful ones.

Point indices are 1-based. Partitions need not cover the whole sequence.
"""

from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from complexes import SimplicialComplex, VertexId, cone_vertices, expand_faces
from config import log, parallel_map
from geometry import Point, PointSequence, convex_hulls_intersect, set_partitions
from words import Word, alphabet, colorful_length, is_colorful


# ---- Data Models ----

class Partition(BaseModel):
    model_config = ConfigDict(frozen=True)

    parts: Tuple[Tuple[VertexId, Tuple[int, ...]], ...]

    @field_validator("parts", mode="before")
    @classmethod
    def _sorted_parts(cls, value):
        if isinstance(value, Mapping):
            value = value.items()
        return tuple(sorted((label, tuple(sorted(indices))) for label, indices in value))

    @model_validator(mode="after")
    def _disjoint(self):
        labels = [label for label, _ in self.parts]
        if len(set(labels)) != len(labels):
            raise ValueError(f"repeated part labels in {labels}")
        seen: Set[int] = set()
        for label, indices in self.parts:
            if label < 0:
                raise ValueError(f"part label {label} is negative")
            for i in indices:
                if i < 1:
                    raise ValueError(f"point index {i} is not 1-based")
                if i in seen:
                    raise ValueError(f"point {i} lies in more than one part")
                seen.add(i)
        return self

    @property
    def labels(self) -> List[VertexId]:
        return [label for label, _ in self.parts]

    @property
    def covered(self) -> Set[int]:
        return {i for _, indices in self.parts for i in indices}

    def as_dict(self) -> Dict[VertexId, Tuple[int, ...]]:
        return dict(self.parts)


class TverbergWitness(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    partition: Partition
    point: Tuple[Fraction, ...]


def canonical_partition(blocks: Iterable[Iterable[int]]) -> Partition:
    """Label blocks 1..r by increasing least index."""
    ordered = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
    return Partition(parts=[(k + 1, b) for k, b in enumerate(ordered)])


def _check_indices(P: PointSequence, parts: Partition) -> None:
    for i in parts.covered:
        if i > len(P):
            raise ValueError(f"point index {i} out of range 1..{len(P)}")


# ---- Nerves and words ----

def _labels_meet(points, parts, face) -> bool:
    lookup = dict(parts)
    chosen = [[points[i - 1] for i in lookup[label]] for label in face]
    if any(not c for c in chosen):
        return False
    return convex_hulls_intersect(chosen) is not None


def nerve(P: PointSequence, parts: Partition) -> SimplicialComplex:
    """Complex on the part labels recording which convex hulls share a point."""
    if not parts.parts:
        raise ValueError("partition has no parts")
    _check_indices(P, parts)
    K = expand_faces(parts.labels, partial(_labels_meet, P.points, parts.parts))
    log("TVERBERG", f"nerve of {len(parts.parts)} parts: {K}")
    return K


def partition_to_word(P: PointSequence, parts: Partition) -> Word:
    _check_indices(P, parts)
    owner = {i: label for label, indices in parts.parts for i in indices}
    return tuple(owner[i] for i in range(1, len(P) + 1) if i in owner)


def word_to_partition(W: Sequence[int], P: PointSequence) -> Partition:
    if len(W) != len(P):
        raise ValueError(f"word of length {len(W)} does not match {len(P)} points")
    grouped: Dict[int, List[int]] = {}
    for i, letter in enumerate(W, start=1):
        grouped.setdefault(letter, []).append(i)
    return Partition(parts=grouped)


def is_colorful_partition(P: PointSequence, parts: Partition, d: int) -> bool:
    word = partition_to_word(P, parts)
    return alphabet(word) == set(parts.labels) and is_colorful(word, d)


# ---- Enumeration ----

def _candidates(n: int, r: int, budget: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Unordered r-part collections of at most `budget` indices, canonical order."""
    for m in range(r, min(budget, n) + 1):
        for subset in combinations(range(1, n + 1), m):
            yield from set_partitions(subset, r)


def _blocks_meet(points, blocks) -> Optional[Point]:
    return convex_hulls_intersect([[points[i - 1] for i in block] for block in blocks])


def _minimal_witness(points, blocks) -> Optional[Point]:
    witness = _blocks_meet(points, blocks)
    if witness is None:
        return None
    for k, block in enumerate(blocks):
        if len(block) == 1:
            continue
        for i in block:
            smaller = blocks[:k] + (tuple(j for j in block if j != i),) + blocks[k + 1:]
            if _blocks_meet(points, smaller) is not None:
                return None
    return witness


def enumerate_minimal_tverberg(P: PointSequence, r: int) -> List[TverbergWitness]:
    """All minimal Tverberg partitions with r parts, with exact witness points."""
    if r < 2:
        raise ValueError("a Tverberg partition needs at least two parts")
    budget = colorful_length(r, P.dim)
    candidates = list(_candidates(len(P), r, budget))
    witnesses = parallel_map(partial(_minimal_witness, P.points), candidates)
    found = [
        TverbergWitness(partition=canonical_partition(blocks), point=w)
        for blocks, w in zip(candidates, witnesses)
        if w is not None
    ]
    log("TVERBERG", f"{len(found)} minimal partitions with {r} parts among {len(candidates)} candidates")
    return found


def enumerate_colorful_partitions(P: PointSequence, r: int, d: int) -> List[Partition]:
    m = colorful_length(r, d)
    out: List[Partition] = []
    if m > len(P):
        return out
    for subset in combinations(range(1, len(P) + 1), m):
        for blocks in set_partitions(subset, r):
            owner = {i: k for k, block in enumerate(blocks) for i in block}
            if is_colorful(tuple(owner[i] for i in subset), d):
                out.append(canonical_partition(blocks))
    return out


def colorful_minimality_check(P: PointSequence, d: int, r_max: int) -> bool:
    """True when, for 2 <= r <= r_max, the minimal Tverberg partitions of P are
    exactly its d-colorful partitions."""
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    for r in range(2, r_max + 1):
        minimal = {w.partition for w in enumerate_minimal_tverberg(P, r)}
        colorful = set(enumerate_colorful_partitions(P, r, d))
        if minimal != colorful:
            log(
                "TVERBERG",
                f"r={r}: {len(minimal - colorful)} minimal but not colorful, "
                f"{len(colorful - minimal)} colorful but not minimal",
            )
            return False
    return True


def find_tverberg_partition(P: PointSequence, r: int) -> Optional[TverbergWitness]:
    if r < 2:
        raise ValueError("a Tverberg partition needs at least two parts")
    for blocks in _candidates(len(P), r, colorful_length(r, P.dim)):
        witness = _blocks_meet(P.points, blocks)
        if witness is not None:
            return TverbergWitness(partition=canonical_partition(blocks), point=witness)
    return None


def extend_partition_for_cone(
    K: SimplicialComplex, P: PointSequence, parts: Partition
) -> Partition:
    """Cover all of P without changing the nerve, by giving the uncovered points
    to the least cone vertex's part."""
    apex = cone_vertices(K)
    if not apex:
        raise ValueError("complex is not a cone")
    if nerve(P, parts) != K:
        raise ValueError("partition does not induce the given complex")
    v = min(apex)
    uncovered = set(range(1, len(P) + 1)) - parts.covered
    grown = parts.as_dict()
    grown[v] = tuple(sorted(set(grown[v]) | uncovered))
    return Partition(parts=grown)
