"""
Combinatorics on words: d-colorful words, colorful subword search, the complex
Δ^d(W) a word represents, and the word constructions built on them
(reduction, restriction, canonical witnesses, letter deletion, facet
concatenation, dimension lift, insertion patterns and chunks).

Words are tuples of non-negative integer letters. Positions in certificates and
chunks are 1-based.
"""

from functools import partial
from itertools import groupby
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from complexes import (
    Face,
    SimplicialComplex,
    VertexId,
    expand_faces,
    induced,
    make_face,
)
from config import log

Word = Tuple[VertexId, ...]

_DONE = -1


def alphabet(W: Sequence[int]) -> FrozenSet[int]:
    return frozenset(W)


def colorful_length(r: int, d: int) -> int:
    """Length of a d-colorful word on r letters."""
    return (d + 1) * (r - 1) + 1


# ---- Data Models ----

class ColorfulCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    positions: Tuple[int, ...]
    alphabet: Face
    d: int

    @model_validator(mode="after")
    def _check_shape(self):
        if self.d < 0:
            raise ValueError("d must be non-negative")
        if not self.alphabet or make_face(self.alphabet) != self.alphabet:
            raise ValueError("certificate alphabet must be a non-empty sorted face")
        r = len(self.alphabet)
        expected = 1 if r == 1 else colorful_length(r, self.d)
        if len(self.positions) != expected:
            raise ValueError(f"certificate needs {expected} positions, got {len(self.positions)}")
        if self.positions[0] < 1 or any(a >= b for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError("certificate positions must be strictly increasing and 1-based")
        return self


class Chunk(BaseModel):
    model_config = ConfigDict(frozen=True)

    letter: VertexId
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1


# ---- Recognition ----

def is_colorful(W: Sequence[int], d: int) -> bool:
    sigma = alphabet(W)
    r = len(sigma)
    if r < 2 or d < 0 or len(W) != colorful_length(r, d):
        return False
    for i in range(d + 1):
        block = W[i * (r - 1): i * (r - 1) + r]
        if len(set(block)) != r:
            return False
    return True


def _prepare_sigma(sigma: Iterable[int]) -> Face:
    given = list(sigma)
    face = make_face(given)
    if len(face) != len(given):
        raise ValueError(f"alphabet has repeated letters: {given}")
    return face


def _check_d(d: int) -> None:
    if d < 0:
        raise ValueError("d must be non-negative")


def _step(block: int, mask: int, bit: int, full: int, d: int) -> Tuple[int, int]:
    """Consume a letter with bit `bit` in state (block, mask)."""
    grown = mask | bit
    if grown != full:
        return block, grown
    if block == d:
        return _DONE, 0
    # the closing letter of this block opens the next one
    return block + 1, bit


def has_colorful_subword(W: Sequence[int], sigma: Iterable[int], d: int) -> bool:
    _check_d(d)
    face = _prepare_sigma(sigma)
    if len(face) <= 1:
        return not face or face[0] in W
    index = {v: k for k, v in enumerate(face)}
    full = (1 << len(face)) - 1
    states = {(0, 0)}
    for letter in W:
        k = index.get(letter)
        if k is None:
            continue
        bit = 1 << k
        grown = set(states)
        for block, mask in states:
            if mask & bit:
                continue
            nxt = _step(block, mask, bit, full, d)
            if nxt[0] == _DONE:
                return True
            grown.add(nxt)
        states = grown
    return False


def _completion_table(W: Sequence[int], index: Dict[int, int], d: int) -> List[List[bytearray]]:
    """can[k][block][mask]: a colorful completion exists using positions k.. of W."""
    n, r = len(W), len(index)
    full = (1 << r) - 1
    can = [[bytearray(1 << r) for _ in range(d + 1)] for _ in range(n + 1)]
    for k in range(n - 1, -1, -1):
        here, after = can[k], can[k + 1]
        k_letter = index.get(W[k])
        bit = 0 if k_letter is None else 1 << k_letter
        for block in range(d + 1):
            row, row_after = here[block], after[block]
            for mask in range(full):
                if row_after[mask]:
                    row[mask] = 1
                elif bit and not mask & bit:
                    nb, nm = _step(block, mask, bit, full, d)
                    if nb == _DONE or after[nb][nm]:
                        row[mask] = 1
    return can


def find_colorful_subword(
    W: Sequence[int], sigma: Iterable[int], d: int
) -> Optional[ColorfulCertificate]:
    """Lexicographically least certificate of a d-colorful subword of W on sigma."""
    _check_d(d)
    face = _prepare_sigma(sigma)
    if not face:
        raise ValueError("sigma must be non-empty")
    if len(face) == 1:
        if face[0] not in W:
            return None
        return ColorfulCertificate(positions=(list(W).index(face[0]) + 1,), alphabet=face, d=d)

    index = {v: k for k, v in enumerate(face)}
    full = (1 << len(face)) - 1
    can = _completion_table(W, index, d)
    if not can[0][0][0]:
        return None

    positions: List[int] = []
    block, mask, k = 0, 0, 0
    while block != _DONE:
        for p in range(k, len(W)):
            q = index.get(W[p])
            if q is None or mask & (1 << q):
                continue
            nb, nm = _step(block, mask, 1 << q, full, d)
            if nb == _DONE or can[p + 1][nb][nm]:
                positions.append(p + 1)
                block, mask, k = nb, nm, p + 1
                break
    return ColorfulCertificate(positions=tuple(positions), alphabet=face, d=d)


def certificate_word(W: Sequence[int], cert: ColorfulCertificate) -> Word:
    return tuple(W[p - 1] for p in cert.positions)


# ---- Represented complex ----

def _represents(W: Word, d: int, face: Face) -> bool:
    return has_colorful_subword(W, face, d)


def delta_complex(W: Sequence[int], d: int) -> SimplicialComplex:
    """The complex Δ^d(W) d-colorfully represented by W."""
    _check_d(d)
    word = tuple(W)
    K = expand_faces(alphabet(word), partial(_represents, word, d))
    log("WORDS", f"delta_complex of length {len(word)} at d={d}: {K}")
    return K


# ---- Reduction and restriction ----

def reduce(W: Sequence[int]) -> Word:
    return tuple(letter for letter, _ in groupby(W))


def restrict(W: Sequence[int], tau: Iterable[int]) -> Word:
    keep = set(tau)
    return tuple(letter for letter in W if letter in keep)


def chunks(W: Sequence[int], A: Iterable[int]) -> List[Chunk]:
    out: List[Chunk] = []
    start = 1
    for letter, run in groupby(restrict(W, A)):
        size = len(list(run))
        out.append(Chunk(letter=letter, start=start, end=start + size - 1))
        start += size
    return out


def reduced_chunk_bound(n: int, d: int) -> int:
    """Most chunks W(A) can have when A is an independent set of n letters in Δ^d(W)."""
    return max(1, n * (n - 1) * (d + 2))


def independent_chunk_check(W: Sequence[int], A: Iterable[int], d: int) -> bool:
    letters = set(A)
    restricted = restrict(W, letters)
    if induced(delta_complex(restricted, d), letters).dimension > 0:
        raise ValueError(f"letters {sorted(letters)} are not independent in the represented complex")
    return len(chunks(W, letters)) <= reduced_chunk_bound(len(alphabet(restricted)), d)


# ---- Constructions ----

def canonical_word(sigma: Iterable[int], d: int) -> Word:
    """Sorted zigzag d-colorful word on sigma."""
    p = _prepare_sigma(sigma)
    if len(p) <= 1:
        raise ValueError("canonical_word needs at least two letters")
    _check_d(d)
    word = list(p)
    for i in range(d):
        tail = p[::-1] if i % 2 == 0 else p
        word.extend(tail[1:])
    return tuple(word)


def infer_d(W: Sequence[int]) -> int:
    r = len(alphabet(W))
    if r < 2 or (len(W) - 1) % (r - 1) != 0:
        raise ValueError(f"length {len(W)} does not fit a colorful word on {r} letters")
    d = (len(W) - 1) // (r - 1) - 1
    if d < 0 or not is_colorful(W, d):
        raise ValueError("word is not colorful")
    return d


def delete_letter(W: Sequence[int], i: VertexId) -> Word:
    """Delete letter i from a d-colorful word, keeping it d-colorful on the rest.

    Each new block collects the remaining letters at their first occurrence after
    the previous block's closing letter. Where i sat on a block overlap, the letter
    just before it becomes the new overlap and its duplicate in the following block
    is dropped; the closing letter may shift left again further on.
    """
    sigma = alphabet(W)
    if i not in sigma:
        raise ValueError(f"letter {i} does not occur in the word")
    if len(sigma) < 3:
        raise ValueError("delete_letter needs an alphabet of at least three letters")
    d = infer_d(W)
    rest = sigma - {i}

    out: List[int] = []
    current: set = set()
    closed = 0
    for letter in W:
        if letter == i or letter in current:
            continue
        current.add(letter)
        out.append(letter)
        if current == rest:
            closed += 1
            if closed == d + 1:
                break
            current = {letter}
    return tuple(out)


def facet_concat_word(K: SimplicialComplex) -> Word:
    """Concatenate (m+1)-colorful words of the m facets of K; it represents K at m+1."""
    if K.facets == ((),):
        return ()
    m = len(K.facets)
    word: List[int] = []
    for facet in K.facets:
        if len(facet) >= 2:
            word.extend(canonical_word(facet, m + 1))
    # one occurrence is enough for an isolated vertex
    word.extend(f[0] for f in K.facets if len(f) == 1)
    return tuple(word)


def lift_word(W: Sequence[int]) -> Tuple[Word, Dict[int, int]]:
    """Word representing the relabeled Δ^d(W) at d+1, plus the relabeling used."""
    first_seen: List[int] = []
    for letter in W:
        if letter not in first_seen:
            first_seen.append(letter)
    ordered = sorted(first_seen)
    relabeling = dict(zip(first_seen, ordered))
    lifted = tuple(reversed(ordered)) + tuple(relabeling[x] for x in W)
    return lifted, relabeling


def minimize_letter(
    W: Sequence[int], b: VertexId, d: int, keep: Optional[Iterable[int]] = None
) -> Word:
    """Insertion pattern of b: drop instances of b (leftmost first) while the
    complex represented by the restriction to keep ∪ {b} stays the same."""
    if b not in W:
        raise ValueError(f"letter {b} does not occur in the word")
    letters = set(alphabet(W) if keep is None else keep) | {b}
    word = restrict(W, letters)
    target = delta_complex(word, d)
    changed = True
    while changed:
        changed = False
        for pos, letter in enumerate(word):
            if letter != b:
                continue
            shorter = word[:pos] + word[pos + 1:]
            if delta_complex(shorter, d) == target:
                word = shorter
                changed = True
                break
    log("WORDS", f"insertion pattern of {b}: {len(word)} letters")
    return word
