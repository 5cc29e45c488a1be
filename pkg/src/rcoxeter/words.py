"""The word problem: shortlex normal forms and the group operations.

A group element is represented by its shortlex normal form: the unique
word over the generator indices that is a geodesic (no shorter word spells
the same element) and is lexicographically least among the geodesics that
do.  Words are plain tuples of generator indices; the empty tuple is the
identity.  Every function here that returns a word returns a normal form.

Normalization has two phases.  Appending a generator ``g`` to a geodesic
word either cancels it against an occurrence of ``g`` whose whole right
context commutes with ``g`` (the only way the product can shorten) or
tacks it onto the end, so a left-to-right pass keeps the word geodesic.
A final pass then extracts, again and again, the least letter whose left
context commutes with it; since all geodesics of an element differ only by
swaps of commuting letters, this greedy choice yields the
lexicographically least geodesic.  Normalizing a word of length k costs
O(k^2) bitmask steps.
"""

from __future__ import annotations

from .graphs import DefiningGraph, UnknownLabelError

#: A group element: a shortlex-normal word of generator indices.
Word = tuple[int, ...]

#: The identity element.
IDENTITY: Word = ()


def _append_letter(out: list[int], g: int, masks: tuple[int, ...]) -> None:
    """Append generator ``g`` to the geodesic word ``out``, in place.

    Scans from the right for an occurrence of ``g`` that commutes with
    everything after it; such an occurrence exists in one geodesic of the
    element exactly when it exists in all of them, so cancelling it is
    safe whatever representative ``out`` happens to be.
    """
    gbit = 1 << g
    i = len(out) - 1
    while i >= 0:
        letter = out[i]
        if letter == g:
            del out[i]
            return
        if not masks[letter] & gbit:
            break
        i -= 1
    out.append(g)


def _lex_minimize(word: list[int], masks: tuple[int, ...]) -> list[int]:
    """Least representative of a geodesic word under commuting swaps.

    Greedily fronts the smallest letter whose whole left context commutes
    with it; a letter occurrence is movable to the front exactly when no
    earlier letter blocks it, so one left-to-right sweep per output letter
    suffices.
    """
    out = []
    while word:
        blocked = 0
        best = -1
        best_pos = -1
        for pos, x in enumerate(word):
            if not blocked >> x & 1 and (best < 0 or x < best):
                best, best_pos = x, pos
            # letters that do not commute with x (x itself included) can
            # no longer reach the front
            blocked |= ~masks[x]
        out.append(best)
        del word[best_pos]
    return out


def normal_form(letters, graph: DefiningGraph) -> Word:
    """Shortlex normal form of the element spelled by ``letters``.

    >>> from .graphs import preset
    >>> g = preset("square")
    >>> normal_form((0, 0), g)
    ()
    >>> normal_form((1, 0), g)  # a and b commute, so "ba" normalizes to "ab"
    (0, 1)
    """
    n = graph.n
    masks = graph.neighbor_masks
    out: list[int] = []
    for g in letters:
        if not 0 <= g < n:
            raise ValueError(f"generator index {g} out of range for {graph!r}")
        _append_letter(out, g, masks)
    return tuple(_lex_minimize(out, masks))


def multiply(x: Word, y: Word, graph: DefiningGraph) -> Word:
    """Normal form of the product x*y of two normal forms."""
    masks = graph.neighbor_masks
    out = list(x)
    for g in y:
        _append_letter(out, g, masks)
    return tuple(_lex_minimize(out, masks))


def inverse(x: Word, graph: DefiningGraph) -> Word:
    """Normal form of the inverse; every generator is its own inverse."""
    return normal_form(reversed(x), graph)


def length(x: Word) -> int:
    """Word length, i.e. the distance from the identity in the Cayley graph."""
    return len(x)


def conjugate(g: Word, x: Word, graph: DefiningGraph) -> Word:
    """Normal form of g^-1 * x * g."""
    out = multiply(inverse(g, graph), x, graph)
    return multiply(out, g, graph)


def support(x: Word) -> frozenset[int]:
    """The set of generators occurring in the normal form.

    All geodesics of an element use the same letter set, so this does not
    depend on the chosen representative.
    """
    return frozenset(x)


def has_order_two(x: Word, graph: DefiningGraph) -> bool:
    """True exactly when x is a nontrivial involution."""
    return x != IDENTITY and multiply(x, x, graph) == IDENTITY


def parse_word(text: str, graph: DefiningGraph) -> Word:
    """Parse a word from its command-line spelling and normalize it.

    Labels may be separated by spaces, or run together when every label is
    a single character.  ``e`` denotes the empty word as long as no
    generator is labelled ``e``; the empty string always does.
    """
    text = text.strip()
    if not text:
        return IDENTITY
    if text == "e" and "e" not in graph.labels:
        return IDENTITY
    parts = text.split()
    if len(parts) == 1 and parts[0] not in graph.labels:
        if all(len(label) == 1 for label in graph.labels):
            parts = list(parts[0])
        else:
            raise UnknownLabelError(f"unknown generator label {parts[0]!r}")
    return normal_form((graph.index(part) for part in parts), graph)


def word_to_text(word: Word, graph: DefiningGraph) -> str:
    """Space-joined labels of a word; the identity is the empty string."""
    return " ".join(graph.labels[g] for g in word)
