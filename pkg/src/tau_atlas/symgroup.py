"""Symmetric group combinatorics: lengths, reduced words, left weak order.

Permutations are tuples in one-line notation with 1-based images, so
``w = (3, 1, 2)`` maps 1 to 3.  Words in the Coxeter generators are tuples
of 1-based letters, ``(2, 1)`` meaning the product s_2 s_1.  Products use
the convention (u w)(i) = u(w(i)), so in a word the rightmost letter acts
first on points.
"""

from __future__ import annotations

from itertools import permutations as _all_perms

from .poset import HassePoset


def identity(m: int) -> tuple[int, ...]:
    return tuple(range(1, m + 1))


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def check_permutation(w) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def transposition(m: int, i: int) -> tuple[int, ...]:
    """The adjacent transposition s_i = (i, i+1) in S_m."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"generator s_{i} does not exist in S_{m}")
    w = list(range(1, m + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u, w) -> tuple[int, ...]:
    """Product u*w acting by (u*w)(i) = u(w(i)).

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(u) != len(w):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(w)}")
    return tuple(u[w[i] - 1] for i in range(len(w)))


def inverse(w) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def inversion_length(w) -> int:
    """Number of pairs i < j with w(i) > w(j).

    >>> inversion_length((3, 2, 1))
    3
    """
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def evaluate_word(word, m: int) -> tuple[int, ...]:
    """Product of s_i along the word, leftmost letter applied last to points.

    >>> evaluate_word((1, 2, 1), 3)
    (3, 2, 1)
    >>> evaluate_word((2, 1), 3)
    (3, 1, 2)
    """
    w = identity(m)
    for letter in word:
        if not 1 <= letter <= m - 1:
            raise ValueError(f"letter {letter} out of range for S_{m}")
        # multiply on the right: accumulated * s_i
        w = compose(w, transposition(m, letter))
    return w


def left_descent_set(w) -> list[int]:
    """Generators i with l(s_i w) < l(w)."""
    inv = inverse(w)
    return [i for i in range(1, len(w)) if inv[i - 1] > inv[i]]


def canonical_reduced_word(w) -> tuple[int, ...]:
    """Lexicographically smallest reduced word, by greedy left factoring.

    >>> canonical_reduced_word((3, 2, 1))
    (1, 2, 1)
    >>> canonical_reduced_word((3, 1, 2))
    (2, 1)
    """
    w = tuple(w)
    m = len(w)
    word = []
    while True:
        desc = left_descent_set(w)
        if not desc:
            break
        i = desc[0]
        word.append(i)
        w = compose(transposition(m, i), w)
    return tuple(word)


def reduce_word(word, m: int) -> tuple[int, ...]:
    """Shorten a word to a reduced one evaluating to the same permutation.

    Scans for the first prefix that drops in length and cancels it against
    an earlier letter (two deletions per round), so the result has length
    equal to the inversion count of the evaluated permutation.
    """
    letters = [int(x) for x in word]
    for letter in letters:
        if not 1 <= letter <= m - 1:
            raise ValueError(f"letter {letter} out of range for S_{m}")
    while True:
        prefix = identity(m)
        drop = None
        for k, letter in enumerate(letters):
            nxt = compose(prefix, transposition(m, letter))
            if inversion_length(nxt) < inversion_length(prefix):
                drop = k
                break
            prefix = nxt
        if drop is None:
            return tuple(letters)
        # find j < drop with s_{i_j} * (s_{i_{j+1}} ... s_{i_{drop-1}}) = prefix-to-drop product shortened
        target = evaluate_word(letters[: drop + 1], m)
        for j in range(drop):
            cand = letters[:j] + letters[j + 1 : drop]
            if evaluate_word(cand, m) == target:
                letters = cand + letters[drop + 1 :]
                break
        else:
            raise AssertionError("exchange step failed; word reduction is stuck")


def all_reduced_words(w) -> set[tuple[int, ...]]:
    """Every reduced word of w (exponential; intended for small degrees)."""
    w = tuple(w)
    m = len(w)
    if w == identity(m):
        return {()}
    out = set()
    for i in left_descent_set(w):
        rest = compose(transposition(m, i), w)
        out.update((i,) + tail for tail in all_reduced_words(rest))
    return out


def braid_move_closure(word) -> set[tuple[int, ...]]:
    """Closure of a word under adjacent commutation and braid replacements."""
    word = tuple(word)
    seen = {word}
    frontier = [word]
    while frontier:
        cur = frontier.pop()
        for k in range(len(cur) - 1):
            a, b = cur[k], cur[k + 1]
            if abs(a - b) >= 2:
                nxt = cur[:k] + (b, a) + cur[k + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        for k in range(len(cur) - 2):
            a, b, c = cur[k], cur[k + 1], cur[k + 2]
            if a == c and abs(a - b) == 1:
                nxt = cur[:k] + (b, a, b) + cur[k + 3 :]
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    return seen


def left_leq(w, w2) -> bool:
    """Left weak order: w <= w2 iff l(w2) = l(w) + l(w2 w^-1)."""
    if len(w) != len(w2):
        raise ValueError("degree mismatch")
    return inversion_length(w2) == inversion_length(w) + inversion_length(
        compose(w2, inverse(w))
    )


def all_permutations(m: int) -> list[tuple[int, ...]]:
    """All of S_m sorted by (length, one-line notation)."""
    return sorted(_all_perms(range(1, m + 1)), key=lambda w: (inversion_length(w), w))


def weak_left_hasse(m: int) -> HassePoset:
    """Hasse quiver of the left weak order: arrows w -> s_i w when length drops."""
    if m < 1:
        raise ValueError("degree must be >= 1")
    perms = all_permutations(m)
    index = {w: k for k, w in enumerate(perms)}
    poset = HassePoset([(perm_key(w), perm_label(w)) for w in perms])
    for w in perms:
        lw = inversion_length(w)
        for i in range(1, m):
            sw = compose(transposition(m, i), w)
            if inversion_length(sw) < lw:
                poset.add_arrow(index[w], index[sw], tag=i)
    return poset


def perm_key(w) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def perm_label(w) -> str:
    return "w=" + perm_key(w)


def coset_factorize(w) -> tuple[int, tuple[int, ...]]:
    """Factor w in S_{n+1} as s_{i+1}...s_n * v with v fixing n+1.

    Returns (i, v) with v in S_n; i+1 = w(n+1) and l(w) = (n-i) + l(v).
    """
    w = tuple(w)
    n = len(w) - 1
    i = w[n] - 1
    v = w
    for j in range(i + 1, n + 1):
        # peel the prefix from the inside out: v <- s_j * v
        v = compose(transposition(n + 1, j), v)
    if v[n] != n + 1:
        raise AssertionError("coset factorization failed")
    return i, v[:n]


def coset_prefix_word(n: int, i: int) -> tuple[int, ...]:
    """The word (i+1, i+2, ..., n) used by coset_factorize."""
    return tuple(range(i + 1, n + 1))


def permute_root(w, coords) -> tuple[int, ...]:
    """Apply w to a vector in the permutation representation: e_j -> e_{w(j)}."""
    out = [0] * len(w)
    for j, c in enumerate(coords):
        out[w[j] - 1] = c
    return tuple(out)


def simple_root(m: int, i: int) -> tuple[int, ...]:
    coords = [0] * m
    coords[i - 1] = 1
    coords[i] = -1
    return tuple(coords)


def alpha_coordinates(coords) -> tuple[int, ...]:
    """Coordinates in the basis alpha_i = e_i - e_{i+1} (needs coordinate sum 0)."""
    if sum(coords) != 0:
        raise ValueError("vector is not in the sum-zero subspace")
    partial = 0
    out = []
    for c in coords[:-1]:
        partial += c
        out.append(partial)
    return tuple(out)


def root_after_prefix(word, k: int, m: int) -> tuple[int, ...]:
    """s_{i_1}...s_{i_k}(alpha_{i_{k+1}}) for a word in S_m, 1 <= k <= len-1."""
    word = tuple(word)
    if not 1 <= k <= len(word) - 1:
        raise ValueError(f"prefix index {k} out of range for word of length {len(word)}")
    u = evaluate_word(word[:k], m)
    return permute_root(u, simple_root(m, word[k]))


def is_positive_root(coords) -> bool:
    return all(c >= 0 for c in alpha_coordinates(coords))
