"""
Finite Weyl groups built from root data.

Elements are enumerated breadth-first in the geometric representation on
the span of the simple roots, so every element is reached by a reduced
word. Each element is then stored under its lexicographically least
reduced word, and all group operations run on integer tables indexed by
element position (ordered by length, then word).
"""

import logging
import re
from dataclasses import dataclass, field

import numpy as np
from django.conf import settings

from algebra.exceptions import InfiniteGroupError, UsageError
from algebra.matrices import IntMatrix

logger = logging.getLogger(__name__)

_S_WORD = re.compile(r"^(s\d+)+$")


@dataclass(frozen=True)
class WeylElem:
    """An element of a Weyl group, identified by its canonical reduced word."""

    group_key: str
    word: tuple
    index: int = field(compare=False)
    matrix: IntMatrix = field(compare=False, repr=False)

    @property
    def length(self):
        return len(self.word)

    def is_identity(self):
        return not self.word

    def word_string(self):
        """Hyphen-joined generator indices; the empty string for e."""
        return "-".join(str(i) for i in self.word)

    def sort_key(self):
        return (len(self.word), self.word)

    def __str__(self):
        return "e" if not self.word else "".join(f"s{i}" for i in self.word)


@dataclass(frozen=True)
class ConjugacyClass:
    position: int
    representative: WeylElem
    members: tuple

    @property
    def size(self):
        return len(self.members)


def parse_word(text):
    """
    Parse a word given as ``"1-2-1"``, ``"s1s2s1"``, ``"121"``, ``"e"``
    or a sequence of ints.

    Raises:
        UsageError: If the text is not a word.
    """
    if isinstance(text, (list, tuple)):
        letters = tuple(text)
    else:
        text = str(text).strip()
        if text in ("", "e"):
            return ()
        if _S_WORD.match(text):
            letters = tuple(int(x) for x in re.findall(r"s(\d+)", text))
        elif "-" in text or "," in text:
            letters = tuple(int(x) for x in re.split(r"[-,]", text) if x.strip())
        elif text.isdigit():
            letters = tuple(int(x) for x in text)
        else:
            raise UsageError(f"Cannot parse {text!r} as a word.")
    if any(isinstance(i, bool) or not isinstance(i, int) for i in letters):
        raise UsageError(f"Word letters must be integers: {text!r}")
    return letters


class WeylGroup:
    """The Weyl group of a root datum with its multiplication tables."""

    def __init__(self, datum, element_cap=None):
        self.datum = datum
        self.key = datum.datum_hash
        self.rank = datum.semisimple_rank
        cap = element_cap or getattr(settings, "HECKELAB_ELEMENT_CAP", 5000)
        self._enumerate(cap)
        self._bruhat = None
        self._lifting_memo = {}
        self._subword_memo = {}
        self._classes = {}
        logger.info(f"Built W({datum.label}) with {len(self.elements)} elements")

    # ---- construction -------------------------------------------------

    def _geometric_generators(self):
        n = self.rank
        cartan = self.datum.cartan
        generators = []
        for i in range(n):
            g = np.eye(n, dtype=np.int64)
            for j in range(n):
                g[i, j] -= cartan[i, j]
            generators.append(g)
        return generators

    def _enumerate(self, cap):
        n = self.rank
        generators = self._geometric_generators()

        start = np.eye(n, dtype=np.int64)
        matrices = [start]
        words = [()]
        seen = {start.tobytes(): 0}
        head = 0
        while head < len(matrices):
            current = matrices[head]
            for i, g in enumerate(generators):
                product = current @ g
                key = product.tobytes()
                if key not in seen:
                    seen[key] = len(matrices)
                    matrices.append(product)
                    words.append(words[head] + (i + 1,))
                    if len(matrices) > cap:
                        raise InfiniteGroupError(
                            f"Enumeration of W({self.datum.label}) exceeded {cap} elements.",
                            cap=cap,
                        )
            head += 1

        size = len(matrices)
        lengths = [len(w) for w in words]
        left = np.zeros((n, size), dtype=np.int64)
        right = np.zeros((size, n), dtype=np.int64)
        for x, m in enumerate(matrices):
            for i, g in enumerate(generators):
                left[i, x] = seen[(g @ m).tobytes()]
                right[x, i] = seen[(m @ g).tobytes()]

        # lexicographically least reduced words, by increasing length
        canonical = [None] * size
        for x in sorted(range(size), key=lambda x: lengths[x]):
            if lengths[x] == 0:
                canonical[x] = ()
                continue
            s = next(i for i in range(n) if lengths[left[i, x]] < lengths[x])
            canonical[x] = (s + 1,) + canonical[left[s, x]]

        order = sorted(range(size), key=lambda x: (lengths[x], canonical[x]))
        position = np.empty(size, dtype=np.int64)
        position[order] = np.arange(size)

        self._left = position[left[:, order]] if n else np.zeros((0, size), dtype=np.int64)
        self._right = position[right[order, :]] if n else np.zeros((size, 0), dtype=np.int64)
        self._lengths = np.array([lengths[x] for x in order], dtype=np.int64)

        reflections = self.datum.reflection_matrices
        elements = []
        for idx, x in enumerate(order):
            word = canonical[x]
            if word:
                rest = elements[int(self._left[word[0] - 1, idx])]
                matrix = reflections[word[0] - 1] @ rest.matrix
            else:
                matrix = IntMatrix.identity(self.datum.rank)
            elements.append(WeylElem(self.key, word, idx, matrix))
        self.elements = tuple(elements)
        self._by_word = {x.word: x for x in self.elements}

    # ---- basic access -------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    @property
    def longest(self):
        return self.elements[-1]

    def simple(self, i):
        return self.element((i,))

    def _check(self, *elements):
        for x in elements:
            if not isinstance(x, WeylElem) or x.group_key != self.key:
                raise UsageError(f"{x!r} is not an element of W({self.datum.label}).")

    def element(self, word):
        """
        The element represented by a (not necessarily reduced) word.

        In rank one the bare letter ``"s"`` names the simple reflection.

        Raises:
            UsageError: If a letter is not a simple reflection.
        """
        if isinstance(word, str) and word.strip() == "s":
            if self.rank != 1:
                raise UsageError(f"'s' is ambiguous in W({self.datum.label}) of rank {self.rank}.")
            return self.simple(1)
        letters = parse_word(word)
        found = self._by_word.get(letters)
        if found is not None:
            return found
        idx = 0
        for i in letters:
            if not 1 <= i <= self.rank:
                raise UsageError(f"Generator {i} out of range 1..{self.rank}.")
            idx = int(self._right[idx, i - 1])
        return self.elements[idx]

    def length(self, x):
        return x.length

    # ---- multiplication -----------------------------------------------

    def multiply(self, x, y):
        """
        Product ``x * y``.

        Raises:
            UsageError: If the operands come from another group.
        """
        self._check(x, y)
        idx = x.index
        for i in y.word:
            idx = int(self._right[idx, i - 1])
        return self.elements[idx]

    def invert(self, x):
        self._check(x)
        idx = 0
        for i in reversed(x.word):
            idx = int(self._right[idx, i - 1])
        return self.elements[idx]

    def left_multiply(self, i, x):
        """s_i * x for a 1-based generator index."""
        return self.elements[int(self._left[i - 1, x.index])]

    def right_multiply(self, x, i):
        """x * s_i for a 1-based generator index."""
        return self.elements[int(self._right[x.index, i - 1])]

    def left_descents(self, x):
        return tuple(
            i + 1
            for i in range(self.rank)
            if self._lengths[self._left[i, x.index]] < x.length
        )

    def right_descents(self, x):
        return tuple(
            i + 1
            for i in range(self.rank)
            if self._lengths[self._right[x.index, i]] < x.length
        )

    def element_order(self, x):
        power, order = x, 1
        while not power.is_identity():
            power = self.multiply(power, x)
            order += 1
        return order

    def exponent(self):
        """Least common multiple of element orders."""
        return int(np.lcm.reduce([self.element_order(x) for x in self.elements]))

    def tau(self, x):
        """Image of ``x`` under the diagram automorphism."""
        perm = self.datum.tau
        return self.element(tuple(perm[i - 1] for i in x.word))

    # ---- Bruhat order -------------------------------------------------

    @property
    def bruhat_matrix(self):
        """
        Boolean matrix B with B[w, y] true iff y <= w.

        Row w is built from the row of s*w for the first letter s of w:
        the elements below w are those below sw together with their
        left translates by s.
        """
        if self._bruhat is None:
            size = len(self.elements)
            below = np.zeros((size, size), dtype=bool)
            below[0, 0] = True
            for x in self.elements[1:]:
                s = x.word[0] - 1
                shorter = below[int(self._left[s, x.index])]
                below[x.index] = shorter | shorter[self._left[s]]
            self._bruhat = below
        return self._bruhat

    def bruhat_leq(self, y, w):
        self._check(y, w)
        return bool(self.bruhat_matrix[w.index, y.index])

    def bruhat_lt(self, y, w):
        return y != w and self.bruhat_leq(y, w)

    def bruhat_interval(self, y, w):
        """Elements z with y <= z <= w, in group order."""
        self._check(y, w)
        below_w = self.bruhat_matrix[w.index]
        above_y = self.bruhat_matrix[:, y.index]
        return [self.elements[i] for i in np.flatnonzero(below_w & above_y)]

    def bruhat_leq_by_lifting(self, y, w):
        """
        Second Bruhat oracle via the lifting property: for a left descent s
        of w, y <= w iff min(y, sy) <= sw.
        """
        self._check(y, w)
        key = (y.index, w.index)
        if key not in self._lifting_memo:
            if w.is_identity():
                result = y.is_identity()
            elif y.length > w.length:
                result = False
            else:
                s = w.word[0]
                sw = self.left_multiply(s, w)
                sy = self.left_multiply(s, y)
                result = self.bruhat_leq_by_lifting(min(y, sy, key=lambda z: z.length), sw)
            self._lifting_memo[key] = result
        return self._lifting_memo[key]

    def subword_products(self, w):
        """
        Elements with a reduced expression that is a subword of the
        canonical reduced word of w.
        """
        self._check(w)
        reached = {self.identity}
        for i in w.word:
            reached |= {
                self.right_multiply(x, i) for x in reached if i not in self.right_descents(x)
            }
        return reached

    def bruhat_leq_by_subword(self, y, w):
        """Subword criterion: y <= w iff a reduced word of y is a subword of one of w."""
        self._check(y, w)
        if w.index not in self._subword_memo:
            self._subword_memo[w.index] = frozenset(x.index for x in self.subword_products(w))
        return y.index in self._subword_memo[w.index]

    # ---- conjugacy ----------------------------------------------------

    def conjugacy_classes(self, twisted=False):
        """
        Partition of W into classes x ~ w x tau(w)^-1 (plain conjugacy when
        ``twisted`` is false or tau is trivial). Classes are ordered by their
        least element, so the class of e comes first for plain conjugacy.
        """
        if twisted not in self._classes:
            perm = self.datum.tau if twisted else tuple(range(1, self.rank + 1))
            assigned = [-1] * len(self.elements)
            classes = []
            for x in self.elements:
                if assigned[x.index] >= 0:
                    continue
                position = len(classes)
                assigned[x.index] = position
                stack, members = [x.index], [x.index]
                while stack:
                    current = stack.pop()
                    for i in range(self.rank):
                        conjugate = int(self._left[i, self._right[current, perm[i] - 1]])
                        if assigned[conjugate] < 0:
                            assigned[conjugate] = position
                            members.append(conjugate)
                            stack.append(conjugate)
                members.sort()
                classes.append(
                    ConjugacyClass(
                        position,
                        self.elements[members[0]],
                        tuple(self.elements[m] for m in members),
                    )
                )
            self._classes[twisted] = (tuple(classes), tuple(assigned))
        return self._classes[twisted][0]

    def class_of(self, x, twisted=False):
        self.conjugacy_classes(twisted)
        return self._classes[twisted][1][x.index]


_GROUP_CACHE = {}


def build_group(datum, element_cap=None):
    """
    Enumerate the Weyl group of ``datum``; groups are cached per datum hash.

    Raises:
        InfiniteGroupError: If more than the element cap are produced.
    """
    key = (datum.datum_hash, element_cap)
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = WeylGroup(datum, element_cap=element_cap)
    return _GROUP_CACHE[key]


def multiply(x, y, group):
    return group.multiply(x, y)


def invert(x, group):
    return group.invert(x)


def bruhat_leq(y, w, group):
    return group.bruhat_leq(y, w)


def conjugacy_classes(group, twisted=False):
    return group.conjugacy_classes(twisted)
