"""Strict-partition combinatorics: node coloring, the 3-staircase cores,
colored node addition, 3-bar quotients, and the sign statistics.

Conventions used throughout:

* a strict partition is stored zero-free; the "even-padded" view appends a
  single 0 when the number of parts is odd, giving an even-length list;
* a node in column j has color 0 when j = 0,1 (mod 3) and color 1 when
  j = 2 (mod 3) -- the color depends on the column only;
* the residue split and all statistics are taken on the even-padded view,
  so the pad 0 lands in the residue-0 class.
"""

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True, order=True)
class StrictPartition:
    """Strictly decreasing positive parts, canonical zero-free form."""

    parts: tuple

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive (pad zeros are implicit)")
        if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be strictly decreasing")
        object.__setattr__(self, "parts", parts)

    @staticmethod
    def from_string(text):
        text = text.strip()
        if text in ("", "-"):
            return StrictPartition(())
        return StrictPartition(tuple(int(x) for x in text.split(",")))

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def even_padded(self):
        """The part list padded with one 0 when the length is odd."""
        if len(self.parts) % 2 == 1:
            return self.parts + (0,)
        return self.parts

    def contains(self, other):
        if other.length > self.length:
            return False
        return all(self.parts[i] >= other.parts[i] for i in range(other.length))

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class ResidueSplit:
    """Even-padded parts split by residue mod 3 (p0 may contain the pad 0)."""

    p0: tuple
    p1: tuple
    p2: tuple

    @property
    def l1(self):
        return len(self.p1)

    @property
    def l2(self):
        return len(self.p2)


@dataclass(frozen=True)
class BarQuotient:
    q0: tuple  # strict
    q1: tuple  # weakly decreasing, trailing zeros stripped


@dataclass(frozen=True)
class Stats:
    """Sign statistics of a strict partition, on the even-padded view.

    f: sum of the parts = 2 (mod 3); g: number of pairs (i, j) with the j-th
    residue-1 part exceeding the i-th residue-0 part (pad included); h:
    number of parts = 2 (mod 3); a: number of parts = 0 (mod 3), pad
    included; eps_len: 1 when the padded view needed a zero.
    """

    f: int
    g: int
    h: int
    a: int
    eps_len: int


def color(j):
    """Color of a node in column j: 0 for j = 0,1 (mod 3), else 1."""
    if j < 1:
        raise ValueError("column index must be positive")
    return 0 if j % 3 in (0, 1) else 1


def bar_core(m):
    """The m-th staircase core: (3m-2,...,4,1), empty, or (3|m|-1,...,5,2)."""
    if m == 0:
        return StrictPartition(())
    if m > 0:
        return StrictPartition(tuple(3 * i - 2 for i in range(m, 0, -1)))
    return StrictPartition(tuple(3 * i - 1 for i in range(-m, 0, -1)))


def enumerate_added(core, i, n):
    """All strict partitions containing `core` with n added nodes, every
    added node of color i.

    Enumerated row by row: each existing row may extend while the new
    columns keep color i, and (for i = 0 only, since column 1 has color 0)
    new rows may appear at the bottom.
    """
    if i not in (0, 1):
        raise ValueError("color must be 0 or 1")
    if n < 0:
        raise ValueError("node count must be non-negative")
    base = core.parts
    found = []

    def extend(row, prev_len, remaining, acc):
        if row >= len(base):
            if remaining == 0:
                found.append(StrictPartition(tuple(acc)))
                return
            start = 1  # a new row must be non-empty
        else:
            start = base[row]
        base_len = base[row] if row < len(base) else 0
        top = min(prev_len - 1, base_len + remaining)
        for new_len in range(start, top + 1):
            # the skew columns base_len+1 .. new_len must all carry color i;
            # a wrong color blocks every longer extension of this row too
            if new_len > base_len and color(new_len) != i:
                break
            extend(row + 1, new_len, remaining - (new_len - base_len), acc + [new_len])

    extend(0, 10 ** 9, n, [])
    return set(found)


def is_added_member(core, i, n, lam):
    """Membership test for enumerate_added(core, i, n) without enumerating."""
    if lam.size != core.size + n:
        return False
    if not lam.contains(core):
        return False
    base = core.parts + (0,) * (lam.length - core.length)
    for row in range(lam.length):
        for col in range(base[row] + 1, lam.parts[row] + 1):
            if color(col) != i:
                return False
    return True


def residue_split(lam):
    """Split the even-padded parts by residue mod 3."""
    padded = lam.even_padded()
    p0 = tuple(p for p in padded if p % 3 == 0)
    p1 = tuple(p for p in padded if p % 3 == 1)
    p2 = tuple(p for p in padded if p % 3 == 2)
    return ResidueSplit(p0, p1, p2)


def _canonical_k(split):
    if not split.p2:
        return 1
    return max(1, -(-(split.p2[0] + 1) // 3))  # ceil((p2_max + 1) / 3)


def bar_quotient(lam, k=None):
    """The 3-bar quotient (q0, q1) of a strict partition.

    q0 is the residue-0 parts divided by 3 (zeros stripped).  q1 is built
    from the merged index list: (p-1)/3 for each residue-1 part, followed by
    the negatives -1..-k with the slots -(p+1)/3 of the residue-2 parts
    removed; subtracting the staircase that starts at l1-l2-1 and stepping
    down by one yields a partition once trailing zeros are stripped.  Any k
    at least ceil((max residue-2 part + 1)/3) gives the same q1; k defaults
    to the smallest legal choice.
    """
    split = residue_split(lam)
    kmin = _canonical_k(split)
    if k is None:
        k = kmin
    elif k < kmin:
        raise ValueError("k too small for the residue-2 parts")
    q0 = tuple(p // 3 for p in split.p0 if p > 0)
    a_list = [(p - 1) // 3 for p in split.p1]
    removed = {-((p + 1) // 3) for p in split.p2}
    b_list = [b for b in range(-1, -k - 1, -1) if b not in removed]
    merged = a_list + b_list
    start = split.l1 - split.l2 - 1
    q1 = [merged[idx] - (start - idx) for idx in range(len(merged))]
    while q1 and q1[-1] == 0:
        q1.pop()
    return BarQuotient(q0, tuple(q1))


def stats(lam):
    """The statistics (f, g, h, a, eps_len) on the even-padded view."""
    split = residue_split(lam)
    f = sum(split.p2)
    g = sum(1 for p0 in split.p0 for p1 in split.p1 if p1 > p0)
    h = split.l2
    a = len(split.p0)
    return Stats(f, g, h, a, lam.length % 2)


def delta1(lam, n):
    """Sign (-1)^(f + C(n,2)) attached to a color-1 addition of n nodes."""
    return -1 if (stats(lam).f + comb(n, 2)) % 2 else 1


def delta0(lam, m):
    """Sign for a color-0 addition over the negative core indexed by m:
    (-1)^(f+g) for even m, (-1)^(f+g+h) for odd m."""
    st = stats(lam)
    e = st.f + st.g + (st.h if m % 2 else 0)
    return -1 if e % 2 else 1
