"""Combinatorial labels for unipotent characters and per-group catalogs.

Classical-group characters are labelled by bipartitions / beta-symbols,
possibly prefixed with a cuspidal core ("B2:", "D4:", "B6:").  Degenerate
type-D labels come in +/- pairs ("3+", "3-").  Exceptional-group labels are
names loaded from the shipped catalog files ("phi{20,10}", "E6[z3]", ...).

Label grammar (bit-exact, shared with the table files):
    bipartitions    21.1^3      (empty side allowed: "3." or ".1^4")
    split labels    3+ / 3-
    core series     B2:2.   D4:21.1   B6  (bare core = empty bipartition)
    partitions      31   (A-series)
    named           phi{20,10}  phi{2,4}'  E6[z3]  F4[-1]  2A5:2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import FactoredPoly, parse_factored

SERIES = ("A", "2A", "B", "C", "D", "2D", "E6", "2E6", "E7", "E8", "F4")


class LabelError(ValueError):
    pass


class UnsupportedGroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupDescriptor:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise UnsupportedGroupError(f"unknown series {self.series!r}")
        fixed = {"E6": 6, "2E6": 6, "E7": 7, "E8": 8, "F4": 4}
        if self.series in fixed:
            if self.rank != fixed[self.series]:
                raise UnsupportedGroupError(f"{self.series} has rank {fixed[self.series]}")
        else:
            minrank = {"A": 1, "2A": 2, "B": 2, "C": 2, "D": 2, "2D": 2}[self.series]
            if self.rank < minrank:
                raise UnsupportedGroupError(f"{self.series}_{self.rank} not admissible")

    def __str__(self):
        if self.series in ("E6", "2E6", "E7", "E8", "F4"):
            return self.series
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        fixed = {"E6": 6, "2E6": 6, "E7": 7, "E8": 8, "F4": 4}
        if text in fixed:
            return cls(text, fixed[text])
        m = re.match(r"^(2?[ABCD])(\d+)$", text)
        if not m:
            raise UnsupportedGroupError(f"cannot parse group descriptor {text!r}")
        return cls(m.group(1), int(m.group(2)))


# ---------------------------------------------------------------------------
# partitions and bipartitions

def check_partition(parts):
    parts = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise LabelError(f"not a partition: {parts}")
    return parts


def parse_partition(text):
    """Parse e.g. '21^3' -> (2,1,1,1) or '2^21^2' -> (2,2,1,1).

    Parts are single digits (ranks stay below 10); an exponent keeps its
    last digit for the next part when another '^' follows.
    """
    text = text.strip()
    if text in ("", "-"):
        return ()
    parts = []
    i = 0
    while i < len(text):
        if not text[i].isdigit():
            raise LabelError(f"bad partition {text!r}")
        part = int(text[i])
        i += 1
        exp = 1
        if i < len(text) and text[i] == "^":
            if i + 1 >= len(text) or not text[i + 1].isdigit():
                raise LabelError(f"bad partition {text!r}")
            exp = int(text[i + 1])  # single-digit exponents; ranks stay below 10
            i += 2
        parts.extend([part] * exp)
    return check_partition(parts)


def format_partition(parts):
    if not parts:
        return ""
    out = []
    i = 0
    parts = list(parts)
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out.append(str(parts[i]) if j - i == 1 else f"{parts[i]}^{j - i}")
        i = j
    return "".join(out)


@dataclass(frozen=True)
class Bipartition:
    left: tuple
    right: tuple

    def __post_init__(self):
        object.__setattr__(self, "left", check_partition(self.left))
        object.__setattr__(self, "right", check_partition(self.right))

    def size(self):
        return sum(self.left) + sum(self.right)

    def swapped(self):
        return Bipartition(self.right, self.left)

    def __str__(self):
        return f"{format_partition(self.left)}.{format_partition(self.right)}"

    @classmethod
    def parse(cls, text):
        if text.count(".") != 1:
            raise LabelError(f"bipartition needs one dot: {text!r}")
        l, r = text.split(".")
        return cls(parse_partition(l), parse_partition(r))


# ---------------------------------------------------------------------------
# beta-symbols

def beta_set(partition, length):
    """Beta-set of given length: increasing parts + index shift."""
    parts = sorted(partition)
    if len(parts) > length:
        raise LabelError("beta-set length too small")
    parts = [0] * (length - len(parts)) + parts
    return tuple(p + i for i, p in enumerate(parts))


def beta_to_partition(beta):
    return check_partition(sorted((b - i for i, b in enumerate(sorted(beta))), reverse=True))


@dataclass(frozen=True)
class BetaSymbol:
    """Two strictly increasing rows; canonical form has no common 0-shift."""

    top: tuple
    bottom: tuple

    def __post_init__(self):
        for row in (self.top, self.bottom):
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)) or any(x < 0 for x in row):
                raise LabelError(f"bad symbol row {row}")

    def reduced(self):
        top, bottom = list(self.top), list(self.bottom)
        while top and bottom and top[0] == 0 and bottom[0] == 0:
            top = [x - 1 for x in top[1:]]
            bottom = [x - 1 for x in bottom[1:]]
        return BetaSymbol(tuple(top), tuple(bottom))

    def shifted(self, k=1):
        top = tuple(range(k)) + tuple(x + k for x in self.top)
        bottom = tuple(range(k)) + tuple(x + k for x in self.bottom)
        return BetaSymbol(top, bottom)

    def defect(self):
        return abs(len(self.top) - len(self.bottom))

    def rank(self):
        s = sum(self.top) + sum(self.bottom)
        ab = len(self.top) + len(self.bottom)
        return s - ((ab - 1) ** 2) // 4 if ab else 0

    def entries(self):
        return tuple(sorted(self.top + self.bottom))

    def bipartition(self):
        """Top row first; callers fix the orientation convention."""
        return Bipartition(beta_to_partition(self.top), beta_to_partition(self.bottom))

    def __str__(self):
        t = " ".join(str(x) for x in self.top) or "-"
        b = " ".join(str(x) for x in self.bottom) or "-"
        return f"({t}|{b})"

    @classmethod
    def parse(cls, text):
        m = re.match(r"^\(([^|]*)\|([^|]*)\)$", text.strip())
        if not m:
            raise LabelError(f"bad symbol {text!r}")
        def row(s):
            s = s.strip()
            if s in ("", "-"):
                return ()
            return tuple(int(x) for x in s.split())
        return cls(row(m.group(1)), row(m.group(2)))


def bipartition_to_symbol(bip, defect):
    """Symbol with the left partition on the longer row; reduced form."""
    if defect < 0:
        raise LabelError("defect must be >= 0")
    k = max(len(bip.right), len(bip.left) - defect, 0)
    return BetaSymbol(beta_set(bip.left, k + defect), beta_set(bip.right, k)).reduced()


def symbol_to_bipartition(sym):
    if len(sym.top) < len(sym.bottom):
        sym = BetaSymbol(sym.bottom, sym.top)
    return sym.bipartition()


# ---------------------------------------------------------------------------
# unipotent character labels

#: kinds: "bip" (principal series, classical), "split" (degenerate type D),
#: "core" (classical non-principal ordinary HC series), "named" (exceptional),
#: "partition" (type A)
@dataclass(frozen=True)
class UnipLabel:
    kind: str
    text: str
    bip: Bipartition | None = None
    sign: str | None = None
    core: str | None = None

    def __str__(self):
        return self.text


_CORE_RANK = {"B2": 2, "B6": 6, "D4": 4, "2D9": 9}
_CORE_DEFECT = {"B2": 3, "B6": 5, "D4": 4, "2D9": 6}


def parse_label(text, group=None):
    """Parse a label string; `group` only disambiguates named exceptional labels."""
    text = text.strip()
    if not text:
        raise LabelError("empty label")
    if group is not None and group.series in ("E6", "2E6", "E7", "E8", "F4"):
        return UnipLabel("named", text)
    m = re.match(r"^(B2|B6|D4|2D9):(.*)$", text)
    if m:
        rest = m.group(2)
        bip = Bipartition.parse(rest) if "." in rest else None
        if bip is None:
            raise LabelError(f"core label needs a bipartition: {text!r}")
        if bip.size() == 0:
            return UnipLabel("core", m.group(1), bip=bip, core=m.group(1))
        return UnipLabel("core", text, bip=bip, core=m.group(1))
    if text in _CORE_RANK:
        return UnipLabel("core", text, bip=Bipartition((), ()), core=text)
    if text.endswith("+") or text.endswith("-"):
        half = parse_partition(text[:-1])
        bip = Bipartition(half, half)
        return UnipLabel("split", text, bip=bip, sign=text[-1])
    if "." in text:
        return UnipLabel("bip", text, bip=Bipartition.parse(text))
    return UnipLabel("partition", text, bip=Bipartition(parse_partition(text), ()))


def bip_label(bip):
    return UnipLabel("bip", str(bip), bip=bip)


def split_label(half, sign):
    text = format_partition(half) + sign
    return UnipLabel("split", text, bip=Bipartition(half, half), sign=sign)


def core_label(core, bip):
    text = core if bip.size() == 0 and core in ("B6", "2D9", "D4") and core != "D4" \
        else f"{core}:{bip}"
    return UnipLabel("core", text, bip=bip, core=core)


# ---------------------------------------------------------------------------
# partitions of n

@lru_cache(maxsize=None)
def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def bipartitions(n):
    out = []
    for k in range(n + 1):
        for l in partitions(k):
            for r in partitions(n - k):
                out.append(Bipartition(l, r))
    return out


# ---------------------------------------------------------------------------
# symbol normalisation per series

def label_symbol(group, label):
    """The reduced beta-symbol attached to a classical-group label."""
    s = group.series
    n = group.rank
    if s in ("B", "C"):
        if label.kind == "bip":
            return bipartition_to_symbol(label.bip, 1)
        if label.kind == "core" and label.core in ("B2", "B6"):
            return bipartition_to_symbol(label.bip, _CORE_DEFECT[label.core])
    elif s == "D":
        if label.kind in ("bip", "split"):
            return d_canonical_symbol(bipartition_to_symbol(label.bip, 0))
        if label.kind == "core" and label.core == "D4":
            return bipartition_to_symbol(label.bip, 4)
    elif s == "2D":
        if label.kind == "bip":
            return bipartition_to_symbol(label.bip, 2)
        if label.kind == "core" and label.core == "2D9":
            return bipartition_to_symbol(label.bip, 6)
    elif s == "A" or s == "2A":
        if label.kind in ("partition", "bip"):
            return BetaSymbol(beta_set(label.bip.left, len(label.bip.left) or 1), ())
    raise LabelError(f"no symbol for {label} in {group}")


def d_canonical_symbol(sym):
    """Canonical row order for unordered (type D) symbols."""
    if (len(sym.bottom), sym.bottom) < (len(sym.top), sym.top):
        sym = BetaSymbol(sym.bottom, sym.top)
    return sym.reduced()


def d_canonical_bip(bip):
    """Canonical orientation of an unordered bipartition label for type D/2A-free use."""
    a, b = bip.left, bip.right
    if (sum(b), b) < (sum(a), a) or (sum(b) == sum(a) and b < a):
        a, b = b, a
    return Bipartition(a, b)


# ---------------------------------------------------------------------------
# catalogs

def classical_label_list(group):
    """All unipotent character labels of a classical group, unordered."""
    s, n = group.series, group.rank
    out = []
    if s in ("A", "2A"):
        for lam in partitions(n + 1):
            out.append(UnipLabel("partition", format_partition(lam),
                                 bip=Bipartition(lam, ())))
        return out
    if s in ("B", "C"):
        for bip in bipartitions(n):
            out.append(bip_label(bip))
        if n >= 2:
            for bip in bipartitions(n - 2):
                out.append(core_label("B2", bip))
        if n >= 6:
            for bip in bipartitions(n - 6):
                out.append(UnipLabel("core", f"B6:{bip}" if bip.size() else "B6",
                                     bip=bip, core="B6"))
        return out
    if s == "D":
        seen = set()
        for bip in bipartitions(n):
            if bip.left == bip.right:
                out.append(split_label(bip.left, "+"))
                out.append(split_label(bip.left, "-"))
                continue
            c = d_canonical_bip(bip)
            if c in seen:
                continue
            seen.add(c)
            out.append(bip_label(c))
        if n >= 4:
            for bip in bipartitions(n - 4):
                out.append(UnipLabel("core", f"D4:{bip}" if bip.size() else "D4",
                                     bip=bip, core="D4"))
        return out
    if s == "2D":
        for bip in bipartitions(n - 1):
            out.append(bip_label(bip))
        if n >= 9:
            for bip in bipartitions(n - 9):
                out.append(UnipLabel("core", f"2D9:{bip}" if bip.size() else "2D9",
                                     bip=bip, core="2D9"))
        return out
    raise UnsupportedGroupError(f"no classical catalog for {group}")


def resolve_label(group, text):
    """Parse + canonicalise a label string against the group's conventions."""
    lab = parse_label(text, group)
    if group.series == "D" and lab.kind == "bip":
        c = d_canonical_bip(lab.bip)
        if c != lab.bip:
            lab = bip_label(c)
    if group.series == "D" and lab.kind == "bip" and lab.bip.left == lab.bip.right:
        raise LabelError(f"degenerate label {text!r} needs a +/- sign")
    return lab
