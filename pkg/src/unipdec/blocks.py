"""Phi_d-block partitions and Brauer-tree consistency checks.

Classical block partitions come from d-hook (d odd) respectively
(d/2)-cohook (d even) removal on beta-symbols; two characters lie in the
same block iff their symbols have the same core.  Exceptional-group
partitions are shipped as data.  Brauer trees are open lines of ordinary
characters around one exceptional vertex; `tree_check` verifies defects,
adjacent-degree divisibility and single-block membership.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field
from functools import lru_cache

from .cyclo import DensePoly, cyclotomic
from .degrees import catalog, catalog_map, defect, group_order_poly
from .labels import BetaSymbol, GroupDescriptor, UnsupportedGroupError, label_symbol


class BlockError(ValueError):
    pass


# ---------------------------------------------------------------------------
# cores

def _remove_hook(rows, d):
    """One d-hook removal inside a single row, if any; None when the row is a core."""
    for which in (0, 1):
        row = set(rows[which])
        for b in sorted(row):
            if b - d >= 0 and (b - d) not in row:
                new = tuple(sorted(row - {b} | {b - d}))
                out = list(rows)
                out[which] = new
                return tuple(out)
    return None


def _remove_cohook(rows, d):
    """One d-cohook removal (moves a bead to the other row), if any."""
    top, bottom = set(rows[0]), set(rows[1])
    for b in sorted(top):
        if b - d >= 0 and (b - d) not in bottom:
            return (tuple(sorted(top - {b})), tuple(sorted(bottom | {b - d})))
    for b in sorted(bottom):
        if b - d >= 0 and (b - d) not in top:
            return (tuple(sorted(top | {b - d})), tuple(sorted(bottom - {b})))
    return None


def symbol_core(sym, d):
    """The d-core of a symbol: d-hooks for odd d, (d/2)-cohooks for even d."""
    rows = (sym.top, sym.bottom)
    if d % 2:
        step = lambda r: _remove_hook(r, d)
    else:
        step = lambda r: _remove_cohook(r, d // 2)
    while True:
        nxt = step(rows)
        if nxt is None:
            break
        rows = nxt
    core = BetaSymbol(rows[0], rows[1]).reduced()
    # unordered for comparison purposes
    a, b = sorted((core.top, core.bottom), key=lambda r: (len(r), r))
    return (tuple(a), tuple(b))


@dataclass(frozen=True)
class BlockPartition:
    group: GroupDescriptor
    d: int
    blocks: tuple  # tuple of (frozenset of labels, defect)

    def sizes(self):
        return sorted((len(b) for b, _ in self.blocks), reverse=True)

    def block_of(self, label):
        for labels, dft in self.blocks:
            if label in labels:
                return labels, dft
        raise BlockError(f"{label} not in any block")


def _split_labels(text):
    """Split on commas that are not inside label braces like phi{20,2}."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur).strip())
    return [x for x in out if x]


@lru_cache(maxsize=None)
def _exceptional_blocks(group):
    ref = importlib.resources.files("unipdec").joinpath(f"data/blocks/{group}.blocks")
    out = {}
    for line in ref.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, rest = line.split(":", 1)
        d = int(head.strip().lstrip("d="))
        groups = [frozenset(_split_labels(blk)) for blk in rest.split(";") if blk.strip()]
        out[d] = groups
    return out


def block_partition(group, d):
    """Partition of the unipotent characters into Phi_d-blocks."""
    chars = catalog(group)
    if group.series in ("B", "C", "D", "2D", "A", "2A"):
        keyed = {}
        for c in chars:
            sym = label_symbol(group, c.label)
            core = symbol_core(sym, d if group.series not in ("A", "2A") else d)
            if group.series in ("A", "2A"):
                # single-row symbols: plain d-hook cores on the partition
                core = symbol_core(sym, d)
            keyed.setdefault(core, []).append(str(c.label))
        blocks = []
        for labels in keyed.values():
            dfts = {defect(catalog_map(group)[l], d) for l in labels}
            if len(dfts) != 1:
                raise BlockError(
                    f"block of {group} at d={d} has non-constant defect: {sorted(labels)}")
            blocks.append((frozenset(labels), dfts.pop()))
    else:
        data = _exceptional_blocks(group)
        if d not in data:
            raise UnsupportedGroupError(f"no shipped block data for {group} at d={d}")
        listed = data[d]
        seen = set().union(*listed) if listed else set()
        blocks = []
        for labels in listed:
            dfts = {defect(catalog_map(group)[l], d) for l in labels}
            if len(dfts) != 1:
                raise BlockError(f"shipped block {sorted(labels)} has mixed defect")
            blocks.append((labels, dfts.pop()))
        for c in chars:  # remaining characters sit in defect-0 singleton blocks
            if str(c.label) not in seen:
                blocks.append((frozenset([str(c.label)]), defect(c, d)))
    blocks.sort(key=lambda b: (-len(b[0]), sorted(b[0])))
    return BlockPartition(group, d, tuple(blocks))


# ---------------------------------------------------------------------------
# Brauer trees

@dataclass(frozen=True)
class BrauerTree:
    """Open line of character labels with one exceptional vertex 'O'.

    `chain` holds labels with None marking the exceptional vertex;
    `edge_series` holds one modular HC-series tag per edge (may be empty).
    """

    group: GroupDescriptor
    d: int
    chain: tuple
    edge_series: tuple = ()

    def characters(self):
        return [v for v in self.chain if v is not None]


def parse_tree_line(group, d, line):
    """One tree per line: ``lab|series -- lab -- O -- lab`` etc."""
    parts = [p.strip() for p in line.split("--")]
    chain = []
    series = []
    for p in parts:
        if p == "O":
            chain.append(None)
            continue
        if "|" in p:
            lab, tag = p.split("|", 1)
            series.append(tag.strip())
        else:
            lab = p
        chain.append(lab.strip())
    if chain.count(None) != 1:
        raise BlockError(f"tree needs exactly one exceptional vertex: {line!r}")
    return BrauerTree(group, d, tuple(chain), tuple(series))


def load_trees(path_text, group, d):
    out = []
    for line in path_text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(parse_tree_line(group, d, line))
    return out


@dataclass
class TreeReport:
    tree: BrauerTree
    status: str
    evidence: str = ""

    def __bool__(self):
        return self.status == "pass"


def tree_check(tree, group=None, d=None):
    """Check a Brauer tree against the catalog degrees.

    (i) every ordinary character on the tree has Phi_d-defect exactly 1;
    (ii) the degree sum over each edge not touching the exceptional vertex
         is divisible by the full Phi_d-part of the group order, and the
         alternating sum over the whole line is minus a positive multiple of
         a putative exceptional-character degree;
    (iii) all characters lie in one block of block_partition.
    """
    group = group or tree.group
    d = d or tree.d
    from .degrees import find_char
    from .labels import LabelError
    order = group_order_poly(group)
    M = order.root_multiplicity(d)
    phi = cyclotomic(d)

    cm = {}
    try:
        for lab in tree.characters():
            cm[lab] = find_char(group, lab)
    except LabelError as exc:
        return TreeReport(tree, "fail", str(exc))
    for lab in tree.characters():
        if defect(cm[lab], d) != 1:
            return TreeReport(tree, "fail",
                              f"{lab} has Phi_{d}-defect {defect(cm[lab], d)}, not 1")

    # (ii) neighbouring ordinary characters: sum divisible by Phi_d^M
    chain = tree.chain
    for i in range(len(chain) - 1):
        u, v = chain[i], chain[i + 1]
        if u is None or v is None:
            continue
        s = cm[u].degree.expand() + cm[v].degree.expand()
        rem = s
        for _ in range(M):
            q, r = rem.divmod(phi)
            if not r.is_zero():
                return TreeReport(tree, "fail",
                                  f"edge {u} -- {v}: degree sum not divisible by P{d}^{M}")
            rem = q

    # alternating sum reconstructs (a positive multiple of) the exceptional degree
    j = chain.index(None)
    alt = DensePoly()
    for i, lab in enumerate(chain):
        if lab is None:
            continue
        term = cm[lab].degree.expand()
        alt = alt + (term if i % 2 == 0 else -term)
    exc = alt if (j % 2 == 1) else -alt
    if exc.is_zero():
        return TreeReport(tree, "fail", "alternating degree sum vanishes")
    rem = exc
    for _ in range(M - 1):
        q, r = rem.divmod(phi)
        if not r.is_zero():
            return TreeReport(tree, "fail",
                              f"alternating sum not divisible by P{d}^{M - 1}")
        rem = q
    if exc.coeffs[-1] < 0 or any(exc(q0) <= 0 for q0 in (2, 3, 5, 7)):
        return TreeReport(tree, "fail",
                          "alternating sum is not a positive multiple of a degree")

    # (iii) one block
    try:
        part = block_partition(group, d)
        canon = [str(cm[lab].label) for lab in tree.characters()]
        first, _ = part.block_of(canon[0])
        if any(lab not in first for lab in canon):
            return TreeReport(tree, "fail", "characters span several blocks")
    except UnsupportedGroupError:
        pass  # exceptional group without full block data at this d: defect check stands
    return TreeReport(tree, "pass")
