import pathlib

import pytest

from unipdec.blocks import (block_partition, load_trees, parse_tree_line,
                            symbol_core, tree_check)
from unipdec.degrees import catalog, defect, find_char
from unipdec.labels import GroupDescriptor

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "unipdec" / "data"


def test_block_sizes_d4_b4():
    p = block_partition(GroupDescriptor.parse("D4"), 2)
    assert p.sizes() == [13, 1]
    singleton = [b for b, dft in p.blocks if len(b) == 1][0]
    assert singleton == frozenset({"1.21"})
    assert dict(p.blocks)[singleton] == 0 or p.block_of("1.21")[1] == 0

    p = block_partition(GroupDescriptor.parse("B4"), 2)
    assert p.sizes() == [20, 5]
    five = [b for b, dft in p.blocks if len(b) == 5][0]
    assert p.block_of(next(iter(five)))[1] == 2


def test_block_sizes_2e6():
    p = block_partition(GroupDescriptor.parse("2E6"), 2)
    assert p.sizes() == [25, 3, 1, 1]
    # the two singletons are the cuspidal characters, of defect 0
    singles = [b for b, dft in p.blocks if len(b) == 1]
    labels = sorted(next(iter(b)) for b in singles)
    assert labels == ["2E6[th]", "2E6[th^2]"]
    assert all(dft == 0 for b, dft in p.blocks if len(b) == 1)


def test_block_sizes_e6_d2_with_tree_block():
    p = block_partition(GroupDescriptor.parse("E6"), 2)
    assert p.sizes() == [25, 2, 1, 1, 1]
    pair = [b for b, dft in p.blocks if len(b) == 2][0]
    assert pair == frozenset({"phi{64,4}", "phi{64,13}"})  # the printed Brauer tree


def test_every_block_constant_defect():
    for name, d in (("D6", 2), ("D6", 3), ("D6", 6), ("B6", 3), ("B6", 6),
                    ("2D7", 3), ("2D7", 6), ("B4", 2)):
        g = GroupDescriptor.parse(name)
        p = block_partition(g, d)
        for labels, dft in p.blocks:
            assert {defect(find_char(g, l), d) for l in labels} == {dft}


def test_positive_defect_blocks_match_tree_vertex_sets():
    # at d where Phi_d divides the order once, positive-defect blocks equal trees
    g = GroupDescriptor.parse("D7")
    p = block_partition(g, 5)
    tree_sets = []
    for t in load_trees((DATA / "d5" / "D7.trees").read_text(), g, 5):
        tree_sets.append(frozenset(str(find_char(g, lab).label) for lab in t.characters()))
    block_sets = [b for b, dft in p.blocks if dft >= 1]
    assert sorted(map(sorted, tree_sets)) == sorted(map(sorted, block_sets))


def test_d3_example_tree():
    g = GroupDescriptor.parse("D3")
    t = parse_tree_line(g, 3, ".3|ps -- .21|ps -- .1^3|A2 -- O")
    assert tree_check(t).status == "pass"
    bad = parse_tree_line(g, 3, ".3 -- .1^3 -- .21 -- O")
    rep = tree_check(bad)
    assert rep.status == "fail" and "divisible" in rep.evidence


def test_whole_tree_corpus_passes():
    total = 0
    for dd in sorted(DATA.glob("d*")):
        d = int(dd.name[1:])
        for f in sorted(dd.glob("*.trees")):
            g = GroupDescriptor.parse(f.stem)
            for t in load_trees(f.read_text(), g, d):
                total += 1
                rep = tree_check(t)
                assert rep.status == "pass", (f.name, t.chain, rep.evidence)
    assert total >= 60  # "all 60+ shipped trees"
    for d in (3, 5, 6, 7, 8, 10, 12, 14):
        assert any((DATA / f"d{d}").glob("*.trees"))


def test_cohook_core_mixes_defects():
    # even d uses cohooks, which place a defect-4 symbol in a defect-0 block
    from unipdec.labels import label_symbol
    g = GroupDescriptor.parse("D6")
    c1 = symbol_core(label_symbol(g, find_char(g, ".42").label), 6)
    c2 = symbol_core(label_symbol(g, find_char(g, "D4:2.").label), 6)
    assert c1 == c2
