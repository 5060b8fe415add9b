import pytest

from unipdec.labels import (BetaSymbol, Bipartition, GroupDescriptor, LabelError,
                            bipartition_to_symbol, bipartitions, classical_label_list,
                            parse_label, parse_partition, symbol_to_bipartition)


def test_partition_grammar():
    assert parse_partition("21^3") == (2, 1, 1, 1)
    assert parse_partition("2^21^2") == (2, 2, 1, 1)
    assert parse_partition("3^21") == (3, 3, 1)
    assert parse_partition("") == ()
    with pytest.raises(LabelError):
        parse_partition("12")  # increasing parts are not a partition


def test_catalog_counts():
    assert len(classical_label_list(GroupDescriptor("D", 4))) == 14
    assert len(classical_label_list(GroupDescriptor("2D", 4))) == 10
    assert len(classical_label_list(GroupDescriptor("D", 6))) == 42
    assert len(classical_label_list(GroupDescriptor("B", 4))) == 25
    assert len(classical_label_list(GroupDescriptor("C", 4))) == 25
    assert len(classical_label_list(GroupDescriptor("A", 1))) == 2
    labels = {str(l) for l in classical_label_list(GroupDescriptor("A", 1))}
    assert labels == {"2", "1^2"}  # trivial and Steinberg


def test_bn_equals_cn():
    b = [str(l) for l in classical_label_list(GroupDescriptor("B", 5))]
    c = [str(l) for l in classical_label_list(GroupDescriptor("C", 5))]
    assert b == c


def test_split_labels_in_pairs():
    labels = [str(l) for l in classical_label_list(GroupDescriptor("D", 6))]
    plus = {l[:-1] for l in labels if l.endswith("+")}
    minus = {l[:-1] for l in labels if l.endswith("-")}
    assert plus == minus and plus


def test_symbol_of_reflection_family_member():
    # the paper lists the symbol of [n-1.1] as (0 n | 1)
    for n in (3, 5, 8):
        sym = bipartition_to_symbol(Bipartition((n - 1,), (1,)), 1)
        assert sym == BetaSymbol((0, n), (1,))


def test_trivial_symbol():
    assert bipartition_to_symbol(Bipartition((), ()), 1) == BetaSymbol((0,), ())


def test_symbol_roundtrip_exhaustive():
    # every bipartition of total <= 6, for the defects used by B/C, D and 2D
    for n in range(7):
        for bip in bipartitions(n):
            for defect in (0, 1, 2, 3, 4):
                sym = bipartition_to_symbol(bip, defect)
                assert sym.defect() == defect or (defect == 0 and bip.left == bip.right
                                                  and sym.defect() == 0)
                back = symbol_to_bipartition(sym)
                assert back == bip or back == bip.swapped()
                if defect > 0:
                    assert back == bip


def test_shift_equivalence_reduction():
    sym = BetaSymbol((0, 1, 4), (0, 2))
    assert sym.shifted(2).reduced() == sym.reduced()


def test_label_grammar():
    lab = parse_label("B2:2.")
    assert lab.core == "B2" and lab.bip == Bipartition((2,), ())
    lab = parse_label("3+")
    assert lab.kind == "split" and lab.sign == "+"
    lab = parse_label("D4")
    assert lab.core == "D4" and lab.bip.size() == 0
    g = GroupDescriptor.parse("E6")
    lab = parse_label("phi{20,10}", g)
    assert lab.kind == "named"


def test_beta_symbol_text_grammar():
    sym = BetaSymbol.parse("(0 1 5|-)")
    assert sym.top == (0, 1, 5) and sym.bottom == ()
    assert BetaSymbol.parse(str(sym)) == sym


def test_every_shipped_table_label_resolves():
    import pathlib
    from unipdec import tables
    from unipdec.degrees import UnsupportedGroupError, find_char
    data = pathlib.Path(__file__).resolve().parents[1] / "src" / "unipdec" / "data"
    for sub in list(data.glob("d*")) + [data / "levi"]:
        for f in sorted(sub.glob("*.dmx")):
            t = tables.parse(f.read_text())
            for lab in t.rows:
                try:
                    find_char(t.group, lab)
                except UnsupportedGroupError:
                    assert str(t.group) == "E8"  # only the degree-less E8 block
