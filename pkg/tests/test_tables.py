import pathlib
import random

import pytest

from unipdec import tables
from unipdec.tables import ParamExpr, TableError, parse, parse_expr, emit

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "unipdec" / "data"


def all_dmx():
    out = []
    for sub in sorted(DATA.glob("d*")) + [DATA / "levi"]:
        out += sorted(sub.glob("*.dmx"))
    return out


def test_expr_grammar():
    e = parse_expr("24-15c17-5c18+6c19")
    assert e.constant() == 24 and e.terms[("c17",)] == -15
    assert parse_expr("2-d") == ParamExpr.const(2) - ParamExpr.var("d")
    assert parse_expr("3b-4d") == ParamExpr.var("b", 3) - ParamExpr.var("d", 4)
    assert parse_expr("y3+2") == ParamExpr.var("y3") + 2
    with pytest.raises(TableError):
        parse_expr("3*")


def test_expr_arithmetic_and_eval():
    a = parse_expr("2a1-3")
    b = parse_expr("a1+a2")
    assert (a * b).evaluate({"a1": 2, "a2": 5}) == (2 * 2 - 3) * (2 + 5)
    assert (a - a).is_zero()


def test_shipped_tables_roundtrip():
    count = 0
    for f in all_dmx():
        t = parse(f.read_text())
        t2 = parse(emit(t))
        assert emit(t2) == emit(t), f.name
        count += 1
    assert count >= 20


def test_shipped_tables_satisfiable():
    for f in all_dmx():
        t = parse(f.read_text())
        if t.params:
            assert t.sample_admissible(bound=8), f.name


def test_d4_table_shape():
    t = parse((DATA / "d2" / "D4.all.dmx").read_text())
    assert t.size() == 14
    assert not t.params  # the D4 matrix is fully determined
    assert t.entry(13, 8) == ParamExpr.const(6)  # Steinberg entry of the cuspidal PIM


def test_no_rows_error():
    with pytest.raises(TableError, match="no rows"):
        parse("[table]\ngroup = D4\nd = 2\n[chars]\n[cols]\n")


def test_diagonal_enforced():
    bad = """[table]
group = A1
d = 2
[chars]
2
1^2
[cols]
series=ps : 2=1 1^2=1
series=ps : 2=1
"""
    with pytest.raises(TableError, match="diagonal|above"):
        parse(bad)


def _random_table(rng):
    labels = ["2.", "1^2.", "1.1", ".2", ".1^2", "B2:."]
    n = rng.randint(2, len(labels))
    rows = labels[:n]
    params = []
    lines = ["[table]", "group = B2", "d = 2", "block = fuzz", "degrees = none"]
    body = ["[chars]"] + rows + ["[cols]"]
    for j in range(n):
        entries = [f"{rows[j]}=1"]
        for i in range(j + 1, n):
            r = rng.random()
            if r < 0.4:
                continue
            if r < 0.85:
                entries.append(f"{rows[i]}={rng.randint(1, 9)}")
            else:
                p = f"t{rng.randint(1, 3)}"
                params.append(p)
                entries.append(f"{rows[i]}={p}")
        body.append(f"series=s{j} : " + " ".join(entries))
    if params:
        lines.append("params = " + " ".join(sorted(set(params))))
    return "\n".join(lines + body) + "\n"


def test_fuzzed_roundtrip_1000():
    rng = random.Random(99)
    for _ in range(1000):
        text = _random_table(rng)
        t = parse(text)
        t2 = parse(emit(t))
        assert emit(t2) == emit(t)
