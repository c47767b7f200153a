import pytest

from a1count.affine import AffineCount
from a1count.classes import TangencyKey
from a1count.fixtures import check_fixtures, format_fixtures, load_fixtures, parse_fixtures

K = TangencyKey.parse


def test_bundled_fixtures_pass(sol, fixtures):
    rep = check_fixtures(fixtures, sol, x=90)
    assert rep.failures == []
    assert rep.count("pass") >= 900
    assert rep.count("fixture-only") == sum(1 for e in fixtures.entries if len(e.key.b) >= 2)


def test_fixture_examples(fixtures):
    fx = fixtures.as_dict()
    assert fx[K("5;;")] == 113
    assert fx[K("6;2^5,1;")] == AffineCount(2419, -7)
    assert fx[K("4;1^6;2,2")] == 8


def test_erratum_entry(sol, fixtures):
    # printed as 441072; the degree-zero conversion forces n(6;3,1^15;)
    fx = fixtures.as_dict()
    assert fx[K("6;1^15;3")] == sol[K("6;3,1^15;")] == 401172
    # and the degree-one point merge gives the same number
    assert sol[K("6;1^14;3")] + 4 * sol[K("6;1^14;4")] == 385812 + 4 * 3840 == 401172


def test_mismatch_reported(sol):
    fs = parse_fixtures("5;;\t114\n6;2^8;\tx-23\n")
    rep = check_fixtures(fs, sol)
    assert [r.status for r in rep.results] == ["fail", "fail"]
    assert rep.results[0].got == 113
    assert not rep.ok


def test_fixture_only_checks(sol):
    fs = parse_fixtures("4;1^6;2,2\t8\n4;1^6;2,2,1\t9\n3;;2,2\t1\n")
    rep = check_fixtures(fs, sol)
    statuses = [r.status for r in rep.results]
    assert statuses[0] == "fail"  # trailing-one partner differs
    assert statuses[2] == "fail"  # vanishing key with a nonzero value


def test_round_trip(sol):
    vals = {k: v for k, v in sol.values.items() if k.e == 6}
    text = format_fixtures(vals)
    back = parse_fixtures(text)
    assert back.as_dict() == vals
    assert check_fixtures(back, sol).ok


def test_parse_errors(tmp_path):
    with pytest.raises(ValueError, match="line|:2:"):
        parse_fixtures("# ok\n4;;\n")
    with pytest.raises(ValueError):
        parse_fixtures("4;;\t16\n4;;\t17\n")
    p = tmp_path / "f.tsv"
    p.write_text("# comment\n\n4;;\t16\n", encoding="utf-8")
    assert len(load_fixtures(p)) == 1


def test_listed_families_complete(sol, fixtures):
    # every derived nonzero key with e <= 4 is printed, apart from one degree-zero extension
    fx = fixtures.as_dict()
    missing = sorted(k.pretty() for k, v in sol.values.items() if k.e <= 4 and v and k not in fx
                     and k.normalize() not in fx)
    assert missing == ["n(2;1^6;)"]
    assert sol[K("2;1^6;")] == sol[K("2;1^5;")]
