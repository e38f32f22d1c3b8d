import os
import pathlib

import pytest

import torclus

DATA = pathlib.Path(os.environ.get("TORCLUS_DATA", pathlib.Path(__file__).resolve().parents[1] / "data"))


def test_ctilde_sl2():
    assert [torclus.ctilde("A1", 1, 1, m) for m in range(1, 8)] == [1, 0, -1, 0, 1, 0, -1]


def test_n_product_sl3():
    assert torclus.n_product("A2", 1, 0, 2, 1) == "t[0] *PER(1,6)[0,-3,0,3,0,0]"


def test_star_sl2():
    assert torclus.star(["Y[1,0]", "Y[1,2]"], type="A1") == "t[-2]^{1/2} t[0]^{-1} t[2]^{1/2} * Y[1,0] Y[1,2]"
    assert torclus.star(["1", "Y[1,4]"]) == "Y[1,4]"


def test_parse_error_raises():
    with pytest.raises(torclus.TorclusError):
        torclus.star(["Y[1,0"])


def test_fundamental_class():
    text = torclus.fundamental_class("A2", 1, 0)
    assert text.count("Y[") == 4


def test_seed_mutation_round_trip():
    text = (DATA / "two_param.json").read_text()
    seed = torclus.Seed.from_json(text)
    assert seed.variables == ["X[1]", "X[2]", "X[3]"]
    assert seed.exchangeable == 1
    assert seed.compatible()
    once = seed.mutate(1)
    assert once.variables[0] != "X[1]"
    assert once.mutate(1).to_json() == text
    assert seed.exchange_graph() == "nodes=2 edges=1 finite=true"
    with pytest.raises(IndexError):
        seed.mutate(2)


def test_c1ob_graph():
    seed = torclus.Seed.from_json((DATA / "c1ob_a2.json").read_text())
    assert seed.exchange_graph() == "nodes=5 edges=5 finite=true"
    assert len(seed.Q) == 4


def test_verify():
    assert "sl2-tsystem" in torclus.verify_ids()
    ok, report = torclus.verify("a1-two-param-serre")
    assert ok, report
