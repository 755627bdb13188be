import config
from complexes import from_facets
from conftest import EXAMPLE_WORD, EXAMPLE_WORD_FACETS
from tverberg import enumerate_minimal_tverberg
from geometry import PointSequence
from words import delta_complex


def test_describe_lists_every_setting():
    assert config.describe() == {
        "workers": config.WORKERS,
        "debug": config.DEBUG,
        "gd_vertex_cap": config.GD_VERTEX_CAP,
        "sgp_point_cap": config.SGP_POINT_CAP,
        "search_letter_cap": config.SEARCH_LETTER_CAP,
    }


def test_log_is_silent_without_debug(monkeypatch, capsys):
    monkeypatch.setattr(config, "DEBUG", False)
    config.log("WORDS", "hidden")
    assert capsys.readouterr().err == ""


def test_log_writes_tagged_lines_to_stderr(monkeypatch, capsys):
    monkeypatch.setattr(config, "DEBUG", True)
    config.log("WORDS", "shown")
    captured = capsys.readouterr()
    assert captured.err == "[WORDS] shown\n"
    assert captured.out == ""


def test_parallel_map_keeps_order(monkeypatch):
    monkeypatch.setattr(config, "WORKERS", 2)
    assert config.parallel_map(abs, [-3, 2, -1, 0]) == [3, 2, 1, 0]
    monkeypatch.setattr(config, "WORKERS", 1)
    assert config.parallel_map(abs, [-3, 2, -1, 0]) == [3, 2, 1, 0]


def test_parallel_results_match_sequential(monkeypatch):
    P = PointSequence(points=[(x,) for x in range(5)], dim=1)
    monkeypatch.setattr(config, "WORKERS", 1)
    sequential = enumerate_minimal_tverberg(P, 3)
    monkeypatch.setattr(config, "WORKERS", 2)
    assert delta_complex(EXAMPLE_WORD, 2) == from_facets(EXAMPLE_WORD_FACETS)
    assert enumerate_minimal_tverberg(P, 3) == sequential


def test_parallel_map_reuses_one_pool(monkeypatch):
    monkeypatch.setattr(config, "WORKERS", 2)
    config.parallel_map(abs, [-1, -2])
    pool = config.worker_pool()
    config.parallel_map(abs, [-3, -4])
    assert config.worker_pool() is pool
    monkeypatch.setattr(config, "WORKERS", 3)
    assert config.worker_pool() is not pool
    config.shutdown_pool()
