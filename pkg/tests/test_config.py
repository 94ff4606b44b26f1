# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

import pytest

from kfpoly import config


@pytest.fixture
def saved_config():
    threads, quiet, limits = config.get_threads(), config.get_quiet(), config.get_limits()
    yield
    config.set_threads(threads)
    config.set_quiet(quiet)
    for name, value in limits.items():
        config.set_limit(name, value)


def test_environment(monkeypatch, saved_config):
    monkeypatch.setenv("KFPOLY_THREADS", "4")
    monkeypatch.setenv("KFPOLY_QUIET", "yes")
    config.setup_config()
    assert config.get_threads() == 4
    assert config.get_quiet() is True
    monkeypatch.setenv("KFPOLY_QUIET", "0")
    config.setup_config()
    assert config.get_quiet() is False


def test_environment_rejects(monkeypatch, saved_config):
    monkeypatch.setenv("KFPOLY_THREADS", "many")
    with pytest.raises(ValueError):
        config.setup_config()
    monkeypatch.setenv("KFPOLY_THREADS", "1")
    monkeypatch.setenv("KFPOLY_QUIET", "maybe")
    with pytest.raises(ValueError):
        config.setup_config()


def test_threads(saved_config):
    config.set_threads("3")
    assert config.get_threads() == 3
    with pytest.raises(ValueError):
        config.set_threads(0)


def test_limits(saved_config):
    assert set(config.get_limits()) == {"max_rank", "max_crystal_rank", "max_size", "max_q_degree"}
    config.check_limit("max_rank", 8)
    with pytest.raises(ValueError):
        config.check_limit("max_rank", 9)
    config.set_limit("max_rank", 2)
    with pytest.raises(ValueError):
        config.check_limit("max_rank", 3)
    with pytest.raises(ValueError):
        config.set_limit("max_rank", -1)
    with pytest.raises(ValueError):
        config.set_limit("max_colors", 1)
    with pytest.raises(ValueError):
        config.check_limit("max_colors", 1)


def test_get_limits_is_a_copy(saved_config):
    limits = config.get_limits()
    limits["max_rank"] = 0
    assert config.get_limits()["max_rank"] != 0
