"""Shared fixtures: seeded corpora and per-monoid staircase pipelines."""

from __future__ import annotations

import random
from dataclasses import dataclass

import pytest

from aperykit.apery import AperyReport, apery_delta, extremal_set
from aperykit.groebner import GroebnerBasis, buchberger, ideal_generators
from aperykit.orders import apery_order
from aperykit.sampling import random_corpus, random_semigroup
from aperykit.semigroup import NumericalSemigroup

CORPUS_SEED = 20240917


@dataclass(frozen=True)
class Pipeline:
    """Everything criterion checks need for one ordering of one monoid."""

    inner: tuple[int, ...]
    flavor: str
    basis: GroebnerBasis
    report: AperyReport
    extremal: tuple[int, ...]


def rotation(k: int, i: int) -> tuple[int, ...]:
    return tuple([p for p in range(1, k) if p != i] + [i])


def build_pipelines(S: NumericalSemigroup) -> list[Pipeline]:
    """The k-1 reverse-lex pipelines plus the default lex pipeline, wrt a_k."""
    k = len(S.generators)
    choices = [(tuple(range(1, k)), "lex")]
    choices += [(rotation(k, i), "revlex") for i in range(1, k)]
    out = []
    for inner, flavor in choices:
        order = apery_order(k, k, S.generators, inner=inner, flavor=flavor)
        basis = buchberger(ideal_generators(S, order), order)
        report = apery_delta(S, k, inner=inner, flavor=flavor, basis=basis)
        out.append(
            Pipeline(
                inner=inner,
                flavor=flavor,
                basis=basis,
                report=report,
                extremal=tuple(extremal_set(S, report, basis)),
            )
        )
    return out


@pytest.fixture(scope="session")
def corpus100():
    """The acceptance corpus: 100 minimal monoids, k in 3..5, generators <= 60."""
    return random_corpus(CORPUS_SEED, 100, kmin=3, kmax=5, max_gen=60)


@pytest.fixture(scope="session")
def corpus100_pipelines(corpus100):
    return {S.generators: build_pipelines(S) for S in corpus100}


@pytest.fixture(scope="session")
def corpus_k2():
    rng = random.Random(CORPUS_SEED + 1)
    return [random_semigroup(rng, kmin=2, kmax=2, max_gen=60) for _ in range(20)]


@pytest.fixture(scope="session")
def small_corpus():
    """A cheaper mixed corpus for module-level property sweeps."""
    rng = random.Random(CORPUS_SEED + 2)
    return [random_semigroup(rng, kmin=2, kmax=5, max_gen=40) for _ in range(30)]
