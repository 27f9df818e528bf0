"""
Ideal families for verification sweeps.

Exhaustive mode walks every antichain of nonzero monomials in an exponent
box by depth-first search; random mode draws seeded generator sets and
minimalizes them. Named examples come from ``config/examples.yaml``.
"""
import logging
import os
from functools import lru_cache
from typing import Iterator, Literal

import numpy as np
import yaml
from pydantic import BaseModel, Field

from regdim.algebra.monomials import ExponentVector, MonomialIdeal, box_degrees, divides, minimalize
from regdim.exceptions import InputError
from regdim.ideal_format import parse_ideal_text

logger = logging.getLogger("regdim_corpus")

EXAMPLES_PATH = os.path.join(os.path.dirname(__file__), "config", "examples.yaml")

MAX_EXHAUSTIVE_N = 3
MAX_EXHAUSTIVE_EXPONENT = 2
MAX_EXHAUSTIVE_SQUAREFREE_N = 4
RANDOM_ATTEMPTS_PER_SAMPLE = 50


class CorpusSpec(BaseModel):
    """Which ideals a sweep visits."""
    n: int = Field(..., ge=1, description="Number of variables")
    max_exponent: int = Field(1, ge=1, description="Largest exponent of any variable")
    mode: Literal["exhaustive", "random"] = "exhaustive"
    samples: int = Field(100, ge=0, description="Number of random ideals")
    seed: int = Field(0, ge=0, lt=2**64, description="Seed of the random stream")
    squarefree: bool = False
    max_generators: int = Field(8, ge=1, description="Generators drawn per random ideal")

    @property
    def exponent_bound(self) -> int:
        return 1 if self.squarefree else self.max_exponent

    def check_bounds(self) -> None:
        """
        Raises:
            InputError: if exhaustive mode is requested outside its bounds
        """
        if self.mode != "exhaustive":
            return
        if self.squarefree or self.max_exponent == 1:
            if self.n > MAX_EXHAUSTIVE_SQUAREFREE_N:
                raise InputError(f"exhaustive squarefree corpus supports n <= {MAX_EXHAUSTIVE_SQUAREFREE_N}")
        elif self.n > MAX_EXHAUSTIVE_N or self.max_exponent > MAX_EXHAUSTIVE_EXPONENT:
            raise InputError(
                f"exhaustive corpus supports n <= {MAX_EXHAUSTIVE_N} and max exponent <= {MAX_EXHAUSTIVE_EXPONENT}"
            )


class NamedExample(BaseModel):
    name: str
    description: str = ""
    ideal: MonomialIdeal


def _antichains(candidates: list[ExponentVector], start: int,
                chosen: list[ExponentVector]) -> Iterator[tuple[ExponentVector, ...]]:
    yield tuple(chosen)
    for k in range(start, len(candidates)):
        c = candidates[k]
        # candidates are in lex order, so only earlier picks can divide c
        if any(divides(g, c) for g in chosen):
            continue
        chosen.append(c)
        yield from _antichains(candidates, k + 1, chosen)
        chosen.pop()


def _exhaustive(spec: CorpusSpec) -> Iterator[MonomialIdeal]:
    bound = spec.exponent_bound
    candidates = [v for v in box_degrees((0,) * spec.n, (bound,) * spec.n) if any(v)]
    for gens in _antichains(candidates, 0, []):
        yield MonomialIdeal(n=spec.n, gens=gens)


def _random(spec: CorpusSpec) -> Iterator[MonomialIdeal]:
    rng = np.random.default_rng(spec.seed)
    bound = spec.exponent_bound
    seen = set()
    attempts = 0
    limit = spec.samples * RANDOM_ATTEMPTS_PER_SAMPLE
    while len(seen) < spec.samples and attempts < limit:
        attempts += 1
        count = int(rng.integers(1, spec.max_generators + 1))
        draws = rng.integers(0, bound + 1, size=(count, spec.n))
        ideal = minimalize(draws.tolist(), spec.n)
        if ideal.is_unit or ideal in seen:
            continue
        seen.add(ideal)
        yield ideal
    if len(seen) < spec.samples:
        logger.warning(f"Random corpus produced {len(seen)} of {spec.samples} ideals after {attempts} draws")


def enumerate_ideals(spec: CorpusSpec) -> Iterator[MonomialIdeal]:
    """
    Stream the ideals of a corpus in a deterministic order.

    Exhaustive mode yields the zero ideal first and never the unit ideal.

    Raises:
        InputError: if the corpus exceeds the exhaustive bounds
    """
    spec.check_bounds()
    logger.info(f"Enumerating {spec.mode} corpus: n={spec.n}, exponent bound {spec.exponent_bound}, seed {spec.seed}")
    if spec.mode == "exhaustive":
        return _exhaustive(spec)
    return _random(spec)


@lru_cache(maxsize=1)
def named_example_table() -> tuple[NamedExample, ...]:
    with open(EXAMPLES_PATH, encoding="utf-8") as f:
        data = yaml.safe_load(f)
    return tuple(
        NamedExample(name=entry["name"], description=entry.get("description", ""),
                     ideal=parse_ideal_text(entry["ideal"]))
        for entry in data["examples"]
    )


def named_examples() -> list[MonomialIdeal]:
    return [example.ideal for example in named_example_table()]


def named_example(name: str) -> MonomialIdeal:
    """
    Raises:
        InputError: for an unknown name
    """
    for example in named_example_table():
        if example.name == name:
            return example.ideal
    raise InputError(f"no named example '{name}'")
