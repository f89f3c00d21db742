"""Shared helpers for the test suite: seeded random supports and states, a
brute-force circuit oracle, and a schema validator wired to docs/schema/.
"""

import json
import pathlib
import random
from functools import lru_cache
from itertools import combinations

import pytest

from lusym import IntMatrix, PureState, Support, rational_rank

SCHEMA_DIR = pathlib.Path(__file__).resolve().parent.parent / "docs" / "schema"


def all_labels(n):
    return [format(x, f"0{n}b") for x in range(2**n)]


def random_support(rng: random.Random, n: int, max_labels: int, min_labels: int = 2) -> Support:
    size = rng.randint(min_labels, min(max_labels, 2**n))
    return Support.from_labels(rng.sample(all_labels(n), size))


def random_state_on(rng: random.Random, support: Support) -> PureState:
    """Generic complex amplitudes on the given support, normalized, with every
    modulus bounded away from zero so genericity assumptions hold."""
    amps = {}
    for lab in support.labels:
        while True:
            c = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            if abs(c) > 0.1:
                break
        amps[lab] = c
    norm = sum(abs(c) ** 2 for c in amps.values()) ** 0.5
    return PureState.from_amplitudes({k: v / norm for k, v in amps.items()})


def sign_vector(label: str) -> tuple:
    return tuple(1 if ch == "0" else -1 for ch in label)


@lru_cache(maxsize=200_000)
def _rank_of(vectors: frozenset) -> int:
    return rational_rank(IntMatrix(sorted(vectors)))


def brute_force_circuit_members(support: Support) -> set:
    """Minimal dependent subsets of the sign vectors, by exhaustive search.

    Slow but obviously correct; used as the oracle for the enumerator.
    Label <-> sign vector is a bijection, so ranks memoize on vector sets.
    """
    labels = support.labels
    vecs = {lab: sign_vector(lab) for lab in labels}
    found: list[frozenset] = []
    for r in range(2, len(labels) + 1):
        for combo in combinations(labels, r):
            cs = frozenset(combo)
            if any(prev <= cs for prev in found):
                continue
            if _rank_of(frozenset(vecs[lab] for lab in combo)) < r:
                found.append(cs)
    return set(found)


@pytest.fixture(scope="session")
def schema_validator():
    from jsonschema import Draft202012Validator
    from referencing import Registry, Resource

    docs = {}
    resources = []
    for path in sorted(SCHEMA_DIR.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        docs[path.name] = doc
        resources.append((doc["$id"], Resource.from_contents(doc)))
    registry = Registry().with_resources(resources)

    def validate(schema_name: str, payload):
        Draft202012Validator(docs[schema_name], registry=registry).validate(payload)

    return validate
