"""Matroids as a ground set plus an independence oracle.

Concrete families:

* uniform matroids U(r, n),
* linear matroids given by columns over a prime field,
* projective geometries PG(n-1, q) on canonical projective points,
* the rank-2 "two parallel classes" matroid whose independent pairs are
  exactly the cross pairs between the classes,
* explicit size-k layers, where the user supplies the independent k-sets
  directly and the oracle answers only for subsets of size <= k.

Matroids are immutable after construction and oracle calls are pure, so
instances can be shared freely across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

import numpy as np

from .fields import PrimeField, _rank_rows, projective_points


@dataclass(frozen=True)
class GroundSet:
    """Elements 0..m-1, optionally labelled (e.g. by projective points)."""

    m: int
    labels: tuple | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"ground set must have at least one element, got m={self.m}")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.m:
                raise ValueError("label count does not match ground-set size")
            if len(set(labels)) != self.m:
                raise ValueError("ground-set labels must be unique")
            object.__setattr__(self, "labels", labels)

    def label_index(self) -> dict:
        """Map from label to element index (labels must be present)."""
        if self.labels is None:
            raise ValueError("ground set carries no labels")
        return {lab: i for i, lab in enumerate(self.labels)}


@dataclass(frozen=True)
class UniformSpec:
    r: int
    n: int


@dataclass(frozen=True)
class LinearSpec:
    q: int
    columns: tuple  # tuple of equal-length coordinate tuples


@dataclass(frozen=True)
class ProjectiveSpec:
    n: int  # dimension of the ambient vector space; points form PG(n-1, q)
    q: int


@dataclass(frozen=True)
class ParallelClassesSpec:
    m_per_class: int


@dataclass(frozen=True)
class ExplicitSpec:
    ground_size: int
    k: int
    sets: tuple  # tuple of sorted k-tuples

MatroidSpec = Union[UniformSpec, LinearSpec, ProjectiveSpec, ParallelClassesSpec, ExplicitSpec]


class Matroid:
    """Ground set, independence oracle, and rank.

    ``oracle`` receives a sorted tuple of distinct in-range element indices.
    Rank is computed once by greedy extension, which is correct for matroids
    by the greedy property.  For user-supplied explicit layers that are not
    actually matroid layers the behaviour of rank (and of everything downstream)
    is undefined; :func:`axiom_spot_check` offers a non-exhaustive sanity check.
    """

    def __init__(self, ground: GroundSet, spec: MatroidSpec, oracle, name: str):
        self.ground = ground
        self.spec = spec
        self.name = name
        self._oracle = oracle
        self.rank = self._greedy_rank()

    @property
    def m(self) -> int:
        return self.ground.m

    def is_independent(self, subset) -> bool:
        s = sorted({int(e) for e in subset})
        if s and (s[0] < 0 or s[-1] >= self.m):
            raise ValueError(f"element out of range [0, {self.m}) in {s}")
        return bool(self._oracle(tuple(s)))

    def _greedy_rank(self) -> int:
        chain: list[int] = []
        for e in range(self.m):
            chain.append(e)
            if not self._oracle(tuple(chain)):
                chain.pop()
        return len(chain)

    def subset_rank(self, subset) -> int:
        """Rank of a subset: size of a maximal independent subset, greedily."""
        s = sorted({int(e) for e in subset})
        chain: list[int] = []
        for e in s:
            chain.append(e)
            if not self.is_independent(chain):
                chain.pop()
        return len(chain)

    def __repr__(self):
        return f"Matroid({self.name}, m={self.m}, rank={self.rank})"


def is_independent(matroid: Matroid, subset) -> bool:
    return matroid.is_independent(subset)


def matroid_rank(matroid: Matroid) -> int:
    return matroid.rank


def _validate_columns(columns, q: int):
    cols = [tuple(int(x) % q for x in col) for col in columns]
    if not cols:
        raise ValueError("linear matroid needs at least one column")
    dim = len(cols[0])
    if dim < 1:
        raise ValueError("column dimension must be >= 1")
    for col in cols:
        if len(col) != dim:
            raise ValueError("all columns must have equal dimension")
        if not any(col):
            raise ValueError(f"column {col} is zero after reduction mod {q}")
    return tuple(cols), dim


def _vector_oracle(vectors, q: int, dim: int):
    def oracle(s: tuple) -> bool:
        if len(s) > dim:
            return False
        if len(s) <= 1:
            return True
        return _rank_rows([vectors[e] for e in s], q) == len(s)

    return oracle


def build_matroid(spec: MatroidSpec) -> Matroid:
    """Instantiate a matroid family from its spec.

    Raises ValueError with a reason when the spec violates its invariants.
    """
    if isinstance(spec, UniformSpec):
        if not 0 <= spec.r <= spec.n:
            raise ValueError(f"uniform matroid needs 0 <= r <= n, got r={spec.r}, n={spec.n}")
        if spec.n < 1:
            raise ValueError("uniform matroid needs n >= 1")
        r = spec.r
        return Matroid(GroundSet(spec.n), spec, lambda s: len(s) <= r,
                       f"uniform(r={spec.r},n={spec.n})")

    if isinstance(spec, LinearSpec):
        field = PrimeField(spec.q)
        cols, dim = _validate_columns(spec.columns, field.p)
        spec = LinearSpec(field.p, cols)
        return Matroid(GroundSet(len(cols)), spec, _vector_oracle(cols, field.p, dim),
                       f"linear(q={field.p},m={len(cols)})")

    if isinstance(spec, ProjectiveSpec):
        if spec.n < 1:
            raise ValueError(f"projective matroid needs n >= 1, got {spec.n}")
        field = PrimeField(spec.q)
        pts = projective_points(spec.n, field.p)
        ground = GroundSet(len(pts), labels=tuple(pts))
        matroid = Matroid(ground, spec, _vector_oracle(pts, field.p, spec.n),
                          f"projective(n={spec.n},q={field.p})")
        return matroid

    if isinstance(spec, ParallelClassesSpec):
        mpc = spec.m_per_class
        if mpc < 1:
            raise ValueError(f"parallel-class matroid needs m_per_class >= 1, got {mpc}")

        def oracle(s: tuple) -> bool:
            if len(s) <= 1:
                return True
            if len(s) == 2:
                return (s[0] < mpc) != (s[1] < mpc)
            return False

        return Matroid(GroundSet(2 * mpc), spec, oracle, f"parallel_classes(m={mpc})")

    if isinstance(spec, ExplicitSpec):
        if spec.ground_size < 1:
            raise ValueError("explicit matroid needs ground_size >= 1")
        if not 1 <= spec.k <= spec.ground_size:
            raise ValueError(f"explicit matroid needs 1 <= k <= ground_size, got k={spec.k}")
        norm = set()
        for s in spec.sets:
            t = tuple(sorted(int(e) for e in s))
            if len(set(t)) != spec.k:
                raise ValueError(f"explicit set {s} does not have exactly k={spec.k} distinct elements")
            if t[0] < 0 or t[-1] >= spec.ground_size:
                raise ValueError(f"explicit set {s} has elements out of range")
            norm.add(t)
        sets = tuple(sorted(norm))
        spec = ExplicitSpec(spec.ground_size, spec.k, sets)
        as_sets = [frozenset(t) for t in sets]
        k = spec.k

        def oracle(s: tuple) -> bool:
            if len(s) > k:
                return False
            if not s:
                return True
            ss = set(s)
            return any(ss <= layer for layer in as_sets)

        return Matroid(GroundSet(spec.ground_size), spec, oracle,
                       f"explicit(m={spec.ground_size},k={spec.k})")

    raise ValueError(f"unknown matroid spec: {spec!r}")


def spec_to_json(spec: MatroidSpec) -> dict:
    """Serialize a spec to the JSON object form with a "type" discriminator."""
    if isinstance(spec, UniformSpec):
        return {"type": "uniform", "r": spec.r, "n": spec.n}
    if isinstance(spec, LinearSpec):
        return {"type": "linear", "q": spec.q, "columns": [list(c) for c in spec.columns]}
    if isinstance(spec, ProjectiveSpec):
        return {"type": "projective", "n": spec.n, "q": spec.q}
    if isinstance(spec, ParallelClassesSpec):
        return {"type": "parallel_classes", "m_per_class": spec.m_per_class}
    if isinstance(spec, ExplicitSpec):
        return {"type": "explicit", "ground_size": spec.ground_size, "k": spec.k,
                "sets": [list(s) for s in spec.sets]}
    raise ValueError(f"unknown matroid spec: {spec!r}")


def spec_from_json(data) -> MatroidSpec:
    """Parse a spec from a JSON object (or a JSON string)."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "type" not in data:
        raise ValueError("matroid spec JSON must be an object with a 'type' field")
    kind = data["type"]
    try:
        if kind == "uniform":
            return UniformSpec(int(data["r"]), int(data["n"]))
        if kind == "linear":
            return LinearSpec(int(data["q"]), tuple(tuple(int(x) for x in c) for c in data["columns"]))
        if kind == "projective":
            return ProjectiveSpec(int(data["n"]), int(data["q"]))
        if kind == "parallel_classes":
            return ParallelClassesSpec(int(data["m_per_class"]))
        if kind == "explicit":
            return ExplicitSpec(int(data["ground_size"]), int(data["k"]),
                                tuple(tuple(int(e) for e in s) for s in data["sets"]))
    except KeyError as exc:
        raise ValueError(f"matroid spec JSON missing field {exc}") from exc
    raise ValueError(f"unknown matroid spec type {kind!r}")


def axiom_spot_check(matroid: Matroid, trials: int = 300, seed: int = 0) -> list[str]:
    """Randomized, non-exhaustive check of the matroid axioms.

    Samples random independent sets and checks downward closure and the
    exchange property.  Returns a list of human-readable violations (empty
    when none were found).  Absence of violations is evidence, not proof.
    """
    rng = np.random.default_rng(seed)
    m = matroid.m
    violations: list[str] = []
    if not matroid.is_independent(()):
        violations.append("empty set reported dependent")
    indep_pool: list[tuple] = []
    for _ in range(trials):
        size = int(rng.integers(0, max(matroid.rank, 1) + 1))
        s = tuple(sorted(rng.choice(m, size=min(size, m), replace=False).tolist()))
        if not matroid.is_independent(s):
            continue
        indep_pool.append(s)
        if s:
            keep = rng.random(len(s)) < 0.5
            sub = tuple(e for e, k in zip(s, keep) if k)
            if not matroid.is_independent(sub):
                violations.append(f"downward closure fails: {sub} inside independent {s}")
    for _ in range(trials):
        if len(indep_pool) < 2:
            break
        a = indep_pool[int(rng.integers(len(indep_pool)))]
        b = indep_pool[int(rng.integers(len(indep_pool)))]
        if len(a) == len(b):
            continue
        small, big = (a, b) if len(a) < len(b) else (b, a)
        candidates = [e for e in big if e not in small]
        if not any(matroid.is_independent(small + (e,)) for e in candidates):
            violations.append(f"exchange fails between {small} and {big}")
    return violations
