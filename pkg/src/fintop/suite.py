"""Exhaustive property suite over every small space.

Each check returns how many cases it examined and the first failure, if
any.  :func:`run_suite` runs them in a fixed order and never stops early;
an exception inside a check counts as a failure of that check.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from .enumeration import (
    DEFAULT_LIMIT,
    enumerate_topologies,
    homeomorphism_classes,
    labeled_topologies_by_neighbourhoods,
)
from .epi import (
    check_dense_implies_epi,
    is_counterexample,
    is_epi_bruteforce,
    is_epi_dense,
    non_epi_witness,
)
from .errors import LimitExceeded
from .generators import discrete
from .io import parse_space, serialize_space
from .maps import (
    ContinuousMap,
    are_homeomorphic,
    compose,
    enumerate_continuous_maps,
    identity,
    is_homeomorphism,
)
from .partition import Partition
from .quotient import (
    STRATEGIES,
    Reflection,
    factor_through_reflection,
    hausdorff_partition,
    hausdorff_reflection,
    quotient_by,
    replay_separation_proof,
)
from .space import (
    FiniteSpace,
    closure,
    interior,
    is_hausdorff,
    separation_axioms,
    validate_topology,
)

LABELED_COUNTS = (1, 1, 4, 29, 355, 6942)
HOMEO_COUNTS = (1, 1, 3, 9, 33, 139)
# map-level checks stop here regardless of max_n
MAP_LIMIT = 3

ReflectFn = Callable[[FiniteSpace], Reflection]


class CheckFailed(Exception):
    pass


@dataclass
class PropertyResult:
    name: str
    passed: bool
    cases: int
    seconds: float
    detail: str = ""


@dataclass
class SuiteReport:
    max_n: int
    results: list[PropertyResult] = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        lines = [f"suite max_n={self.max_n}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name:<36} cases={r.cases:<7} {r.seconds:6.2f}s"
            if r.detail:
                line += f"  {r.detail}"
            lines.append(line)
        for key, value in self.counts.items():
            lines.append(f"count {key}: {value}")
        lines.append("ALL PASS" if self.passed else "FAILURES PRESENT")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "max_n": self.max_n,
            "passed": self.passed,
            "results": [asdict(r) for r in self.results],
            "counts": self.counts,
        }, indent=2)


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


class _Context:
    def __init__(self, max_n: int, reflect: ReflectFn):
        self.max_n = max_n
        self.reflect = reflect
        self.by_n = {n: enumerate_topologies(n) for n in range(max_n + 1)}
        self.spaces = [s for n in range(max_n + 1) for s in self.by_n[n]]
        self.small = [s for s in self.spaces if s.n <= MAP_LIMIT]
        self.hausdorff_small = [discrete(k) for k in range(min(max_n, MAP_LIMIT) + 1)]
        self._refl: dict = {}

    def reflection(self, space: FiniteSpace) -> Reflection:
        if space not in self._refl:
            self._refl[space] = self.reflect(space)
        return self._refl[space]


def check_enumeration(ctx: _Context) -> int:
    for n in range(ctx.max_n + 1):
        labeled = ctx.by_n[n]
        _expect(len(labeled) == LABELED_COUNTS[n], f"n={n}: {len(labeled)} labeled topologies")
        _expect(labeled == labeled_topologies_by_neighbourhoods(n), f"n={n}: enumeration routes disagree")
        classes = len(homeomorphism_classes(labeled))
        _expect(classes == HOMEO_COUNTS[n], f"n={n}: {classes} homeomorphism classes")
        for s in labeled:
            _expect(validate_topology(s.n, s.opens) == s, f"{s} does not re-validate")
    return len(ctx.spaces)


def check_kuratowski(ctx: _Context) -> int:
    cases = 0
    for s in ctx.spaces:
        _expect(closure(s, 0) == 0, f"{s}: closure of empty set")
        for a in range(1 << s.n):
            ca = closure(s, a)
            _expect(a & ~ca == 0, f"{s}: {a} not inside its closure")
            _expect(closure(s, ca) == ca, f"{s}: closure not idempotent on {a}")
            _expect(interior(s, a) == s.full ^ closure(s, s.full ^ a), f"{s}: interior duality on {a}")
            for b in range(a, 1 << s.n):
                _expect(closure(s, a | b) == ca | closure(s, b), f"{s}: closure of union {a},{b}")
                cases += 1
    return cases


def check_separation(ctx: _Context) -> int:
    for s in ctx.spaces:
        ax = separation_axioms(s)
        _expect(ax.t2 == (len(s.opens) == 1 << s.n), f"{s}: T2 differs from discreteness")
        _expect((not ax.t2 or ax.t1) and (not ax.t1 or ax.t0), f"{s}: axioms not monotone")
    return len(ctx.spaces)


def check_strategy_agreement(ctx: _Context) -> int:
    for s in ctx.spaces:
        parts = {st: hausdorff_partition(s, st) for st in STRATEGIES}
        _expect(len(set(parts.values())) == 1, f"{s}: strategies disagree {parts}")
    return len(ctx.spaces)


def check_reflection_hausdorff(ctx: _Context) -> int:
    for s in ctx.spaces:
        refl = ctx.reflection(s)
        _expect(is_hausdorff(refl.space), f"{s}: H(C) not Hausdorff")
        _expect(len(refl.space.opens) == 1 << refl.space.n, f"{s}: H(C) not discrete")
        replay_separation_proof(refl)
    return len(ctx.spaces)


def check_quotient_topology(ctx: _Context) -> int:
    cases = 0
    for s in ctx.small:
        for labels in _set_partitions(s.n):
            p = Partition.from_labels(labels)
            q = quotient_by(s, p)
            for bm in range(1 << len(p)):
                pre = 0
                for x in range(s.n):
                    if bm >> p.block_of[x] & 1:
                        pre |= 1 << x
                _expect(q.space.is_open(bm) == s.is_open(pre), f"{s}: quotient by {p.as_lists()} wrong at {bm}")
            cases += 1
    return cases


def _set_partitions(n: int):
    """Restricted growth strings of length n."""
    def grow(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            yield from grow(prefix + [v], max(top, v))
    yield from grow([], -1)


def check_universal_property(ctx: _Context) -> int:
    cases = 0
    targets = [discrete(k) for k in range(1, MAP_LIMIT + 1)]
    for c in ctx.small:
        refl = ctx.reflection(c)
        r = refl.projection
        for d in targets:
            hc_maps = enumerate_continuous_maps(refl.space, d)
            for f in enumerate_continuous_maps(c, d):
                fbar = factor_through_reflection(refl, f)
                _expect(compose(fbar, r) == f, f"{c}: fbar∘r != f for {f.assignment}")
                solutions = [k for k in hc_maps if compose(k, r) == f]
                _expect(solutions == [fbar], f"{c}: {len(solutions)} factorizations of {f.assignment}")
                cases += 1
    return cases


def check_fixed_by_reflection(ctx: _Context) -> int:
    for s in ctx.spaces:
        refl = ctx.reflection(s)
        _expect(is_hausdorff(s) == are_homeomorphic(s, refl.space), f"{s}: Hausdorff but not homeomorphic to H(C), or vice versa")
        if is_hausdorff(s):
            _expect(is_homeomorphism(refl.projection), f"{s}: projection is not a homeomorphism")
    return len(ctx.spaces)


def check_idempotence(ctx: _Context) -> int:
    for s in ctx.spaces:
        h = ctx.reflection(s).space
        _expect(are_homeomorphic(ctx.reflection(h).space, h), f"{s}: H(H(C)) not ≅ H(C)")
    return len(ctx.spaces)


def check_functoriality(ctx: _Context) -> int:
    """Every map lifts to H and H(id) = id on all small spaces.

    Composition is checked on homeomorphism-class representatives only;
    all labeled triples would take minutes.
    """
    def h_of(f: ContinuousMap) -> ContinuousMap:
        return factor_through_reflection(ctx.reflection(f.dom), compose(ctx.reflection(f.cod).projection, f))

    cases = 0
    for s in ctx.small:
        _expect(h_of(identity(s)) == identity(ctx.reflection(s).space), f"{s}: H(id) != id")
        for t in ctx.small:
            for f in enumerate_continuous_maps(s, t):
                h_of(f)
                cases += 1
    reps = [s for n in range(min(ctx.max_n, MAP_LIMIT) + 1) for s in enumerate_topologies(n, up_to_homeo=True)]
    hom = {(a, b): enumerate_continuous_maps(a, b) for a in reps for b in reps}
    lifted = {key: [h_of(f) for f in maps] for key, maps in hom.items()}
    for a in reps:
        for b in reps:
            for f, hf in zip(hom[a, b], lifted[a, b]):
                for c in reps:
                    for g, hg in zip(hom[b, c], lifted[b, c]):
                        _expect(h_of(compose(g, f)) == compose(hg, hf), "H(g∘f) != H(g)∘H(f)")
                        cases += 1
    return cases


def _haus_maps(ctx: _Context):
    for a in ctx.hausdorff_small:
        for b in ctx.hausdorff_small:
            yield from enumerate_continuous_maps(a, b)


def check_epi_equivalence(ctx: _Context) -> int:
    cases = 0
    for f in _haus_maps(ctx):
        dense = is_epi_dense(f).is_epi
        brute = is_epi_bruteforce(f, "haus", 2 * f.cod.n if f.cod.n else 1)
        _expect(dense == brute.is_epi, f"{f}: dense test {dense}, brute force {brute.is_epi}")
        _expect(dense == f.is_surjective(), f"{f}: epi differs from surjective")
        _expect(check_dense_implies_epi(f, 2 * f.cod.n if f.cod.n else 1), f"{f}: dense but not epi")
        if brute.counterexample is not None:
            _expect(is_counterexample(f, brute.counterexample), f"{f}: invalid brute-force counterexample")
        cases += 1
    return cases


def check_witness(ctx: _Context) -> int:
    cases = 0
    for f in _haus_maps(ctx):
        pair = non_epi_witness(f)
        dense = is_epi_dense(f).is_epi
        _expect((pair is None) == dense, f"{f}: witness presence disagrees with density")
        if pair is not None:
            _expect(is_counterexample(f, pair), f"{f}: witness does not validate")
        cases += 1
    return cases


def check_top_baseline(ctx: _Context) -> int:
    cases = 0
    for a in ctx.small:
        for b in ctx.small:
            for f in enumerate_continuous_maps(a, b):
                v = is_epi_bruteforce(f, "top", MAP_LIMIT)
                _expect(v.is_epi == f.is_surjective(), f"{f}: Top epi {v.is_epi}, surjective {f.is_surjective()}")
                if v.counterexample is not None:
                    _expect(is_counterexample(f, v.counterexample, require_hausdorff=False), f"{f}: bad counterexample")
                cases += 1
    return cases


def check_round_trip(ctx: _Context) -> int:
    for s in ctx.spaces:
        _expect(parse_space(serialize_space(s)) == s, f"{s}: round trip changed the space")
    return len(ctx.spaces)


CHECKS: list[tuple[str, Callable[[_Context], int]]] = [
    ("enumeration counts", check_enumeration),
    ("kuratowski laws", check_kuratowski),
    ("separation axioms", check_separation),
    ("quotient topology", check_quotient_topology),
    ("strategy agreement", check_strategy_agreement),
    ("H(C) hausdorff", check_reflection_hausdorff),
    ("universal property", check_universal_property),
    ("hausdorff iff homeomorphic to H(C)", check_fixed_by_reflection),
    ("idempotence", check_idempotence),
    ("functoriality", check_functoriality),
    ("dense iff epi (haus)", check_epi_equivalence),
    ("non-epi witness", check_witness),
    ("top baseline", check_top_baseline),
    ("serialization round trip", check_round_trip),
]


def run_suite(max_n: int = 3, reflect: Optional[ReflectFn] = None,
              only: Optional[list[str]] = None) -> SuiteReport:
    if not 0 <= max_n <= DEFAULT_LIMIT:
        raise LimitExceeded(f"suite supports max_n in 0..{DEFAULT_LIMIT}, got {max_n}")
    ctx = _Context(max_n, reflect or hausdorff_reflection)
    report = SuiteReport(max_n)
    report.counts = {
        "labeled topologies": {n: len(ctx.by_n[n]) for n in range(max_n + 1)},
        "homeomorphism classes": {n: len(enumerate_topologies(n, up_to_homeo=True)) for n in range(max_n + 1)},
    }
    for name, check in CHECKS:
        if only is not None and name not in only:
            continue
        start = time.perf_counter()
        try:
            cases, ok, detail = check(ctx), True, ""
        except CheckFailed as exc:
            cases, ok, detail = 0, False, str(exc)
        except Exception as exc:  # noqa: BLE001 - any crash is a failed property
            cases, ok, detail = 0, False, f"{type(exc).__name__}: {exc}"
        report.results.append(PropertyResult(name, ok, cases, time.perf_counter() - start, detail))
    return report


def collapsed_reflection(space: FiniteSpace) -> Reflection:
    """Deliberately wrong reflection that lumps every point into one class.

    Used to check that the suite catches a bad partition.
    """
    q = quotient_by(space, Partition.indiscrete(space.n))
    return Reflection(q, tuple(1 << i for i in q.space.points))


FAULTS: dict[str, ReflectFn] = {"collapsed-partition": collapsed_reflection}
