"""Deciding epimorphisms in Haus (and Top, as a baseline).

Two independent routes: the density test (epi iff the image is dense) and a
brute-force search for a parallel pair ``g != h`` with ``g∘f == h∘f``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Literal, Optional

from .errors import (
    BoundTooSmallWarning,
    InvalidParameter,
    NotHausdorffCodomain,
    NotHausdorffDomain,
)
from .generators import discrete
from .maps import ContinuousMap, Cospan, compose, constant, enumerate_continuous_maps, image
from .quotient import collapse_closed, hausdorff_reflection
from .space import FiniteSpace, closure, is_dense, is_hausdorff

Category = Literal["haus", "top"]


@dataclass(frozen=True)
class EpiVerdict:
    is_epi: bool
    method: Literal["dense-test", "brute-force"]
    counterexample: Optional[Cospan] = None


def _require_hausdorff(f: ContinuousMap) -> None:
    if not is_hausdorff(f.dom):
        raise NotHausdorffDomain("domain is not Hausdorff")
    if not is_hausdorff(f.cod):
        raise NotHausdorffCodomain("codomain is not Hausdorff")


def is_epi_dense(f: ContinuousMap) -> EpiVerdict:
    _require_hausdorff(f)
    return EpiVerdict(is_dense(f.cod, image(f)), "dense-test")


def default_bound(f: ContinuousMap, category: Category = "haus") -> int:
    # Top only needs the indiscrete 2-point space to detect non-surjectivity
    return max(1, 2 * f.cod.n) if category == "haus" else 2


def _candidate_codomains(category: Category, bound: int) -> Iterable[FiniteSpace]:
    if category == "haus":
        for k in range(1, bound + 1):
            yield discrete(k)
    else:
        from .enumeration import enumerate_topologies

        for k in range(1, bound + 1):
            yield from enumerate_topologies(k, allow_large=k > 4)


def is_epi_bruteforce(f: ContinuousMap, category: Category = "haus", target_bound: Optional[int] = None) -> EpiVerdict:
    """Search every parallel pair out of ``f.cod`` into small codomains.

    Haus ranges over discrete codomains with ``1..target_bound`` points; a
    bound of ``2 * f.cod.n`` is complete since ``g(B) ∪ h(B)`` never has more
    points.  Top ranges over every labeled topology on ``1..target_bound``
    points.  The reported counterexample is the first pair ``(g, h)`` with
    ``g`` before ``h`` in enumeration order, codomains taken in order.
    """
    category = category.lower()
    if category not in ("haus", "top"):
        raise InvalidParameter(f"unknown category {category!r}")
    if target_bound is None:
        target_bound = default_bound(f, category)
    if target_bound < 1:
        raise InvalidParameter("target_bound must be at least 1")
    if category == "haus":
        _require_hausdorff(f)
        if target_bound < 2 * f.cod.n:
            warnings.warn(
                f"bound {target_bound} is below 2*|cod| = {2 * f.cod.n}; search may miss counterexamples",
                BoundTooSmallWarning,
                stacklevel=2,
            )
    for target in _candidate_codomains(category, target_bound):
        groups: dict[tuple[int, ...], ContinuousMap] = {}
        best = None
        for g in enumerate_continuous_maps(f.cod, target):
            key = tuple(g.assignment[v] for v in f.assignment)
            first = groups.setdefault(key, g)
            if first is not g:
                # first collision for this key; keep the pair whose g comes earliest
                if best is None or first.assignment < best[0].assignment:
                    best = (first, g)
        if best is not None:
            return EpiVerdict(False, "brute-force", Cospan(*best))
    return EpiVerdict(True, "brute-force")


def is_counterexample(f: ContinuousMap, pair: Cospan, require_hausdorff: bool = True) -> bool:
    """``pair`` shows ``f`` is not epi: equal after ``f``, yet different."""
    g, h = pair.g, pair.h
    if g.dom != f.cod:
        return False
    if require_hausdorff and not is_hausdorff(g.cod):
        return False
    return g.assignment != h.assignment and compose(g, f) == compose(h, f)


def non_epi_witness(f: ContinuousMap) -> Optional[Cospan]:
    """Parallel pair proving a non-dense ``f`` is not an epimorphism of Haus.

    Collapses the closure of the image to one point (``q``), reflects the
    result (``r``), and pairs ``g = r∘q`` with the constant map at the
    collapsed class.  An empty domain has nothing to collapse, so any two
    distinct constants into the discrete 2-point space are returned instead.
    """
    _require_hausdorff(f)
    img = image(f)
    if is_dense(f.cod, img):
        return None
    if f.dom.n == 0:
        two = discrete(2)
        pair = Cospan(constant(f.cod, two, 0), constant(f.cod, two, 1))
    else:
        c = closure(f.cod, img)
        q = collapse_closed(f.cod, c).projection
        r = hausdorff_reflection(q.cod).projection
        g = compose(r, q)
        anchor = (c & -c).bit_length() - 1
        pair = Cospan(g, constant(f.cod, g.cod, g(anchor)))
    assert compose(pair.g, f) == compose(pair.h, f)
    assert pair.g != pair.h
    assert is_hausdorff(pair.g.cod)
    return pair


def check_dense_implies_epi(f: ContinuousMap, target_bound: Optional[int] = None) -> bool:
    """Dense image implies epi, checked against the brute-force search."""
    _require_hausdorff(f)
    if not is_dense(f.cod, image(f)):
        return True
    return is_epi_bruteforce(f, "haus", target_bound).is_epi
