"""Order-free faceted glyph queries over a loaded catalog.

The index keeps one sorted posting list of canonical codes per
(area, family, facet, value) plus per-area and per-family lists; a query
is the intersection of the lists named by its assignment. Because results
are pure set intersections, the order in which facet values were chosen
can never matter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .catalog import Catalog, Family
from .errors import UnknownArea, UnknownFacet, UnknownFamily, UnknownValue


@dataclass(frozen=True)
class FacetQuery:
    """A partial Choose-Box assignment: area, optional family, and any
    subset of (facet -> value) choices, at most one value per facet."""

    area: str
    family: str | None = None
    assignment: Mapping[str, str] = field(default_factory=dict)

    def with_value(self, facet: str, value: str) -> "FacetQuery":
        merged = dict(self.assignment)
        merged[facet] = value
        return FacetQuery(self.area, self.family, merged)

    def without(self, facet: str) -> "FacetQuery":
        reduced = {f: v for f, v in self.assignment.items() if f != facet}
        return FacetQuery(self.area, self.family, reduced)


@dataclass(frozen=True)
class QueryResult:
    """Matching codes (sorted ascending) plus, per facet, the values that
    would still leave at least one glyph if chosen."""

    codes: tuple[str, ...]
    count: int
    available: Mapping[str, tuple[str, ...]]


def _intersect(a: Sequence[str], b: Sequence[str]) -> list[str]:
    # both inputs sorted ascending and duplicate-free
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return out


class FacetIndex:
    """Read-only query index built once from an immutable catalog."""

    def __init__(self, catalog: Catalog):
        self.catalog = catalog
        self._area_codes: dict[str, list[str]] = {}
        self._family_codes: dict[tuple[str, str], list[str]] = {}
        self._postings: dict[tuple[str, str, str, str], list[str]] = {}
        for key, rec in catalog.records.items():
            self._area_codes.setdefault(rec.area, []).append(key)
            self._family_codes.setdefault((rec.area, rec.family), []).append(key)
            for name, value in rec.facets.items():
                self._postings.setdefault((rec.area, rec.family, name, value), []).append(key)
        for codes in self._area_codes.values():
            codes.sort()
        for codes in self._family_codes.values():
            codes.sort()
        for codes in self._postings.values():
            codes.sort()

    # -- resolution ------------------------------------------------------

    def _resolve(self, q: FacetQuery) -> Family | None:
        if q.area not in self.catalog.taxonomy.areas:
            raise UnknownArea(f"unknown area {q.area!r}")
        if q.family is None:
            if q.assignment:
                raise UnknownFacet("facet assignment requires a family")
            return None
        found = self.catalog.taxonomy.family_in_area(q.area, q.family)
        if found is None:
            raise UnknownFamily(f"no family {q.family!r} in area {q.area!r}")
        family = found[1]
        for name, value in q.assignment.items():
            facet = family.facet(name)
            if facet is None:
                raise UnknownFacet(f"family {q.family!r} has no facet {name!r}")
            if value not in facet.values:
                raise UnknownValue(f"facet {name!r} has no value {value!r}")
        return family

    def _base_codes(self, q: FacetQuery) -> list[str]:
        if q.family is None:
            return self._area_codes.get(q.area, [])
        return self._family_codes.get((q.area, q.family), [])

    # -- operations -------------------------------------------------------

    def query(self, q: FacetQuery) -> QueryResult:
        """All codes matching the area, family and every assigned value.

        An empty result is legal (the user can over-constrain); errors are
        reserved for names that do not exist in the taxonomy at all.
        """
        family = self._resolve(q)
        codes = self._base_codes(q)
        available: dict[str, tuple[str, ...]] = {}
        if family is None:
            return QueryResult(tuple(codes), len(codes), available)
        for facet in family.facets:
            value = q.assignment.get(facet.name)
            if value is not None:
                codes = _intersect(codes, self._posting(q, facet.name, value))
        for facet in family.facets:
            # the facet's own constraint is lifted so the UI can offer
            # single-click switching between values of an assigned facet
            base = self._base_codes(q)
            for other in family.facets:
                if other.name == facet.name:
                    continue
                value = q.assignment.get(other.name)
                if value is not None:
                    base = _intersect(base, self._posting(q, other.name, value))
            base_set = set(base)
            available[facet.name] = tuple(
                v for v in facet.values
                if any(c in base_set for c in self._posting(q, facet.name, v))
            )
        return QueryResult(tuple(codes), len(codes), available)

    def refine(self, result: QueryResult, q: FacetQuery, facet: str, value: str) -> QueryResult:
        """Result after adding one more (facet, value) choice to ``q``.

        Equal to ``query(q with facet=value)``; ``result`` must be the
        result of ``q`` itself. Undo is simply a query on the reduced
        assignment.
        """
        return self.query(q.with_value(facet, value))

    def orderings_agree(self, q: FacetQuery) -> bool:
        """True iff applying the assignment one pair at a time yields the
        same final code list for every permutation of the pairs."""
        items = list(q.assignment.items())
        expected: tuple[str, ...] | None = None
        for perm in itertools.permutations(items):
            partial = FacetQuery(q.area, q.family, {})
            for name, value in perm:
                partial = partial.with_value(name, value)
            codes = self.query(partial).codes
            if expected is None:
                expected = codes
            elif codes != expected:
                return False
        return True

    def _posting(self, q: FacetQuery, facet: str, value: str) -> list[str]:
        return self._postings.get((q.area, q.family, facet, value), [])


def index_for(catalog: Catalog) -> FacetIndex:
    """Per-catalog cached index; catalogs are immutable so one suffices."""
    index = getattr(catalog, "_facet_index", None)
    if index is None:
        index = FacetIndex(catalog)
        catalog._facet_index = index
    return index


def query(q: FacetQuery, catalog: Catalog) -> QueryResult:
    return index_for(catalog).query(q)


def refine(result: QueryResult, q: FacetQuery, facet: str, value: str, catalog: Catalog) -> QueryResult:
    return index_for(catalog).refine(result, q, facet, value)


def orderings_agree(q: FacetQuery, catalog: Catalog) -> bool:
    return index_for(catalog).orderings_agree(q)
