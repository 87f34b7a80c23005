"""
Registry of the polynomial families and the named series the CLI can address.
"""

from fractions import Fraction
from typing import Callable, Dict, List, TypedDict

from pystirling.derived import (
    comtet,
    comtet_companion,
    comtet_via_stirling_a,
    cycle_indicator,
    cycle_indicator_via_bell,
    forest,
    forest_companion,
    forest_companion_via_trees,
    forest_via_trees,
    idempotency,
    idempotency_via_bell,
    lah_signed,
    lah_unsigned,
)
from pystirling.exceptions import UnknownFamily
from pystirling.extended import bell_ext, stirling_a_ext
from pystirling.families import (
    assoc_bell,
    bell,
    bell_partition_sum,
    bell_via_potential,
    compose_family,
    potential,
    potential_hat,
    sign,
    stirling1,
    stirling1_via_potential,
    stirling2,
    stirling_a,
    stirling_a_partition_sum,
    stirling_a_via_assoc_bell,
    stirling_a_via_potential,
)
from pystirling.polyring import MultiPoly
from pystirling.series import PowerSeries, exp_full, expm, geometric, identity, logm

Entry = Callable[[int, int], MultiPoly]


class FamilyEntry(TypedDict):
    compute: Entry
    routes: Dict[str, Entry]
    extended: bool


def _numbers(compute: Callable[[int, int], Fraction]) -> Entry:
    def entry(n: int, k: int) -> MultiPoly:
        if n < 0 or k < 0 or k > n:
            return MultiPoly.zero()
        return MultiPoly.constant(compute(n, k))

    return entry


def _bell_any(n: int, k: int) -> MultiPoly:
    # Negative indices address the integer-index extension.
    return bell(n, k) if n >= 0 and k >= 0 else bell_ext(n, k)


def _stirling_a_any(n: int, k: int) -> MultiPoly:
    return stirling_a(n, k) if n >= 0 and k >= 0 else stirling_a_ext(n, k)


def _bell_by_reciprocity(n: int, k: int) -> MultiPoly:
    return stirling_a_ext(-k, -n) * sign(n - k)


def _stirling_a_by_reciprocity(n: int, k: int) -> MultiPoly:
    return bell_ext(-k, -n) * sign(n - k)


def _lah_by_generator(n: int, k: int) -> MultiPoly:
    return compose_family(bell(n, k), lambda j: lah_signed(j, 1))


def _entry(compute: Entry, extended: bool = False, **routes: Entry) -> FamilyEntry:
    named = {name.replace("_", "-"): route for name, route in routes.items()}
    return {"compute": compute, "routes": named, "extended": extended}


FAMILIES: Dict[str, FamilyEntry] = {
    "bell": _entry(_bell_any, partition_sum=bell_partition_sum, potential=bell_via_potential),
    "stirling-a": _entry(
        _stirling_a_any,
        partition_sum=stirling_a_partition_sum,
        associate_bell=stirling_a_via_assoc_bell,
        potential=stirling_a_via_potential,
    ),
    "assoc-bell": _entry(assoc_bell),
    "potential": _entry(potential),
    "potential-hat": _entry(potential_hat),
    "ext-bell": _entry(bell_ext, extended=True, reciprocity=_bell_by_reciprocity),
    "ext-stirling-a": _entry(stirling_a_ext, extended=True, reciprocity=_stirling_a_by_reciprocity),
    "stirling1": _entry(_numbers(stirling1), potential=_numbers(stirling1_via_potential)),
    "stirling2": _entry(_numbers(stirling2)),
    "cycle": _entry(cycle_indicator, bell=cycle_indicator_via_bell),
    "forest": _entry(forest, trees=forest_via_trees),
    "forest-companion": _entry(forest_companion, trees=forest_companion_via_trees),
    "idempotency": _entry(idempotency, bell=idempotency_via_bell),
    "lah": _entry(lah_signed, generator=_lah_by_generator),
    "lah+": _entry(lah_unsigned),
    "comtet": _entry(comtet, stirling_a=comtet_via_stirling_a),
    "comtet-companion": _entry(comtet_companion),
}

SERIES: Dict[str, Callable[[int], PowerSeries]] = {
    "one": lambda order: PowerSeries.constant(1, order),
    "exp": exp_full,
    "identity": identity,
    "logm": logm,
    "expm": expm,
    "geometric": geometric,
}


def family_names() -> List[str]:
    return sorted(FAMILIES)


def lookup_family(name: str) -> FamilyEntry:
    """
    Raises:
        UnknownFamily: If no family with the given name exists.
    """
    if name not in FAMILIES:
        raise UnknownFamily(family_names(), name)
    return FAMILIES[name]


def series_names() -> List[str]:
    return list(SERIES)


def named_series(name: str, order: int) -> PowerSeries:
    """
    Raises:
        UnknownFamily: If no series with the given name exists.
    """
    if name not in SERIES:
        raise UnknownFamily(series_names(), name)
    return SERIES[name](order)
