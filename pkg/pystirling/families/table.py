"""
Memoized triangles of polynomials keyed by (n, k).
"""

import threading
from enum import Enum
from typing import Callable, Dict, List, Protocol, Tuple, TypeVar

from pystirling.logger import logger
from pystirling.polyring import MultiPoly


class FamilyId(str, Enum):
    """
    Identifiers of the memoized polynomial families.
    """

    BELL = "bell"
    STIRLING_A = "stirling-a"
    POTENTIAL_HAT = "potential-hat"
    CYCLE_INDICATOR = "cycle"
    LAH_UNSIGNED = "lah+"
    LAH_SIGNED = "lah"
    FOREST = "forest"
    IDEMPOTENCY = "idempotency"
    COMTET = "comtet"
    BELL_EXT = "ext-bell"
    STIRLING_A_EXT = "ext-stirling-a"
    GENERATED = "generated"


ComputeFn = Callable[[int, int], MultiPoly]


class FamilyTable:
    """
    Thread safe cache in front of a compute function. Lookups and stores happen under a lock, the computation
    itself runs outside of it so recursive families can fill lower entries concurrently. Two threads racing on
    the same entry compute equal values, the first one stored wins.
    """

    def __init__(self, family_id: FamilyId, compute: ComputeFn) -> None:
        self.family_id = family_id
        self._compute = compute
        self._cache: Dict[Tuple[int, int], MultiPoly] = {}
        self._lock = threading.Lock()

    def get(self, n: int, k: int) -> MultiPoly:
        key = (n, k)
        with self._lock:
            cached = self._cache.get(key)

        if cached is not None:
            return cached

        logger.debug("Computing %s(%s, %s)", self.family_id.value, n, k)
        value = self._compute(n, k)

        with self._lock:
            return self._cache.setdefault(key, value)

    __call__ = get

    def recompute(self, n: int, k: int) -> MultiPoly:
        """Evaluates the compute function again without consulting the cache for (n, k) itself."""
        return self._compute(n, k)

    def cached_keys(self) -> List[Tuple[int, int]]:
        with self._lock:
            return sorted(self._cache)

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)

    def __repr__(self) -> str:
        return f"FamilyTable({self.family_id.value}, {len(self)} entries)"


_TABLES: List[FamilyTable] = []


class ClearableCache(Protocol):
    def cache_clear(self) -> None:
        ...


T_Cache = TypeVar("T_Cache", bound=ClearableCache)

_CACHED_FUNCTIONS: List[ClearableCache] = []


def register_table(family_id: FamilyId, compute: ComputeFn) -> FamilyTable:
    """
    Creates a module level table which `clear_caches` knows about.
    """
    table = FamilyTable(family_id, compute)
    _TABLES.append(table)
    return table


def register_cache(func: T_Cache) -> T_Cache:
    """
    Hooks an `lru_cache` wrapped function into `clear_caches`.
    """
    _CACHED_FUNCTIONS.append(func)
    return func


def clear_caches() -> None:
    for table in _TABLES:
        table.clear()
    for func in _CACHED_FUNCTIONS:
        func.cache_clear()
    logger.debug("Cleared %s family caches and %s function caches", len(_TABLES), len(_CACHED_FUNCTIONS))
