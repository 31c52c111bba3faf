"""Field characteristic, with a dedicated token for characteristic zero."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import UsageError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True, order=False)
class Characteristic:
    """A prime p, or ``None`` standing for characteristic zero (p = infinity)."""

    value: Union[int, None]

    def __post_init__(self) -> None:
        if self.value is not None and not is_prime(self.value):
            raise UsageError(f"characteristic must be prime or inf, got {self.value}")

    @property
    def is_zero(self) -> bool:
        return self.value is None

    @property
    def p(self) -> int:
        if self.value is None:
            raise ValueError("characteristic zero has no finite p")
        return self.value

    def at_least(self, n: int) -> bool:
        return self.value is None or self.value >= n

    def sort_key(self) -> tuple[int, int]:
        return (1, 0) if self.value is None else (0, self.value)

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f"p={self}"


INFINITY = Characteristic(None)

PROBES: tuple[Characteristic, ...] = tuple(Characteristic(q) for q in (2, 3, 5, 7, 11, 13)) + (INFINITY,)


def char(p: Union[int, str, Characteristic, None]) -> Characteristic:
    """Coerce ints, the string ``inf`` and existing values to a Characteristic."""
    if isinstance(p, Characteristic):
        return p
    if p is None:
        return INFINITY
    if isinstance(p, str):
        s = p.strip().lower()
        if s in ("inf", "infinity"):
            return INFINITY
        try:
            return Characteristic(int(s))
        except ValueError:
            raise UsageError(f"bad characteristic {p!r}") from None
    return Characteristic(int(p))
