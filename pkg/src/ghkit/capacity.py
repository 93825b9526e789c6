"""Exact capacity values: a rational part plus a symbolic infinite tier.

Capacities compare lexicographically, infinite tier first.  This keeps
all arithmetic exact while letting "infinity" edges participate in cut
sums and flow augmentation without magic numbers.
"""

from __future__ import annotations

from fractions import Fraction


class Cap:
    """An exact capacity ``inf * INFINITY + fin``.

    ``inf`` is an integer count of symbolic infinite units and ``fin`` a
    Fraction.  Caps form an ordered abelian group, which is all that cut
    accounting and augmenting-path flow need.
    """

    __slots__ = ("inf", "fin")

    def __init__(self, fin=0, inf=0):
        object.__setattr__(self, "fin", fin if isinstance(fin, Fraction) else Fraction(fin))
        object.__setattr__(self, "inf", int(inf))

    def __setattr__(self, name, value):
        raise AttributeError("Cap is immutable")

    @property
    def is_finite(self) -> bool:
        return self.inf == 0

    @staticmethod
    def of(value) -> "Cap":
        if isinstance(value, Cap):
            return value
        return Cap(Fraction(value))

    def __add__(self, other):
        other = Cap.of(other)
        return Cap(self.fin + other.fin, self.inf + other.inf)

    __radd__ = __add__

    def __sub__(self, other):
        other = Cap.of(other)
        return Cap(self.fin - other.fin, self.inf - other.inf)

    def __rsub__(self, other):
        return Cap.of(other) - self

    def __neg__(self):
        return Cap(-self.fin, -self.inf)

    def __mul__(self, k):
        if isinstance(k, Cap):
            raise TypeError("cannot multiply two Caps")
        return Cap(self.fin * k, self.inf * k)

    __rmul__ = __mul__

    def _key(self):
        return (self.inf, self.fin)

    def __eq__(self, other):
        return self._key() == Cap.of(other)._key()

    def __lt__(self, other):
        return self._key() < Cap.of(other)._key()

    def __le__(self, other):
        return self._key() <= Cap.of(other)._key()

    def __gt__(self, other):
        return self._key() > Cap.of(other)._key()

    def __ge__(self, other):
        return self._key() >= Cap.of(other)._key()

    def __hash__(self):
        return hash(self._key())

    def __bool__(self):
        return self.inf != 0 or self.fin != 0

    def __repr__(self):
        if self.inf == 0:
            return f"Cap({self.fin})"
        return f"Cap({self.fin}, inf={self.inf})"

    def __str__(self):
        if self.inf == 0:
            return str(self.fin)
        if self.inf == 1 and self.fin == 0:
            return "inf"
        return f"{self.inf}*inf+{self.fin}"


ZERO = Cap(0)
ONE = Cap(1)
INF = Cap(0, 1)


def cap_min(values):
    it = iter(values)
    best = next(it)
    for v in it:
        if v < best:
            best = v
    return best
