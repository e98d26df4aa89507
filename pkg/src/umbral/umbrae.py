"""Moment rules of the four concrete umbrae.

* ``L``       logistic law, characteristic function (t/2)/sinh(t/2)
* ``L0``      hyperbolic-secant law, characteristic function sech(t/2)
* ``GaussM``  N(0, 2); ``M`` is realized as ``i * GaussM``
* ``CircZ``   circular complex normal pair (Z, conj Z), E Z^m conj(Z)^n = delta_{mn} m!

Moments returned here are those of the plain real variable.  Factors of ``i``
belong to the expression being averaged, not to the table.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import factorial

from .exact import ONE, ZERO, ExactScalar
from .series import elementary_series

__all__ = [
    "UmbraSpec",
    "MomentTable",
    "L",
    "L0",
    "GAUSS_M",
    "CIRC_Z",
    "UMBRAE",
    "moment",
    "moment_table",
]


@dataclass(frozen=True)
class UmbraSpec:
    id: str
    arity: int = 1

    def __str__(self):
        return self.id


L = UmbraSpec("L")
L0 = UmbraSpec("L0")
GAUSS_M = UmbraSpec("GaussM")
CIRC_Z = UmbraSpec("CircZ", arity=2)

UMBRAE = {u.id: u for u in (L, L0, GAUSS_M, CIRC_Z)}

_CHAR_SERIES = {"L": "sinh_ratio", "L0": "sech_half"}


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


class MomentTable:
    """Moments of one umbra, filled on demand and never evicted.

    Readers take no lock; a fill holds ``_lock`` and publishes a new dict.
    """

    def __init__(self, umbra: UmbraSpec):
        self.umbra = umbra
        self.entries: dict = {}
        self._filled = -1
        self._lock = threading.Lock()

    def __getitem__(self, index):
        return self.get(index)

    def get(self, index) -> ExactScalar:
        index = _check_index(self.umbra, index)
        if self.umbra.arity == 2:
            m, n = index
            return ExactScalar(factorial(m)) if m == n else ZERO
        entries = self.entries
        if index in entries:
            return entries[index]
        self._fill(index)
        return self.entries[index]

    def _fill(self, n: int):
        with self._lock:
            if n <= self._filled:
                return
            target = max(n, 2 * self._filled, 16)
            uid = self.umbra.id
            new = dict(self.entries)
            if uid == "GaussM":
                for k in range(target + 1):
                    new[k] = ExactScalar(_double_factorial(k - 1) * 2 ** (k // 2)) if k % 2 == 0 else ZERO
            else:
                # E (iX)^k = k! [t^k] phi(t)  =>  E X^k = k! c_k / i^k
                phi = elementary_series(_CHAR_SERIES[uid], target)
                for k, d in enumerate(phi.derivative_values()):
                    if k % 2:
                        new[k] = ZERO
                    else:
                        new[k] = d if k % 4 == 0 else -d
            self.entries = new
            self._filled = target


def _check_index(umbra: UmbraSpec, index):
    if umbra.arity == 2:
        m, n = index
        if m < 0 or n < 0:
            raise ValueError("moment indices must be >= 0")
        return (int(m), int(n))
    if isinstance(index, tuple):
        (index,) = index
    if index < 0:
        raise ValueError("moment index must be >= 0")
    return int(index)


_TABLES = {uid: MomentTable(u) for uid, u in UMBRAE.items()}


def moment_table(umbra: UmbraSpec | str) -> MomentTable:
    uid = umbra if isinstance(umbra, str) else umbra.id
    return _TABLES[uid]


def moment(umbra: UmbraSpec | str, index) -> ExactScalar:
    """Exact moment ``E X^n`` (scalar umbrae) or ``E Z^m conj(Z)^n`` (``CircZ``)."""
    if isinstance(umbra, str):
        umbra = UMBRAE[umbra]
    if umbra.arity == 1 and index == 0:
        return ONE
    return moment_table(umbra).get(index)
