"""Named reference states used by tests and the CLI."""

from __future__ import annotations

import math

from .errors import InputError
from .states import PureState

_SQRT2 = math.sqrt(2.0)
_SQRT6 = math.sqrt(6.0)


def _ghz(n: int) -> PureState:
    return PureState.from_amplitudes({"0" * n: 1 / _SQRT2, "1" * n: 1 / _SQRT2})


def _w(n: int) -> PureState:
    amp = 1 / math.sqrt(n)
    labels = ["0" * k + "1" + "0" * (n - k - 1) for k in range(n)]
    return PureState.from_amplitudes({lab: amp for lab in labels})


def _uniform(labels: list[str]) -> PureState:
    amp = 1 / math.sqrt(len(labels))
    return PureState.from_amplitudes({lab: amp for lab in labels})


def _xstate() -> PureState:
    return PureState.from_amplitudes(
        {
            "1111": _SQRT2 / _SQRT6,
            "1000": 1 / _SQRT6,
            "0100": 1 / _SQRT6,
            "0010": 1 / _SQRT6,
            "0001": 1 / _SQRT6,
        }
    )


_BUILDERS = {
    "bell": lambda: _ghz(2),
    "ghz2": lambda: _ghz(2),
    "ghz3": lambda: _ghz(3),
    "ghz4": lambda: _ghz(4),
    "ghz5": lambda: _ghz(5),
    "ghz6": lambda: _ghz(6),
    "w3": lambda: _w(3),
    "w4": lambda: _w(4),
    "w5": lambda: _w(5),
    "w6": lambda: _w(6),
    "cluster4a": lambda: _uniform(["1111", "1100", "0010", "0001"]),
    "cluster4b": lambda: _uniform(["1111", "1010", "0100", "0001"]),
    "xstate": lambda: _xstate(),
}


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(_BUILDERS))


def fixture_state(name: str) -> PureState:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise InputError(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names())}"
        ) from None
    return builder()
