"""Backend selection for the hot kernels.

Two interchangeable implementations exist: a numba-compiled one and a
pure numpy/stdlib one.  The CITYROUTE_BACKEND environment variable
("numba" or "numpy") forces a choice; by default numba is used when it
imports and the numpy path is the fallback.  `use_backend` switches at
runtime, which the benchmark uses to compare the two.
"""

import os

BACKEND_NAMES = ("numba", "numpy")

_modules = {}
_active = None
_active_name = ""


def _load(name):
    if name not in _modules:
        if name == "numba":
            from . import numba_backend as mod
        elif name == "numpy":
            from . import numpy_backend as mod
        else:
            raise ValueError(f"unknown backend {name!r}, expected one of {BACKEND_NAMES}")
        _modules[name] = mod
    return _modules[name]


def use_backend(name):
    global _active, _active_name
    _active = _load(name)
    _active_name = name


def active_backend():
    return _active_name


def available_backends():
    names = []
    for name in BACKEND_NAMES:
        try:
            _load(name)
        except ImportError:
            continue
        names.append(name)
    return names


def _default_backend():
    choice = os.environ.get("CITYROUTE_BACKEND", "").strip().lower()
    if choice:
        if choice not in BACKEND_NAMES:
            raise ValueError(
                f"CITYROUTE_BACKEND={choice!r} not understood, expected one of {BACKEND_NAMES}"
            )
        return choice
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


use_backend(_default_backend())


def dijkstra_csr(indptr, targets, weights, source):
    return _active.dijkstra_csr(indptr, targets, weights, source)


def astar_csr(indptr, targets, weights, xs, ys, source, target, hkind):
    return _active.astar_csr(indptr, targets, weights, xs, ys, source, target, hkind)


def held_karp(dist):
    return _active.held_karp(dist)
