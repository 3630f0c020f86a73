"""Kernel backend selection.

The compiled extension ``gregory._core`` is preferred when it was built;
otherwise the pure-Python twin ``gregory._core_py`` is used.  Both implement
the same functions and return identical values, so callers go through the
dispatch functions below and never notice which one is active.
"""

from contextlib import contextmanager

from . import _core_py

try:
    from . import _core
except ImportError:
    _core = None

_MODULES = {"python": _core_py}
if _core is not None:
    _MODULES["compiled"] = _core

_active = _core if _core is not None else _core_py


def available_backends():
    """Names of the importable backends, preferred first."""
    return ("compiled", "python") if _core is not None else ("python",)


def active_backend():
    return "compiled" if _active is _core else "python"


def backend_module(name):
    try:
        return _MODULES[name]
    except KeyError:
        raise ValueError(
            "backend %r not available (have: %s)" % (name, ", ".join(sorted(_MODULES)))
        ) from None


def set_backend(name):
    """Switch the active backend: 'compiled', 'python', or 'auto'."""
    global _active
    if name == "auto":
        _active = _core if _core is not None else _core_py
    else:
        _active = backend_module(name)
    return active_backend()


@contextmanager
def use_backend(name):
    """Temporarily switch the active backend."""
    previous = active_backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def stirling_rows(max_n):
    return _active.stirling_rows(max_n)


def nested_sum_table(max_depth, max_top):
    return _active.nested_sum_table(max_depth, max_top)


def series_mul_pairs(a, b):
    return _active.series_mul_pairs(a, b)


def series_div_pairs(num, den):
    return _active.series_div_pairs(num, den)
