"""Deliberately broken kit variants, used to show the law harness has teeth."""

from __future__ import annotations

import contextlib
from typing import Iterator

from . import kit

MUTANTS = ("skip-weaken-rename",)


def _weaken_without_rename(family, value, dst, ty):
    # the classic capture bug: term entries cross the binder unshifted
    if family is kit.Family.VAR:
        return value + 1
    return value


@contextlib.contextmanager
def mutant(name: str) -> Iterator[None]:
    if name not in MUTANTS:
        raise ValueError(f"unknown mutant {name!r}; choose from {MUTANTS}")
    original = kit.weaken_value
    kit.weaken_value = _weaken_without_rename
    kit.successor.cache_clear()
    try:
        yield
    finally:
        kit.weaken_value = original
        kit.successor.cache_clear()
