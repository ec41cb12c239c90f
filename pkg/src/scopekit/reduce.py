"""Normal-order beta reduction built on ``single_subst``."""

from __future__ import annotations

from .kit import single_subst, subst
from .syntax import App, CLam, Context, Lam, LambdaError, Var, extend, is_colored, is_plain


class FuelExhausted(LambdaError):
    def __init__(self, fuel: int, term):
        super().__init__(f"no normal form within {fuel} steps")
        self.fuel = fuel
        self.term = term


def contract(ctx: Context, redex):
    """``(λT. body) arg  ↦  body[𝕫/ arg]``."""
    lam, arg = redex.fn, redex.arg
    sigma = single_subst(ctx, lam.arg_ty, arg, colored=isinstance(lam, CLam))
    return subst(sigma, lam.body)


def step(ctx: Context, t):
    """Contract the leftmost-outermost redex, or return ``None`` on a normal form."""
    match t:
        case Var():
            return None
        case App(Lam() | CLam(), _):
            return contract(ctx, t)
        case App(fn, arg):
            new_fn = step(ctx, fn)
            if new_fn is not None:
                return App(new_fn, arg)
            new_arg = step(ctx, arg)
            return None if new_arg is None else App(fn, new_arg)
        case Lam(dom, body):
            new = step(extend(ctx, dom), body)
            return None if new is None else Lam(dom, new)
        case CLam(color, dom, body):
            new = step(extend(ctx, dom), body)
            return None if new is None else CLam(color, dom, new)
    raise TypeError(t)


def reduction_sequence(ctx: Context, t, fuel: int = 10_000):
    """Yield ``t`` and every normal-order reduct of it, ending at the normal form."""
    yield t
    for _ in range(fuel):
        nxt = step(ctx, t)
        if nxt is None:
            return
        t = nxt
        yield t
    if step(ctx, t) is not None:
        raise FuelExhausted(fuel, t)


def normalize(ctx: Context, t, fuel: int = 10_000):
    if fuel < 1:
        raise ValueError("fuel must be >= 1")
    if not (is_plain(t) or is_colored(t)):
        raise TypeError("cannot normalize a term mixing plain and colored lambdas")
    out = t
    for out in reduction_sequence(ctx, t, fuel):
        pass
    return out
