"""Exact Hopf algebra computations over finite fields and Galois rings.

Presentations, lift states, morphisms and R-matrices are plain dicts in the
JSON layout used by the ``hopfkit`` command line tool.
"""

import functools
import json

from . import _hopfkit

__all__ = [
    "HopfkitError",
    "gen",
    "validate",
    "analyze",
    "dual",
    "double",
    "cohomology",
    "lift",
    "reconcile",
    "lift_morphism",
    "lift_rmatrix",
    "cyclotomic",
    "conjugate_product",
    "nonvanishing_verdict",
    "threshold",
    "run_acceptance",
]


class HopfkitError(RuntimeError):
    """Library failure; ``code`` names the error condition, e.g. "NotAUnit"."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _translate(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _hopfkit.HopfkitError as e:
            code, message = e.args
            raise HopfkitError(code, message) from None

    return wrapper


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj, separators=(",", ":"))


@_translate
def gen(name, p, n=1, m=1):
    """Built-in presentation: "S3", "dual:Q8", "double:C2", ..."""
    return json.loads(_hopfkit.gen(name, p, n, m))


@_translate
def validate(presentation):
    return json.loads(_hopfkit.validate(_dump(presentation)))


@_translate
def analyze(presentation):
    return json.loads(_hopfkit.analyze(_dump(presentation)))


@_translate
def dual(presentation):
    return json.loads(_hopfkit.dual(_dump(presentation)))


@_translate
def double(presentation):
    """Drinfeld double as {"hopf": presentation, "R": matrix}."""
    return json.loads(_hopfkit.double(_dump(presentation)))


@_translate
def cohomology(presentation, degrees=(0, 1, 2), invariants=False):
    return _hopfkit.cohomology(_dump(presentation), list(degrees), invariants)


@_translate
def lift(presentation, precision, strategy="canonical"):
    """Lift to precision p^n; strategy is "canonical" or "perturbed:SEED"."""
    return json.loads(_hopfkit.lift(_dump(presentation), precision, strategy))


@_translate
def reconcile(lift_a, lift_b):
    return json.loads(_hopfkit.reconcile(_dump(lift_a), _dump(lift_b)))


@_translate
def lift_morphism(morphism, lift_a, lift_b):
    return json.loads(_hopfkit.lift_morphism(_dump(morphism), _dump(lift_a), _dump(lift_b)))


@_translate
def lift_rmatrix(presentation, r, lift_state):
    return json.loads(_hopfkit.lift_rmatrix(_dump(presentation), _dump(r), _dump(lift_state)))


@_translate
def cyclotomic(r):
    return _hopfkit.cyclotomic(r)


@_translate
def conjugate_product(coeffs, r):
    return _hopfkit.conjugate_product(list(coeffs), r)


@_translate
def nonvanishing_verdict(coeffs, r, p):
    rep = json.loads(_hopfkit.nonvanishing_verdict(list(coeffs), r, p))
    for key in ("D", "bound", "N"):
        rep[key] = int(rep[key])
    return rep


@_translate
def threshold(d):
    return _hopfkit.threshold(d)


def run_acceptance(only=()):
    """List of (id, title, passed, detail, seconds)."""
    return _hopfkit.run_acceptance(list(only))
