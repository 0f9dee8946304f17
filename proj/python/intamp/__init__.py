"""Exact spectral criteria for endomorphism pullback actions.

Thin convenience layer over the compiled core: the *_json entry points
speak JSON strings; the wrappers here accept and return plain dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    InputError,
    MathError,
    build_ns_json,
    circle_profile,
    classify_json,
    compose_json,
    cone_contains_json,
    orbit_witness_json,
    root_balls,
    run_examples_json,
    same_modulus,
    verify_pf_lemma_json,
)

__all__ = [
    "InputError",
    "MathError",
    "circle_profile",
    "same_modulus",
    "root_balls",
    "classify",
    "build_ns",
    "compose",
    "cone_contains",
    "verify_pf_lemma",
    "orbit_witness",
    "run_examples",
]


def classify(endo):
    """Classify an EndoAction or CMEndo given as a dict."""
    return _json.loads(classify_json(_json.dumps(endo)))


def build_ns(cmendo):
    return _json.loads(build_ns_json(_json.dumps(cmendo)))


def compose(f, g):
    return _json.loads(compose_json(_json.dumps({"f": f, "g": g})))


def cone_contains(cone, point, strict=False):
    return _json.loads(cone_contains_json(_json.dumps(cone), [str(x) for x in point], strict))


def verify_pf_lemma(phi, cone):
    return _json.loads(verify_pf_lemma_json(_json.dumps(phi), _json.dumps(cone)))


def orbit_witness(phi, v, m_max=64):
    return _json.loads(orbit_witness_json(_json.dumps(phi), [str(x) for x in v], m_max))


def run_examples(case_id=""):
    return _json.loads(run_examples_json(case_id))
