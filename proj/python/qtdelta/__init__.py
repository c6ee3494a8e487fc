"""q,t-enumeration of decorated lattice paths and Macdonald operator checks."""

import json

from ._core import (
    DecoratedPath,
    DegreeTooLarge,
    Error,
    InvalidParams,
    NotPolynomial,
    NotSymmetric,
    ParseError,
    QTPoly,
    SymFunc,
    UnrealizableWord,
    b_exponent,
    class_paths,
    conjecture_names,
    delta,
    delta_prime,
    disable_macdonald_cache,
    e_nk,
    enumerate,
    identity_names,
    insertion_generate,
    macdonald,
    nabla,
    omega,
    q_analogue,
    q_binomial,
    qt_enumerator,
    schedule_product,
    set_max_degree,
    suite_families,
    theta,
)
from . import _core


def genpoly(family="lsq", kind="valley", m=0, n=1, k=0, touching=None, dominant=False):
    """Generating polynomial as {content tuple: {(qexp, texp): coefficient string}}."""
    doc = json.loads(_core.genpoly_json(family, kind, m, n, k, touching, dominant))
    out = {}
    for term in doc["terms"]:
        out.setdefault(tuple(term["content"]), {})[(term["q"], term["t"])] = term["coeff"]
    return out


def check_identity(name, n, k=0):
    return json.loads(_core.check_identity(name, n, k))


def check_conjecture(name, m=0, n=1, k=0, r=None):
    return json.loads(_core.check_conjecture(name, m, n, k, r))


def run_suite(max_size, families=None, jobs=0, max_k=2):
    """Returns (reports, summary)."""
    if families is None:
        families = list(suite_families())
    rows = [json.loads(line) for line in _core.run_suite(max_size, families, jobs, max_k).splitlines()]
    return rows[:-1], rows[-1]
