"""Exact arithmetic in the BMW / Kauffman tangle algebra."""

import json

from ._core import (
    Connector,
    Element,
    ParseError,
    RingElem,
    StrandMismatch,
    Word,
    alpha,
    brauer_image,
    canonical_word,
    compose_connectors,
    connector_count,
    dubrovnik,
    enumerate_connectors,
    multiply,
    normalize,
    rank_of,
    rho,
    run,
    spanning_count,
    spanning_family,
    spec_brauer,
    spec_s,
    verify,
)
from ._core import gram_certificate as _gram_certificate


def gram_certificate(n, max_n=3):
    """Certificate for the closure pairing on n-connectors, as a dict."""
    return json.loads(_gram_certificate(n, max_n))


__all__ = [
    "Connector",
    "Element",
    "ParseError",
    "RingElem",
    "StrandMismatch",
    "Word",
    "alpha",
    "brauer_image",
    "canonical_word",
    "compose_connectors",
    "connector_count",
    "dubrovnik",
    "enumerate_connectors",
    "gram_certificate",
    "multiply",
    "normalize",
    "rank_of",
    "rho",
    "run",
    "spanning_count",
    "spanning_family",
    "spec_brauer",
    "spec_s",
    "verify",
]
