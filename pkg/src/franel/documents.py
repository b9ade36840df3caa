"""Serialization of operators and certificates (schema version 1).

Integers are stored as decimal strings so coefficients of any size
round-trip losslessly through JSON; native JSON numbers would already
corrupt the certificates at moderate powers.
"""

from __future__ import annotations

import json
import os
import time

from .bipoly import BiPoly, RatFunc
from .errors import DocumentError
from .intpoly import IntPoly
from .operators import Certificate, RecurrenceOperator

SCHEMA_VERSION = 1
TOOL_VERSION = "0.1.0"


def _timestamp() -> str:
    """ISO timestamp; honors SOURCE_DATE_EPOCH for reproducible output."""
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    t = int(epoch) if epoch else int(time.time())
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(t))


def intpoly_to_json(p: IntPoly):
    return [str(c) for c in p.coeffs]


def intpoly_from_json(data) -> IntPoly:
    if not isinstance(data, list):
        raise DocumentError("polynomial must be a list of decimal strings")
    try:
        return IntPoly([int(c) for c in data])
    except (TypeError, ValueError) as exc:
        raise DocumentError("bad polynomial coefficient: %s" % exc) from exc


def bipoly_to_json(p: BiPoly):
    out = []
    for (dn, dk) in sorted(p.terms):
        out.append([str(p.terms[(dn, dk)]), dn, dk])
    return out


def bipoly_from_json(data) -> BiPoly:
    if not isinstance(data, list):
        raise DocumentError("bivariate polynomial must be a list of records")
    terms = {}
    for rec in data:
        if (not isinstance(rec, list) or len(rec) != 3
                or not isinstance(rec[1], int) or not isinstance(rec[2], int)
                or rec[1] < 0 or rec[2] < 0):
            raise DocumentError("bad monomial record %r" % (rec,))
        try:
            coef = int(rec[0])
        except (TypeError, ValueError) as exc:
            raise DocumentError("bad monomial coefficient: %s" % exc) from exc
        if coef == 0:
            raise DocumentError("zero coefficient stored in %r" % (rec,))
        key = (rec[1], rec[2])
        if key in terms:
            raise DocumentError("duplicate monomial %r" % (rec,))
        terms[key] = coef
    return BiPoly(terms)


def operator_document(s: int, op: RecurrenceOperator, cert: Certificate,
                      r_max: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "s": s,
        "order": op.order,
        "coeffs": [intpoly_to_json(c) for c in op.coeffs],
        "certificate": {
            "num": bipoly_to_json(cert.ratio.num),
            "den": bipoly_to_json(cert.ratio.den),
        },
        "provenance": {
            "tool_version": TOOL_VERSION,
            "timestamp": _timestamp(),
            "r_max": r_max,
        },
    }


def document_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2,
                       separators=(",", ": ")) + "\n").encode("utf-8")


def parse_operator_document(raw: bytes):
    """Validate and decode a document; returns (s, operator, certificate,
    provenance dict).  Raises DocumentError on any schema violation."""
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DocumentError("not valid JSON: %s" % exc) from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError("unsupported schema_version %r"
                            % doc.get("schema_version"))
    s = doc.get("s")
    if not isinstance(s, int) or s < 1:
        raise DocumentError("field s must be a positive integer")
    coeffs = doc.get("coeffs")
    if not isinstance(coeffs, list) or not coeffs:
        raise DocumentError("field coeffs must be a nonempty list")
    polys = tuple(intpoly_from_json(c) for c in coeffs)
    order = doc.get("order")
    if order != len(polys) - 1:
        raise DocumentError("order field disagrees with coefficient count")
    try:
        op = RecurrenceOperator(polys)
    except ValueError as exc:
        raise DocumentError("invalid operator: %s" % exc) from exc
    cert_data = doc.get("certificate")
    if not isinstance(cert_data, dict):
        raise DocumentError("certificate must be an object")
    num = bipoly_from_json(cert_data.get("num", []))
    den = bipoly_from_json(cert_data.get("den", []))
    if den.is_zero:
        raise DocumentError("certificate denominator is zero")
    cert = Certificate(RatFunc(num, den))
    prov = doc.get("provenance")
    if not isinstance(prov, dict):
        raise DocumentError("provenance must be an object")
    return s, op, cert, prov
