# coding:utf-8
"""
Instance document format.

A market is stored as one UTF-8 JSON object::

    {
      "version": 1,
      "applicants": ["a1", ...],
      "employers": ["e1", ...],
      "affiliations": {"e1": ["a1"], ...},
      "applicant_prefs": {"a1": ["e3", "e2", "e1"], ...},
      "employer_prefs": {"e1": [["a2", "e3"], ["a1", "e1"], ...], ...},
      "generator": {...}
    }

Preference arrays are best-first. Each employer tuple lists the hire then
one placement per affiliate, in affiliate order. ``generator`` is optional
provenance written by ``generate_market``. Serialization writes keys in the
order above and agents in roster order, so it is byte-stable.
"""
import json
import os
from typing import Any, Dict, Union

from affmatch._errors import InstanceSyntaxError, MarketError
from affmatch._market import Market, validate_market

FORMAT_VERSION = 1


def _decode(data: Union[bytes, str]) -> Any:
    if isinstance(data, (bytes, bytearray)):
        try:
            data = bytes(data).decode('utf-8')
        except UnicodeDecodeError as e:
            raise InstanceSyntaxError(
                "document is not valid UTF-8 (byte %d)" % e.start) from None
    if data.startswith('\ufeff'):
        data = data[1:]
    if not data.strip():
        raise InstanceSyntaxError("empty document", 1, 1)
    try:
        return json.loads(data)
    except json.JSONDecodeError as e:
        raise InstanceSyntaxError(e.msg, e.lineno, e.colno) from None


def parse(data: Union[bytes, str]) -> Market:
    """Parse and validate an instance document.

    Raises:
        InstanceSyntaxError: for undecodable or malformed JSON, with the
            line and column of the fault.
        MarketError: any validation error, addressed by JSON pointer.
    """
    doc = _decode(data)
    if not isinstance(doc, dict):
        raise MarketError("instance document must be a JSON object")
    version = doc.get('version')
    if version != FORMAT_VERSION:
        raise MarketError("unsupported format version %r (expected %d)"
                          % (version, FORMAT_VERSION), '/version')
    return validate_market(doc)


def to_document(market: Market) -> Dict[str, Any]:
    """The market as a JSON-ready dict in canonical key order."""
    applicants, employers = market.applicants, market.employers
    doc: Dict[str, Any] = {
        'version': FORMAT_VERSION,
        'applicants': list(applicants),
        'employers': list(employers),
        'affiliations': {
            employers[e]: [applicants[a] for a in members]
            for e, members in enumerate(market.affiliations)
        },
        'applicant_prefs': {
            applicants[a]: [employers[e] for e in order]
            for a, order in enumerate(market.applicant_orders)
        },
        'employer_prefs': {
            employers[e]: [list(market.tuple_labels(entry))
                           for entry in profile]
            for e, profile in enumerate(market.employer_profiles)
        },
    }
    if market.provenance is not None:
        doc['generator'] = dict(market.provenance)
    return doc


def dumps(doc: Any) -> str:
    """Deterministic JSON text for any document this package writes."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def serialize(market: Market) -> str:
    return dumps(to_document(market))


def load(path: Union[str, os.PathLike]) -> Market:
    with open(path, 'rb') as f:
        return parse(f.read())


def dump(market: Market, path: Union[str, os.PathLike]) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(serialize(market))
