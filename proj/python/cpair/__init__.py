"""Exact cohomology and deformations of Courant pairs.

Documents are JSON text or already-parsed JSON values; results are dicts.
"""

import json as _json

from . import _cpair
from ._cpair import DegreeCapError, Error, InputError, InvalidDeformationError, catalog_names

__all__ = [
    "DegreeCapError",
    "Error",
    "InputError",
    "InvalidDeformationError",
    "catalog_deformation",
    "catalog_export",
    "catalog_names",
    "cohomology",
    "extend",
    "infinitesimal",
    "obstruction",
    "validate",
]


def _text(document):
    return document if isinstance(document, str) else _json.dumps(document)


def catalog_export(name):
    return _json.loads(_cpair.catalog_export(name))


def catalog_deformation(name, index=1):
    return _json.loads(_cpair.catalog_deformation(name, index))


def validate(document):
    return _json.loads(_cpair.validate(_text(document)))


def cohomology(document, degree, column="total"):
    return _json.loads(_cpair.cohomology(_text(document), degree, column))


def infinitesimal(document):
    return _json.loads(_cpair.infinitesimal(_text(document)))


def obstruction(document):
    return _json.loads(_cpair.obstruction(_text(document)))


def extend(document, to):
    return _json.loads(_cpair.extend(_text(document), to))
