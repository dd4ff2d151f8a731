"""
Reading and writing resource and Schmidt-vector documents.
"""

# Standard library imports
import logging

# Third-party imports
from pydantic import ValidationError

from relmaj.cli.schema import ResourceSpec, SchmidtSpec
from relmaj.entangle.schema import SchmidtVector
from relmaj.errors import InputError, ParseError
from relmaj.thermo.schema import Resource
from relmaj.thermo.service.resource import gibbs

logger = logging.getLogger(__name__)

# Constants
DIRECT_FIELDS = {"r": "p", "g": "q"}
THERMAL_FIELDS = {"r": "population", "g": "energies"}


def _field_path(exc: ValidationError, renames=None) -> str:
    error = exc.errors()[0]
    location = [str(part) for part in error["loc"]]
    if location and renames:
        location[0] = renames.get(location[0], location[0])
    return ".".join(location)


def _first_message(exc: ValidationError) -> str:
    return exc.errors()[0]["msg"]


def parse_resource(document: str) -> Resource:
    """
    Validate a resource document.

    Args:
        document (str): JSON text in either the p/q or the energies/beta/population shape

    Returns:
        Resource: The validated resource

    Raises:
        ParseError: Schema, normalization or positivity failure, with the field path
    """
    try:
        spec = ResourceSpec.model_validate_json(document)
    except ValidationError as exc:
        raise ParseError(_first_message(exc), _field_path(exc)) from exc

    renames = DIRECT_FIELDS
    if spec.is_thermal:
        renames = THERMAL_FIELDS
        try:
            reference = list(gibbs(spec.energies, spec.beta))
        except InputError as exc:
            raise ParseError(exc.detail, "energies") from exc
        state = spec.population
    else:
        state, reference = spec.p, spec.q

    try:
        resource = Resource.model_validate({"r": state, "g": reference, "label": spec.name})
    except ValidationError as exc:
        raise ParseError(_first_message(exc), _field_path(exc, renames)) from exc
    logger.debug("resource parsed", extra={"label": resource.label, "levels": resource.n})
    return resource


def serialize_resource(resource: Resource) -> str:
    """The p/q document of a resource; parse_resource reads it back unchanged."""
    spec = ResourceSpec(name=resource.label, p=list(resource.r), q=list(resource.g))
    return spec.model_dump_json(exclude_none=True)


def parse_schmidt(document: str) -> SchmidtVector:
    """
    Validate a Schmidt-vector document {"name": ..., "schmidt": [...]}.

    Raises:
        ParseError: Schema or normalization failure
    """
    try:
        spec = SchmidtSpec.model_validate_json(document)
        return SchmidtVector.model_validate({"coefficients": spec.schmidt, "label": spec.name})
    except ValidationError as exc:
        raise ParseError(_first_message(exc), _field_path(exc, {"coefficients": "schmidt"})) from exc
