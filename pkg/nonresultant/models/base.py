"""Base model implementations for nonresultant."""

from pydantic import BaseModel as PydanticBaseModel
from pydantic import Field

from nonresultant.utils.constants import SCHEMA_VERSION


class BaseModel(PydanticBaseModel):
    """
    Base class for the package's value types.

    Values are frozen after construction and canonicalized by their validators,
    so structural equality is semantic equality.
    """

    class Config:
        """Pydantic model configuration."""

        frozen = True


class BaseDocument(PydanticBaseModel):
    """
    Base model for every JSON document the CLI emits.

    Contains the fields shared by all documents.
    """

    version: int = Field(SCHEMA_VERSION, description="Version of the document schema")

    class Config:
        """Pydantic model configuration."""

        populate_by_name = True
