"""Domain error types shared by every engine module.

Each class carries a stable ``token`` (the machine-readable name surfaced
by the HTTP service and the CLI) plus an ordinary message. Optional keyword
details (line numbers, offending codes, ...) are kept on ``details``.
"""

from __future__ import annotations


class EngineError(Exception):
    token = "EngineError"

    def __init__(self, message: str = "", **details):
        super().__init__(message)
        self.details = details

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if "token" not in cls.__dict__:
            cls.token = cls.__name__

    @property
    def message(self) -> str:
        return self.args[0] if self.args else ""


# glyph code grammar

class BadPrefix(EngineError):
    pass


class BadLength(EngineError):
    pass


class BaseOutOfRange(EngineError):
    pass


class FillOutOfRange(EngineError):
    pass


class RotationNotHex(EngineError):
    pass


# manifest loading

class MalformedRow(EngineError):
    pass


class DuplicateCode(EngineError):
    pass


class UnknownTaxonPath(EngineError):
    pass


class FacetMismatch(EngineError):
    pass


class UnknownArea(EngineError):
    pass


class VariantUnavailable(EngineError):
    """A syntactically valid code that is absent from the loaded catalog."""


# faceted queries

class UnknownFamily(EngineError):
    pass


class UnknownFacet(EngineError):
    pass


class UnknownValue(EngineError):
    pass


# sign documents

class OutOfCanvas(EngineError):
    pass


class UnknownId(EngineError):
    pass


class TextSyntaxError(EngineError):
    """Sign text (SWT) line does not match the grammar."""

    token = "SyntaxError"


class BadVersion(EngineError):
    pass


class UnknownCode(EngineError):
    """A placement references a code the bound catalog does not contain."""


# sign store

class StoreUnavailable(EngineError):
    pass


class InvalidDocument(EngineError):
    pass


class NotFound(EngineError):
    pass


class StoreCorrupt(EngineError):
    pass
