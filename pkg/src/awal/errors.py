"""Error hierarchy shared by the core modules, the service, and the API.

Every error carries a stable machine-readable ``code`` (the value serialized
into the HTTP error body) plus a human-readable message.
"""


class AwalError(Exception):
    code = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


# -- pair and text rules ------------------------------------------------------

class EmptyText(AwalError):
    code = "empty_text"


class NoTamazightSide(AwalError):
    code = "no_tamazight_side"


class UnknownLanguage(AwalError):
    code = "unknown_language"


# -- scoring / pretranslation -------------------------------------------------

class MissingSuggestion(AwalError):
    code = "missing_suggestion"


class UneditedPretranslation(AwalError):
    code = "unedited_pretranslation"


class EmptyInput(AwalError):
    code = "empty_input"


class BackendUnavailable(AwalError):
    code = "backend_unavailable"


# -- validation state machine -------------------------------------------------

class SelfVote(AwalError):
    code = "self_vote"


class DuplicateVote(AwalError):
    code = "duplicate_vote"


class AlreadyDecided(AwalError):
    code = "already_decided"


# -- seed bank ----------------------------------------------------------------

class MalformedDocument(AwalError):
    code = "malformed_document"


class EmptyBank(AwalError):
    code = "empty_bank"


# -- service ------------------------------------------------------------------

class InvalidName(AwalError):
    code = "invalid_name"


class NameTaken(AwalError):
    code = "name_taken"


class Unauthorized(AwalError):
    code = "unauthorized"


class NotFound(AwalError):
    code = "not_found"


# -- export -------------------------------------------------------------------

class UnsupportedFormat(AwalError):
    code = "unsupported_format"
