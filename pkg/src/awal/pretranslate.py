"""Machine-translation suggestions and the post-edit gate.

The MT backend is pluggable: a deterministic stub (marker prefix + echo,
for tests and offline use) and an HTTP backend speaking a one-call JSON
protocol (POST {"src","tgt","text"} -> {"text"}). Suggestions record the
backend output verbatim; scoring and the post-edit gate both depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone

import requests

from awal import _kernels, languages
from awal.errors import BackendUnavailable, EmptyInput, NoTamazightSide


@dataclass(frozen=True)
class MtSuggestion:
    src_lang: str
    tgt_lang: str
    input: str
    output: str
    backend_id: str
    produced_at: datetime


@dataclass(frozen=True)
class PostEditReport:
    distance: int
    accepted: bool


class StubBackend:
    """Deterministic echo backend: output = "[tgt_lang] " + input."""

    backend_id = "stub"

    def translate(self, text: str, src_lang: str, tgt_lang: str) -> str:
        return f"[{tgt_lang}] {text}"


class HttpBackend:
    """Remote MT backend over the single request/response JSON protocol."""

    def __init__(self, url: str, timeout_ms: int = 5000):
        self.url = url
        self.timeout_ms = timeout_ms
        self.backend_id = f"http:{url}"

    def translate(self, text: str, src_lang: str, tgt_lang: str) -> str:
        try:
            resp = requests.post(
                self.url,
                json={"src": src_lang, "tgt": tgt_lang, "text": text},
                timeout=self.timeout_ms / 1000.0,
            )
            resp.raise_for_status()
            body = resp.json()
        except requests.RequestException as exc:
            raise BackendUnavailable(f"MT backend failed: {exc}") from exc
        except ValueError as exc:
            raise BackendUnavailable("MT backend returned invalid JSON") from exc
        if not isinstance(body, dict) or not isinstance(body.get("text"), str):
            raise BackendUnavailable('MT backend response missing "text"')
        return body["text"]


def pretranslate(text: str, src_lang: str, tgt_lang: str, backend) -> MtSuggestion:
    """Translate ``text`` through the backend, wrapping the verbatim output
    with provenance. The language pair must satisfy the pair rule."""
    languages.require_tag(src_lang)
    languages.require_tag(tgt_lang)
    if not (languages.is_tamazight(src_lang) or languages.is_tamazight(tgt_lang)):
        raise NoTamazightSide("at least one side must be Tamazight (zgh)")
    if not text.strip():
        raise EmptyInput("nothing to translate")
    output = backend.translate(text, src_lang, tgt_lang)
    return MtSuggestion(
        src_lang=src_lang,
        tgt_lang=tgt_lang,
        input=text,
        output=output,
        backend_id=backend.backend_id,
        produced_at=datetime.now(timezone.utc),
    )


def check_postedit(suggestion: "MtSuggestion | str", final_text: str) -> PostEditReport:
    """Post-edit gate: accepted iff the final text differs from the raw
    suggestion by at least one edit (code-point Levenshtein). Takes either
    a full suggestion or the bare backend output string."""
    output = suggestion.output if isinstance(suggestion, MtSuggestion) else suggestion
    distance = _kernels.levenshtein(output, final_text)
    return PostEditReport(distance=distance, accepted=distance >= 1)
