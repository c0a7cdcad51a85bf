"""Document-level translation: glossary, prompts, backends, verification.

A backend is anything with ``translate(texts, prompt) -> texts``.  The
deterministic mock backend keeps every test offline; the HTTP backend posts
a chat-style body to a configurable endpoint.
"""

from __future__ import annotations

import csv
import logging
import math
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import BackendProtocolError, BackendUnavailable, UnknownMode
from .ir import DocumentIR, Paragraph

logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r"\{v(\d+)\}")


@dataclass(slots=True)
class GlossaryEntry:
    source_term: str
    target_term: str = ""
    acronym: str | None = None
    frequency: int = 1
    origin: str = "auto"  # auto | user


@dataclass(slots=True)
class TranslateConfig:
    min_freq: int = 3
    batch_chars: int = 4000
    retries: int = 2
    role_preamble: str = (
        "You are a professional document translator. You render technical "
        "prose faithfully, keep inline markers intact, and never add commentary."
    )


@dataclass(slots=True)
class TranslationRequest:
    texts: list[str]
    source_lang: str
    target_lang: str
    glossary: list[GlossaryEntry] = field(default_factory=list)
    prompt: str = ""


@dataclass(slots=True)
class TranslationResult:
    outputs: list[str]
    failed: list[int] = field(default_factory=list)  # indexes that fell back to identity
    backend_name: str = ""


@dataclass(slots=True)
class Violation:
    kind: str  # Missing | Duplicate | Unknown | Malformed
    id: int | None = None
    span: str = ""


# ---------------------------------------------------------------------------
# Glossary extraction
# ---------------------------------------------------------------------------

_ACRONYM_RE = re.compile(
    r"((?:[A-Z][A-Za-z\-]*)(?:\s+(?:(?:of|the|and|for|in|on|to|a|an)\s+)?[A-Z][A-Za-z\-]*)+)"
    r"\s*\(([A-Z][A-Za-z0-9]+)\)"
)
_WORD_RE = re.compile(r"[A-Za-z][A-Za-z\-']*")
_CAPITALIZED = re.compile(r"^[A-Z][A-Za-z\-']*$")
_NGRAM_STOP_LEADS = {
    "The", "A", "An", "This", "That", "These", "Those", "In", "On", "At",
    "By", "For", "Of", "To", "And", "Or", "But", "It", "We", "They",
}


def _document_text(doc: DocumentIR) -> str:
    parts = []
    for page in doc.pages:
        for para in page.paragraph:
            if para.pdf_unicode:
                parts.append(para.pdf_unicode)
    return "\n".join(parts)


def extract_glossary(doc: DocumentIR, cfg: TranslateConfig | None = None) -> list[GlossaryEntry]:
    """Mine candidate terminology from document text.

    Finds capitalized phrases introduced with a parenthesized acronym, plus
    capitalized n-grams (2-5 words) repeated at least ``cfg.min_freq`` times.
    """
    cfg = cfg or TranslateConfig()
    text = _document_text(doc)
    found: dict[str, GlossaryEntry] = {}

    for m in _ACRONYM_RE.finditer(text):
        term = re.sub(r"\s+", " ", m.group(1).strip())
        words = term.split(" ")
        while len(words) > 1 and words[0] in _NGRAM_STOP_LEADS:
            words = words[1:]
        term = " ".join(words)
        freq = len(re.findall(re.escape(term), text))
        entry = found.get(term)
        if entry is None:
            found[term] = GlossaryEntry(source_term=term, acronym=m.group(2), frequency=max(freq, 1))
        else:
            entry.acronym = entry.acronym or m.group(2)

    words = [
        (m.group(0), m.start()) for m in _WORD_RE.finditer(text)
    ]
    ngram_counts: dict[tuple[str, ...], int] = {}
    for n in range(2, 6):
        for i in range(len(words) - n + 1):
            gram = tuple(w for w, _ in words[i : i + n])
            if not all(_CAPITALIZED.match(w) for w in gram):
                continue
            if gram[0] in _NGRAM_STOP_LEADS:
                continue
            # Require adjacency in the raw text (no sentence boundary between).
            span = text[words[i][1] : words[i + n - 1][1]]
            if any(ch in span for ch in ".!?\n"):
                continue
            ngram_counts[gram] = ngram_counts.get(gram, 0) + 1

    candidates = {
        " ".join(gram): count
        for gram, count in ngram_counts.items()
        if count >= cfg.min_freq
    }
    # Drop n-grams that only ever appear inside an accepted longer phrase.
    accepted = sorted(candidates, key=len, reverse=True)
    kept: list[str] = []
    for term in accepted:
        covering = [k for k in kept if term in k and candidates[k] >= candidates[term]]
        if not covering:
            kept.append(term)
    for term in kept:
        if term not in found:
            found[term] = GlossaryEntry(source_term=term, frequency=candidates[term])
        else:
            found[term].frequency = max(found[term].frequency, candidates[term])

    entries = list(found.values())
    entries.sort(key=lambda e: (-e.frequency, e.source_term))
    return entries


def load_glossary_csv(path: str | Path) -> list[GlossaryEntry]:
    """Read user glossary entries: header ``source,target,acronym`` (acronym optional)."""
    entries: list[GlossaryEntry] = []
    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or "source" not in reader.fieldnames:
            raise ValueError(f"glossary CSV {path} must have a 'source,target[,acronym]' header")
        for row in reader:
            source = (row.get("source") or "").strip()
            if not source:
                continue
            entries.append(
                GlossaryEntry(
                    source_term=source,
                    target_term=(row.get("target") or "").strip(),
                    acronym=(row.get("acronym") or "").strip() or None,
                    origin="user",
                )
            )
    return entries


def merge_glossaries(auto: list[GlossaryEntry], user: list[GlossaryEntry]) -> list[GlossaryEntry]:
    """User entries win over auto entries with the same source term."""
    by_term = {e.source_term: e for e in auto}
    for e in user:
        by_term[e.source_term] = e
    entries = list(by_term.values())
    entries.sort(key=lambda e: (-e.frequency, e.source_term))
    return entries


# ---------------------------------------------------------------------------
# Prompt assembly
# ---------------------------------------------------------------------------


def build_prompt(
    batch: list[str],
    glossary: list[GlossaryEntry],
    langs: tuple[str, str],
    role_cfg: str | None = None,
) -> str:
    """Deterministic prompt: role, token rules, relevant glossary, numbered texts."""
    if not batch:
        raise ValueError("build_prompt requires a non-empty batch")
    role = role_cfg or TranslateConfig().role_preamble
    src, dst = langs
    joined = "\n".join(batch)
    joined_low = joined.lower()
    relevant = [
        e for e in glossary
        if e.source_term.lower() in joined_low
        or (e.acronym and re.search(rf"\b{re.escape(e.acronym)}\b", joined))
    ]
    lines = [
        role,
        "",
        f"Translate the numbered segments below from {src} to {dst}.",
        "Rules:",
        "- Keep every marker of the form {v<number>} exactly as written.",
        "- Never translate, alter, duplicate, or drop anything inside such markers.",
        "- Answer with the same number of segments, each starting with '#<number>:'.",
    ]
    if relevant:
        lines.append("")
        lines.append("Glossary (translate these terms exactly as given):")
        for e in relevant:
            target = e.target_term or "<target>"
            lines.append(f"{e.source_term} ⇒ {target}")
    lines.append("")
    lines.append("Segments:")
    for i, text in enumerate(batch, start=1):
        lines.append(f"#{i}: {text}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Placeholder verification
# ---------------------------------------------------------------------------

_MALFORMED_RE = re.compile(r"\{v(?!\d+\})[^}]*\}?")


def verify_placeholders(input_text: str, output_text: str, placeholders) -> list[Violation]:
    """Check token conservation; an empty list means the output is clean."""
    expected = [p.id for p in placeholders]
    seen = [int(m.group(1)) for m in TOKEN_RE.finditer(output_text)]
    violations: list[Violation] = []
    for pid in expected:
        count = seen.count(pid)
        if count == 0:
            violations.append(Violation(kind="Missing", id=pid))
        elif count > 1:
            violations.append(Violation(kind="Duplicate", id=pid))
    for pid in sorted(set(seen)):
        if pid not in expected:
            violations.append(Violation(kind="Unknown", id=pid))
    for m in _MALFORMED_RE.finditer(output_text):
        violations.append(Violation(kind="Malformed", span=m.group(0)))
    return violations


# ---------------------------------------------------------------------------
# Backends
# ---------------------------------------------------------------------------


def pseudo_translate(text: str, mode: str) -> str:
    """Deterministic test translation.

    ``identity`` echoes; ``bracket`` wraps each maximal non-space,
    non-placeholder run w as ⟦w⟧; ``expand:f`` pads with the middle
    dot until the text reaches ``ceil(f * len)``.
    """
    if mode == "identity":
        return text
    if mode == "bracket":
        parts: list[str] = []
        cursor = 0
        segments: list[tuple[str, bool]] = []
        for m in TOKEN_RE.finditer(text):
            if m.start() > cursor:
                segments.append((text[cursor : m.start()], False))
            segments.append((m.group(0), True))
            cursor = m.end()
        if cursor < len(text):
            segments.append((text[cursor:], False))
        for segment, is_token in segments:
            if is_token:
                parts.append(segment)
                continue
            parts.append(
                re.sub(r"[^\s]+", lambda w: "⟦" + w.group(0) + "⟧", segment)
            )
        return "".join(parts)
    if mode.startswith("expand:"):
        try:
            factor = float(mode.split(":", 1)[1])
        except ValueError:
            raise UnknownMode(mode) from None
        if factor < 1.0:
            raise UnknownMode(mode)
        target = math.ceil(factor * len(text))
        return text + "·" * max(0, target - len(text))
    raise UnknownMode(mode)


class MockBackend:
    """Offline backend applying :func:`pseudo_translate` to each text."""

    def __init__(self, mode: str = "identity"):
        pseudo_translate("", mode)  # validate the mode eagerly
        self.mode = mode
        self.name = f"mock:{mode}"
        self.calls = 0

    def translate(self, texts: list[str], prompt: str) -> list[str]:
        self.calls += 1
        return [pseudo_translate(t, self.mode) for t in texts]


_SEGMENT_RE = re.compile(r"^#(\d+):[ ]?(.*)$")


class HttpBackend:
    """Chat-completions style HTTP backend.

    Sends one user message carrying the numbered prompt and parses
    ``#<n>:`` segments out of the first completion.  ``post`` is injectable
    for tests; by default :func:`requests.post` is used lazily.
    """

    def __init__(
        self,
        endpoint: str,
        model: str,
        api_key_env: str = "TRANSLAYOUT_API_KEY",
        timeout: float = 120.0,
        post=None,
    ):
        self.endpoint = endpoint
        self.model = model
        self.api_key_env = api_key_env
        self.timeout = timeout
        self._post = post
        self.name = f"http:{model}"

    def _do_post(self, payload: dict) -> dict:
        post = self._post
        if post is None:
            import requests

            post = requests.post
        headers = {"Content-Type": "application/json"}
        key = os.environ.get(self.api_key_env, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        try:
            response = post(self.endpoint, json=payload, headers=headers, timeout=self.timeout)
        except Exception as exc:
            raise BackendUnavailable(f"POST {self.endpoint} failed: {exc}") from exc
        status = getattr(response, "status_code", 200)
        if status >= 400:
            raise BackendUnavailable(f"backend returned HTTP {status}")
        try:
            return response.json()
        except Exception as exc:
            raise BackendProtocolError(f"response is not JSON: {exc}") from exc

    def translate(self, texts: list[str], prompt: str) -> list[str]:
        payload = {
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": 0,
        }
        data = self._do_post(payload)
        try:
            content = data["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError):
            raise BackendProtocolError("missing choices[0].message.content") from None
        outputs: dict[int, str] = {}
        current: int | None = None
        for line in str(content).splitlines():
            m = _SEGMENT_RE.match(line)
            if m:
                current = int(m.group(1))
                outputs[current] = m.group(2)
            elif current is not None:
                outputs[current] += "\n" + line
        if sorted(outputs) != list(range(1, len(texts) + 1)):
            raise BackendProtocolError(
                f"expected segments 1..{len(texts)}, got {sorted(outputs)}"
            )
        return [outputs[i].strip() for i in range(1, len(texts) + 1)]


def make_backend(spec: str) -> MockBackend | HttpBackend:
    """Build a backend from a CLI spec.

    ``mock:<mode>`` builds the offline backend; ``http`` reads the endpoint
    from ``TRANSLAYOUT_ENDPOINT``; a full URL (optionally ``#model``) names
    the endpoint directly.
    """
    if spec.startswith("mock:"):
        return MockBackend(spec.split(":", 1)[1])
    if spec == "mock":
        return MockBackend("identity")
    if spec == "http":
        endpoint = os.environ.get("TRANSLAYOUT_ENDPOINT", "")
        if not endpoint:
            raise BackendUnavailable(
                "translator 'http' requires TRANSLAYOUT_ENDPOINT to be set"
            )
        return HttpBackend(endpoint=endpoint, model=os.environ.get("TRANSLAYOUT_MODEL", "default"))
    if spec.startswith(("http://", "https://")):
        if "#" in spec:
            endpoint, model = spec.rsplit("#", 1)
        else:
            endpoint, model = spec, "default"
        return HttpBackend(endpoint=endpoint, model=model)
    raise UnknownMode(spec)


# ---------------------------------------------------------------------------
# Batch translation with verification and fallback
# ---------------------------------------------------------------------------


def translate_batch(
    backend,
    request: TranslationRequest,
    placeholders_per_text: list[list] | None = None,
    retries: int = 2,
) -> TranslationResult:
    """Translate a batch, enforcing placeholder integrity per paragraph.

    Outputs that corrupt placeholders are retried individually up to
    ``retries`` times, then fall back to the input text and are flagged.
    """
    placeholders_per_text = placeholders_per_text or [[] for _ in request.texts]
    prompt = request.prompt or build_prompt(
        request.texts, request.glossary, (request.source_lang, request.target_lang)
    )
    outputs = backend.translate(list(request.texts), prompt)
    if len(outputs) != len(request.texts):
        raise BackendProtocolError(
            f"backend returned {len(outputs)} outputs for {len(request.texts)} inputs"
        )
    failed: list[int] = []
    for i, (text, output) in enumerate(zip(request.texts, outputs)):
        records = placeholders_per_text[i]
        violations = verify_placeholders(text, output, records)
        attempt = 0
        while violations and attempt < retries:
            attempt += 1
            single_prompt = build_prompt(
                [text], request.glossary, (request.source_lang, request.target_lang)
            )
            retry_out = backend.translate([text], single_prompt)
            if len(retry_out) != 1:
                raise BackendProtocolError("retry returned a different batch size")
            output = retry_out[0]
            violations = verify_placeholders(text, output, records)
        if violations:
            logger.warning(
                "paragraph %d fell back to identity after %d retries: %s",
                i, retries, [f"{v.kind}({v.id})" for v in violations],
            )
            output = text
            failed.append(i)
        outputs[i] = output
    return TranslationResult(outputs=outputs, failed=failed, backend_name=getattr(backend, "name", ""))


def resolve_glossary_targets(
    backend, glossary: list[GlossaryEntry], langs: tuple[str, str]
) -> None:
    """First pass: translate unresolved glossary terms themselves (one batch)."""
    pending = [e for e in glossary if not e.target_term]
    if not pending:
        return
    texts = [e.source_term for e in pending]
    prompt = build_prompt(texts, [], langs)
    outputs = backend.translate(texts, prompt)
    if len(outputs) != len(texts):
        raise BackendProtocolError("glossary pass returned a different batch size")
    for entry, output in zip(pending, outputs):
        entry.target_term = output


def batch_paragraphs(paragraphs: list[Paragraph], batch_chars: int = 4000) -> list[list[Paragraph]]:
    """Group paragraphs in reading order without splitting any of them."""
    batches: list[list[Paragraph]] = []
    current: list[Paragraph] = []
    size = 0
    for para in paragraphs:
        n = len(para.input)
        if current and size + n > batch_chars:
            batches.append(current)
            current = []
            size = 0
        current.append(para)
        size += n
    if current:
        batches.append(current)
    return batches


def translate_document(
    doc: DocumentIR,
    backend,
    cfg: TranslateConfig | None = None,
    glossary: list[GlossaryEntry] | None = None,
) -> dict:
    """Translate every maskable paragraph in place; returns run statistics."""
    cfg = cfg or TranslateConfig()
    glossary = glossary if glossary is not None else []
    langs = (doc.source_lang, doc.target_lang)
    resolve_glossary_targets(backend, glossary, langs)

    units: list[Paragraph] = []
    for page in doc.pages:
        for para in page.paragraph:
            if para.input and para.merged_into is None and para.continuation_of is None:
                units.append(para)
    stats = {"paragraphs": len(units), "batches": 0, "failed": 0, "prompts": []}
    for batch in batch_paragraphs(units, cfg.batch_chars):
        texts = [p.input for p in batch]
        prompt = build_prompt(texts, glossary, langs, cfg.role_preamble)
        stats["prompts"].append(prompt)
        request = TranslationRequest(
            texts=texts,
            source_lang=langs[0],
            target_lang=langs[1],
            glossary=glossary,
            prompt=prompt,
        )
        result = translate_batch(
            backend, request, [p.placeholders for p in batch], retries=cfg.retries
        )
        for para, output in zip(batch, result.outputs):
            para.output = output
        for idx in result.failed:
            batch[idx].failed = True
            stats["failed"] += 1
        stats["batches"] += 1
    return stats
