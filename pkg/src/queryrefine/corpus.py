"""Document ingestion and text normalization.

Documents come in as JSON-lines records or raw HTML files and leave as
token streams: lowercased runs of letters/digits (with interior hyphens
kept by default), stopwords removed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from html.parser import HTMLParser
from importlib import resources
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

# Alphanumeric runs, optionally hyphen-joined ("resources-online-learning"
# stays one token so injected URL slugs survive re-tokenization).
_TOKEN_HYPHEN = re.compile(r"[^\W_]+(?:-[^\W_]+)*", re.UNICODE)
_TOKEN_PLAIN = re.compile(r"[^\W_]+", re.UNICODE)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one token per line, '#' lines are comments."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def default_stopwords() -> frozenset[str]:
    """The bundled English stopword list."""
    text = resources.files("queryrefine.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


@dataclass(frozen=True)
class PreprocessConfig:
    stopword_set: frozenset[str] = field(default_factory=default_stopwords)
    keep_intra_word_hyphens: bool = True
    min_token_length: int = 1

    def __post_init__(self):
        if self.min_token_length < 1:
            raise ValueError("min_token_length must be positive")


def preprocess(text: str, config: PreprocessConfig | None = None) -> List[str]:
    """Lowercase, tokenize and strip stopwords; order and duplicates kept."""
    if config is None:
        config = PreprocessConfig()
    pattern = _TOKEN_HYPHEN if config.keep_intra_word_hyphens else _TOKEN_PLAIN
    out = []
    for match in pattern.finditer(text.lower()):
        tok = match.group()
        if len(tok) >= config.min_token_length and tok not in config.stopword_set:
            out.append(tok)
    return out


@dataclass
class Document:
    doc_id: int
    url: str
    title: str
    text: str
    tokens: List[str]


class RecordError(ValueError):
    """A corpus record file line that cannot be ingested."""


def ingest_records(path: str | Path, config: PreprocessConfig | None = None) -> List[Document]:
    """Load a JSON-lines corpus file: one object per line with url/title/text."""
    if config is None:
        config = PreprocessConfig()
    docs: List[Document] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RecordError(f"line {lineno}: malformed record ({exc.msg})") from exc
            if not isinstance(record, dict):
                raise RecordError(f"line {lineno}: malformed record (not an object)")
            for key in ("url", "title", "text"):
                if key not in record:
                    raise RecordError(f"line {lineno}: missing field {key}")
            docs.append(
                Document(
                    doc_id=len(docs),
                    url=str(record["url"]),
                    title=str(record["title"]),
                    text=str(record["text"]),
                    tokens=preprocess(str(record["text"]), config),
                )
            )
    return docs


def write_records(docs: Sequence[Document], path: str | Path) -> None:
    """Serialize documents back to the JSON-lines record format."""
    with open(path, "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps({"url": doc.url, "title": doc.title, "text": doc.text}) + "\n")


class _TextExtractor(HTMLParser):
    """Collects visible text, skipping script/style; remembers the title."""

    _SKIP = {"script", "style"}

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.chunks: List[str] = []
        self.title_chunks: List[str] = []
        self._skip_depth = 0
        self._in_title = False

    def handle_starttag(self, tag, attrs):
        if tag in self._SKIP:
            self._skip_depth += 1
        elif tag == "title":
            self._in_title = True

    def handle_endtag(self, tag):
        if tag in self._SKIP and self._skip_depth > 0:
            self._skip_depth -= 1
        elif tag == "title":
            self._in_title = False

    def handle_data(self, data):
        if self._skip_depth:
            return
        if self._in_title:
            self.title_chunks.append(data)
        else:
            self.chunks.append(data)


def extract_html_text(markup: str) -> Tuple[str, str]:
    """Strip markup from an HTML string; returns (title, text).

    Script and style content is dropped; whitespace is collapsed to single
    spaces. Plain non-HTML input passes through unchanged apart from the
    whitespace normalization.
    """
    parser = _TextExtractor()
    parser.feed(markup)
    parser.close()
    title = " ".join("".join(parser.title_chunks).split())
    text = " ".join(" ".join(parser.chunks).split())
    return title, text


def ingest_html(
    files: Iterable[Tuple[str, str | Path]],
    config: PreprocessConfig | None = None,
) -> List[Document]:
    """Load (url, html file path) pairs as documents."""
    if config is None:
        config = PreprocessConfig()
    docs: List[Document] = []
    for url, path in files:
        try:
            markup = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot read {path}: {exc.strerror}") from exc
        title, text = extract_html_text(markup)
        docs.append(
            Document(
                doc_id=len(docs),
                url=url,
                title=title,
                text=text,
                tokens=preprocess(text, config),
            )
        )
    return docs
