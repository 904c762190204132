"""Cross-checks of generated sequences against OEIS b-files.

Resolution is offline-first: bundled fixtures shipped with the package,
then a local cache, then the network (skipped entirely under the offline
flag).  Every registered generator declares its own alignment to the
OEIS offset, since the natural index of a table row rarely matches the
b-file numbering.
"""

from __future__ import annotations

import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .checks import CheckReport
from .combinatorics import a014963, catalan, moebius, pyramidal, totient
from .fourier import super_catalan

CACHE_ENV_VAR = "TRIGPOLY_OEIS_CACHE"
_A_NUMBER = re.compile(r"\AA\d{6}\Z")


class NotAvailableOffline(LookupError):
    pass


class NetworkError(OSError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class SequenceFixture:
    oeis_id: str
    offset: int
    terms: tuple[int, ...]
    source: str  # bundled | cached | network

    def term_at(self, index: int) -> int:
        pos = index - self.offset
        if pos < 0 or pos >= len(self.terms):
            raise IndexError(f"{self.oeis_id} has no term at index {index}")
        return self.terms[pos]


def parse_bfile(text: str) -> tuple[int, tuple[int, ...]]:
    """Parse 'index value' lines; '#' comments and blank lines allowed."""
    offset = None
    expected = None
    terms: list[int] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two fields, got {len(fields)}", line_number)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("non-integer field", line_number) from None
        if offset is None:
            offset = index
            expected = index
        if index != expected:
            raise ParseError(f"index {index}, expected {expected}", line_number)
        expected += 1
        terms.append(value)
    if offset is None:
        raise ParseError("no data lines", 0)
    return offset, tuple(terms)


def render_bfile(offset: int, terms) -> str:
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(terms))


def _bfile_name(oeis_id: str) -> str:
    return f"b{oeis_id[1:]}.txt"


def _bundled_text(oeis_id: str) -> str | None:
    ref = resources.files(__package__).joinpath("data", _bfile_name(oeis_id))
    if ref.is_file():
        return ref.read_text()
    return None


def cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV_VAR)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "trigpoly" / "oeis"


def _cached_text(oeis_id: str) -> str | None:
    path = cache_dir() / _bfile_name(oeis_id)
    if path.is_file():
        return path.read_text()
    return None


def _store_cache(oeis_id: str, text: str) -> None:
    directory = cache_dir()
    directory.mkdir(parents=True, exist_ok=True)
    # write-then-rename keeps concurrent readers consistent
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, directory / _bfile_name(oeis_id))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _download(oeis_id: str) -> str:
    url = f"https://oeis.org/{oeis_id}/{_bfile_name(oeis_id)}"
    try:
        with urllib.request.urlopen(url, timeout=30) as response:
            return response.read().decode()
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkError(f"fetching {url}: {exc}") from exc


def fetch_sequence(oeis_id: str, max_terms: int | None = None,
                   offline: bool = False) -> SequenceFixture:
    """Resolve a sequence: bundled fixture, then cache, then network."""
    if not _A_NUMBER.match(oeis_id):
        raise ValueError(f"malformed A-number {oeis_id!r}")
    text, source = None, None
    bundled = _bundled_text(oeis_id)
    if bundled is not None:
        text, source = bundled, "bundled"
    else:
        cached = _cached_text(oeis_id)
        if cached is not None:
            text, source = cached, "cached"
        elif offline:
            raise NotAvailableOffline(oeis_id)
        else:
            text, source = _download(oeis_id), "network"
            _store_cache(oeis_id, text)
    offset, terms = parse_bfile(text)
    if max_terms is not None:
        terms = terms[:max_terms]
    return SequenceFixture(oeis_id, offset, terms, source)


def _m_triangle_term(j: int) -> int:
    # lower triangle of the super Catalan moment matrix, read by rows
    k = 0
    while j > k:
        j -= k + 1
        k += 1
    return super_catalan(k, j)


@dataclass(frozen=True)
class Registration:
    oeis_id: str
    generate: object  # callable j -> int
    start_index: int  # OEIS index of the generator's term 0


GENERATORS: dict[str, Registration] = {
    "pyramidal-row-1": Registration("A005408", lambda j: pyramidal(1, j), 0),
    "pyramidal-row-2": Registration("A000290", lambda j: pyramidal(2, j), 1),
    "pyramidal-row-3": Registration("A000330", lambda j: pyramidal(3, j), 1),
    "pyramidal-row-4": Registration("A002415", lambda j: pyramidal(4, j), 2),
    "pyramidal-row-5": Registration("A005585", lambda j: pyramidal(5, j), 1),
    "prime-power-kernel": Registration("A014963", lambda j: a014963(j + 1), 1),
    "totient-minus-moebius": Registration(
        "A053139", lambda j: totient(j + 1) - moebius(j + 1), 1),
    "moment-triangle": Registration("A182411", _m_triangle_term, 0),
    "catalan": Registration("A000108", catalan, 0),
}


def generator_for_id(oeis_id: str) -> str | None:
    for name, reg in GENERATORS.items():
        if reg.oeis_id == oeis_id:
            return name
    return None


def crosscheck(oeis_id: str, generator: str, count: int,
               offline: bool = True) -> CheckReport:
    """First `count` generated terms equal the fixture terms after the
    registered offset alignment."""
    reg = GENERATORS.get(generator)
    if reg is None:
        raise KeyError(f"no registered generator {generator!r}")
    report = CheckReport(f"oeis {oeis_id} vs {generator} ({count} terms)")
    fixture = fetch_sequence(oeis_id, offline=offline)
    for j in range(count):
        got = reg.generate(j)
        want = fixture.term_at(reg.start_index + j)
        report.record(got == want, "term", reg.start_index + j,
                      f"generated {got}, fixture {want}")
    return report


def crosscheck_all(count: int = 12, offline: bool = True) -> list[CheckReport]:
    return [crosscheck(reg.oeis_id, name, count, offline=offline)
            for name, reg in GENERATORS.items()]
