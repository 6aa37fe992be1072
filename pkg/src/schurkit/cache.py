"""Plain-text persistence for LR coefficients.

One record per line, ``A|C|B<TAB>value``, partitions in literal form,
records sorted, UTF-8 without BOM.  Writes go through a temporary file and
an atomic replace so concurrent processes never see a torn file.
"""

from __future__ import annotations

import os
import re
import tempfile
from pathlib import Path

from .lr import LrKey, count_lr_tableaux
from .partitions import Partition, format_partition

_PART = r"(?:0|[1-9][0-9]*(?:,[0-9]+)*)"
_LINE = re.compile(rf"^({_PART})\|({_PART})\|({_PART})\t(0|[1-9][0-9]*)$")


class CacheFormatError(ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.lineno = lineno


class StaleValue(ValueError):
    pass


def _parse(text: str) -> Partition:
    if text == "0":
        return Partition()
    return Partition(int(x) for x in text.split(","))


def format_record(key: LrKey, value: int) -> str:
    a, c, b = key
    return f"{format_partition(a)}|{format_partition(c)}|{format_partition(b)}\t{value}"


def cache_load(path, paranoid: bool = False) -> dict[LrKey, int]:
    """Read a cache file; a missing file reads as empty.

    With ``paranoid`` every value is recomputed and a disagreement raises
    :class:`StaleValue`.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        return {}
    out = {}
    for lineno, line in enumerate(text.split("\n"), 1):
        if line == "":
            continue
        m = _LINE.match(line)
        if m is None:
            raise CacheFormatError(path, lineno, f"malformed record {line!r}")
        try:
            a, c, b = (_parse(g) for g in m.groups()[:3])
        except ValueError as exc:
            raise CacheFormatError(path, lineno, str(exc)) from None
        key = LrKey.canonical(a, c, b)
        value = int(m.group(4))
        if paranoid:
            fresh = count_lr_tableaux(*key)
            if fresh != value:
                raise StaleValue(f"{path}:{lineno}: stored {value}, recomputed {fresh}")
        out[key] = value
    return out


def cache_store(path, records) -> None:
    path = Path(path)
    lines = sorted(format_record(LrKey.canonical(*k), v) for k, v in dict(records).items())
    data = "".join(line + "\n" for line in lines)
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
