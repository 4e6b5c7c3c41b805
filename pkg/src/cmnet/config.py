"""Instance configuration files.

Grammar, one item per line::

    # comment
    [section]
    key = value

Blank lines and lines starting with ``#`` are ignored.  Keys are unique per
section.  Required sections and keys:

    [field]    N (negative squarefree integer), f (conductor, default 1)
    [curve]    a1 a2 a3 a4 a6 (ELEM, default 0)
    [point]    P.x P.y omegaP.x omegaP.y (ELEM)
    [support]  primes (comma separated rational primes)
    [sweep]    box (default 3), norm_bound (default 20)
    [instance] name (optional)

ELEM is ``RAT`` or ``RAT(+|-)RAT*w`` with ``RAT = [+-]?int(/int)?``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import CMNetError, ConfigError

_SECTION = re.compile(r"^\[([A-Za-z_][\w-]*)\]$")
_ITEM = re.compile(r"^([A-Za-z_][\w.-]*)\s*=\s*(.*)$")

SCHEMA = {
    "instance": {"name"},
    "field": {"N", "f"},
    "curve": {"a1", "a2", "a3", "a4", "a6"},
    "point": {"P.x", "P.y", "omegaP.x", "omegaP.y"},
    "support": {"primes"},
    "sweep": {"box", "norm_bound"},
}
REQUIRED = {"field": {"N"}, "point": {"P.x", "P.y", "omegaP.x", "omegaP.y"}, "support": {"primes"}}


@dataclass(frozen=True)
class Entry:
    value: str
    line: int


def parse_config_text(text: str) -> dict[str, dict[str, Entry]]:
    out: dict[str, dict[str, Entry]] = {}
    section = None
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _SECTION.match(line)
        if m:
            section = m.group(1)
            if section not in SCHEMA:
                raise ConfigError(f"unknown section [{section}]", n)
            if section in out:
                raise ConfigError(f"duplicate section [{section}]", n)
            out[section] = {}
            continue
        m = _ITEM.match(line)
        if not m:
            raise ConfigError(f"cannot parse {line!r}", n)
        if section is None:
            raise ConfigError("key outside any section", n)
        key, value = m.group(1), m.group(2).strip()
        if key not in SCHEMA[section]:
            raise ConfigError(f"unknown key {key!r} in [{section}]", n)
        if key in out[section]:
            raise ConfigError(f"duplicate key {key!r}", n)
        out[section][key] = Entry(value, n)
    for sec, keys in REQUIRED.items():
        missing = keys - set(out.get(sec, {}))
        if missing:
            raise ConfigError(f"missing {', '.join(sorted(missing))} in [{sec}]")
    return out


def convert(entry: Entry, fn):
    """Apply ``fn`` to an entry value, turning failures into line-numbered errors."""
    try:
        return fn(entry.value)
    except (CMNetError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad value {entry.value!r}: {exc}", entry.line) from exc


def read_config(path) -> dict[str, dict[str, Entry]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    return parse_config_text(text)
