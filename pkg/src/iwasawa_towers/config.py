"""Line-oriented ``key = value`` run configuration.

Grammar, one setting per line; ``#`` starts a comment::

    prime = 2
    seeds = [ "1/3", "3/5" ]      # n, p/q or sqrt(m)@r
    terms = 12
    precision = 24
    levels = 5
    cap = 1024
    jobs = 1
    format = "table"

Values are JSON literals: integers, double-quoted strings, or lists of them.
Seeds are always strings (or plain integers) so no value passes through a float.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError, SemanticError
from .seeds import SeedSpec, parse_seed
from .spanning import DEFAULT_VERTEX_CAP
from .tower import DEFAULT_PRECISION, DEFAULT_TERMS

FORMATS = ("table", "machine")

# key -> minimum allowed value
_INT_KEYS = {"prime": 2, "terms": 1, "precision": 1, "levels": 1, "cap": 1, "jobs": 1,
             "level": 0, "digits": 1}


@dataclass
class RunConfig:
    subcommand: str | None = None
    config_path: str | None = None
    terms: int = DEFAULT_TERMS
    precision: int = DEFAULT_PRECISION
    levels: int | None = None
    cap: int = DEFAULT_VERTEX_CAP
    jobs: int = 1
    format: str = "table"
    out: str | None = None
    level: int = 1
    digits: int = 4

    def validate(self):
        for key, low in _INT_KEYS.items():
            value = getattr(self, key, None)
            if key == "prime" or value is None:
                continue
            if value < low:
                raise SemanticError(f"{key} must be at least {low}, got {value}")
        if self.format not in FORMATS:
            raise SemanticError(f"format must be one of {FORMATS}, got {self.format!r}")
        return self


def make_spec(prime, seed_texts) -> SeedSpec:
    seeds = []
    for s in seed_texts:
        try:
            seeds.append(parse_seed(s))
        except ValueError as exc:
            raise SemanticError(str(exc)) from None
    spec = SeedSpec(prime, tuple(seeds))
    try:
        spec.require_unit_seed()
    except ValueError as exc:
        raise SemanticError(str(exc)) from None
    return spec


def parse_config(text: str, config: RunConfig | None = None) -> tuple[SeedSpec, RunConfig]:
    config = config or RunConfig()
    values = {}
    seed_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise ParseError("expected 'key = value'", lineno, len(raw) - len(raw.lstrip()) + 1)
        key = key.strip()
        col = len(line) - len(value.lstrip()) + 1
        if not key.isidentifier():
            raise ParseError(f"bad key {key!r}", lineno, 1)
        if key in values:
            raise ParseError(f"duplicate key {key!r}", lineno, 1)
        try:
            parsed = json.loads(value)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad value: {exc.msg}", lineno,
                             len(line) - len(value) + exc.colno) from None
        if key == "seeds":
            if not isinstance(parsed, list) or not all(
                    isinstance(s, str) or (isinstance(s, int) and not isinstance(s, bool))
                    for s in parsed):
                raise ParseError("seeds must be a list of strings", lineno, col)
            seed_line = lineno
        elif key in _INT_KEYS:
            if not isinstance(parsed, int) or isinstance(parsed, bool):
                raise ParseError(f"{key} must be an integer", lineno, col)
        elif key == "format":
            if not isinstance(parsed, str):
                raise ParseError("format must be a string", lineno, col)
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
        values[key] = parsed

    for key in ("prime", "seeds"):
        if key not in values:
            raise ParseError(f"missing required key {key!r}")
    for key, value in values.items():
        if key not in ("prime", "seeds"):
            setattr(config, key, value)
    try:
        spec = make_spec(values["prime"], values["seeds"])
    except SemanticError as exc:
        if seed_line is not None and "seed" in str(exc):
            raise SemanticError(f"line {seed_line}: {exc}") from None
        raise
    return spec, config.validate()


def _strip_comment(line: str) -> str:
    in_string = False
    for i, ch in enumerate(line):
        if ch == '"' and (i == 0 or line[i - 1] != "\\"):
            in_string = not in_string
        elif ch == "#" and not in_string:
            return line[:i]
    return line
