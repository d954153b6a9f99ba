"""Input files describing a quotient algebra.

A presentation file is a small TOML document:

    field = "F2"              # "Q" for rationals, "F<p>" for a prime field
    vars  = ["x", "y", "z"]
    ideal = ["x^2", "y^2", "z^2"]

    [params]                  # optional integer substitutions
    L = 4                     # the token L becomes 4 in every polynomial

    [ideals.a]                # optional named ideals, usable by name
    gens = ["x", "y"]         # from the command line

Substitutions are textual and happen before polynomial parsing, so a
family of algebras indexed by an exponent fits in one file.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from typing import Dict, Tuple

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from .algebra import ArtinianAlgebra, Ideal
from .errors import InputError, UnknownIdealNameError
from .fields import field_from_name

_IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

_TOP_KEYS = frozenset(("field", "vars", "ideal", "params", "ideals"))


@dataclass(frozen=True)
class Presentation:
    """A validated presentation, with parameter substitutions applied."""

    field_name: str
    var_names: Tuple[str, ...]
    ideal: Tuple[str, ...]
    registered_ideals: Tuple[Tuple[str, Tuple[str, ...]], ...] = ()
    parameters: Tuple[Tuple[str, int], ...] = ()

    def digest(self) -> str:
        """Short content hash; whitespace and comment edits do not change it."""
        canon = "|".join((
            self.field_name,
            ",".join(self.var_names),
            ";".join(self.ideal),
            ";".join(f"{n}={','.join(gens)}" for n, gens in self.registered_ideals),
        ))
        return hashlib.sha256(canon.encode()).hexdigest()[:12]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


def _string_list(value: object, key: str) -> Tuple[str, ...]:
    _require(isinstance(value, list) and value != [],
             f"{key!r} must be a nonempty list of strings")
    for entry in value:
        _require(isinstance(entry, str), f"{key!r} must contain only strings")
    return tuple(value)


def _substitute(source: str, parameters: Tuple[Tuple[str, int], ...]) -> str:
    for name, value in parameters:
        source = re.sub(rf"\b{name}\b", str(value), source)
    return source


def parse_presentation(text: str) -> Presentation:
    """Parse and validate presentation source text."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"presentation syntax: {exc}") from exc

    unknown = sorted(set(data) - _TOP_KEYS)
    _require(not unknown, f"unknown presentation keys: {', '.join(unknown)}")
    for key in ("field", "vars", "ideal"):
        _require(key in data, f"presentation is missing {key!r}")

    field_name = data["field"]
    _require(isinstance(field_name, str), "'field' must be a string")
    field_from_name(field_name)  # rejects unknown names early

    var_names = _string_list(data["vars"], "vars")
    for name in var_names:
        _require(_IDENTIFIER.match(name) is not None,
                 f"variable name {name!r} is not an identifier")
    _require(len(set(var_names)) == len(var_names),
             "variable names must be distinct")

    raw_params = data.get("params", {})
    _require(isinstance(raw_params, dict), "'params' must be a table")
    parameters = []
    for name, value in raw_params.items():
        _require(_IDENTIFIER.match(name) is not None,
                 f"parameter name {name!r} is not an identifier")
        _require(name not in var_names,
                 f"parameter {name!r} collides with a variable")
        _require(isinstance(value, int) and not isinstance(value, bool),
                 f"parameter {name!r} must be an integer")
        parameters.append((name, value))
    parameters = tuple(parameters)

    ideal = tuple(_substitute(s, parameters)
                  for s in _string_list(data["ideal"], "ideal"))

    raw_ideals = data.get("ideals", {})
    _require(isinstance(raw_ideals, dict), "'ideals' must be a table")
    registered = []
    for name, block in raw_ideals.items():
        _require(_IDENTIFIER.match(name) is not None,
                 f"ideal name {name!r} is not an identifier")
        _require(isinstance(block, dict) and set(block) == {"gens"},
                 f"[ideals.{name}] must contain exactly the key 'gens'")
        gens = tuple(_substitute(s, parameters)
                     for s in _string_list(block["gens"], f"ideals.{name}.gens"))
        registered.append((name, gens))

    return Presentation(field_name, var_names, ideal, tuple(registered),
                        parameters)


def load_presentation(path: str) -> Presentation:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read presentation file: {exc}") from exc
    return parse_presentation(text)


def build_algebra(presentation: Presentation) -> ArtinianAlgebra:
    field = field_from_name(presentation.field_name)
    return ArtinianAlgebra.from_strings(
        field, presentation.var_names, presentation.ideal)


def build_registered_ideals(presentation: Presentation,
                            algebra: ArtinianAlgebra) -> Dict[str, Ideal]:
    return {name: algebra.ideal_from_strings(list(gens))
            for name, gens in presentation.registered_ideals}


def lookup_ideal(ideals: Dict[str, Ideal], name: str) -> Ideal:
    if name not in ideals:
        known = ", ".join(sorted(ideals)) or "none"
        raise UnknownIdealNameError(
            f"no registered ideal named {name!r} (known: {known})")
    return ideals[name]
