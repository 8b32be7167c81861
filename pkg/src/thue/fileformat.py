"""Reading and writing equation systems as text, and JSON views of results.

Text format::

    # comment
    alphabet: a b c
    mode: thue            # optional; "semi" for one-way rules
    null: a b b c a b     # optional null sequence
    abbc <-> bcab
    abbca <-> cabab

Rules use ``<->`` in Thue mode and ``->`` in semi-Thue mode.  Without a
``mode:`` line the arrows decide; mixing them is an error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .core import Alphabet, Word
from .rewrite import DecisionOutcome, Derivation, Equation, EquationSystem, Step, Direction


class FormatError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass(frozen=True)
class SystemFile:
    system: EquationSystem
    null: Optional[Word] = None

    @property
    def alphabet(self):
        return self.system.alphabet

    def null_system(self):
        from .nullseq import NullSystem

        if self.null is None:
            raise ValueError("file declares no null sequence")
        return NullSystem(self.alphabet, self.null, self.system)


_HEADERS = ("alphabet", "mode", "null")


def parse_system(text: str) -> SystemFile:
    alphabet = mode = null_text = None
    rules = []
    arrows = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if sep and key in _HEADERS:
            value = value.strip()
            if key == "alphabet":
                if alphabet is not None:
                    raise FormatError("alphabet declared twice", lineno)
                try:
                    alphabet = Alphabet(value.split())
                except ValueError as exc:
                    raise FormatError(str(exc), lineno) from None
            elif key == "mode":
                if value not in ("thue", "semi"):
                    raise FormatError(f"mode must be thue or semi, not {value!r}", lineno)
                mode = value
            elif key == "null":
                null_text = (value, lineno)
            continue
        if alphabet is None:
            raise FormatError("the alphabet line must come before the rules", lineno)
        if "<->" in line:
            lhs, rhs = line.split("<->", 1)
            arrows.add("<->")
        elif "->" in line:
            lhs, rhs = line.split("->", 1)
            arrows.add("->")
        else:
            raise FormatError(f"expected 'LHS <-> RHS' or 'LHS -> RHS', got {line!r}", lineno)
        try:
            eq = Equation(alphabet.parse(lhs), alphabet.parse(rhs))
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
        rules.append(eq)
    if alphabet is None:
        raise FormatError("missing 'alphabet:' line")
    if len(arrows) > 1:
        raise FormatError("rules mix '<->' and '->'")
    implied = {"<->": "thue", "->": "semi"}.get(next(iter(arrows), ""), None)
    if mode is None:
        mode = implied or "thue"
    elif implied and implied != mode:
        raise FormatError(f"mode {mode} does not match the rule arrows")
    null = None
    if null_text is not None:
        try:
            null = alphabet.parse(null_text[0])
        except ValueError as exc:
            raise FormatError(str(exc), null_text[1]) from None
        if not null:
            raise FormatError("null sequence is empty", null_text[1])
    return SystemFile(EquationSystem(alphabet, tuple(rules), mode), null)


def load_system(path) -> SystemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_system(fh.read())


def format_system(system: EquationSystem, null=None, comment=None) -> str:
    fmt = system.alphabet.format
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("alphabet: " + " ".join(system.alphabet.symbols))
    lines.append(f"mode: {system.mode}")
    if null is not None:
        lines.append(f"null: {fmt(null)}")
    arrow = "<->" if system.mode == "thue" else "->"
    lines.extend(f"{fmt(eq.lhs)} {arrow} {fmt(eq.rhs)}" for eq in system.equations)
    return "\n".join(lines) + "\n"


# -- JSON ------------------------------------------------------------------


def dumps(obj) -> str:
    """Canonical JSON text (sorted keys, two-space indent)."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def system_to_json(system: EquationSystem, null=None) -> dict:
    fmt = system.alphabet.format
    out = {
        "alphabet": list(system.alphabet.symbols),
        "mode": system.mode,
        "equations": [{"lhs": fmt(eq.lhs), "rhs": fmt(eq.rhs)} for eq in system.equations],
    }
    if null is not None:
        out["null"] = fmt(null)
    return out


def system_from_json(data: dict) -> SystemFile:
    alphabet = Alphabet(data["alphabet"])
    eqs = [Equation(alphabet.parse(e["lhs"]), alphabet.parse(e["rhs"])) for e in data["equations"]]
    null = alphabet.parse(data["null"]) if data.get("null") is not None else None
    return SystemFile(EquationSystem(alphabet, tuple(eqs), data.get("mode", "thue")), null)


def derivation_to_json(d: Derivation, system: EquationSystem, null=None) -> dict:
    fmt = system.alphabet.format
    words = d.replay(system, null)
    return {
        "start": fmt(d.start),
        "end": fmt(d.end),
        "steps": [{"rule": s.rule, "direction": s.direction.value, "position": s.position,
                   "word": fmt(w)} for s, w in zip(d.steps, words[1:])],
    }


def derivation_from_json(data: dict, alphabet: Alphabet) -> Derivation:
    steps = tuple(Step(s["rule"], Direction(s["direction"]), s["position"]) for s in data["steps"])
    return Derivation(alphabet.parse(data["start"]), steps, alphabet.parse(data["end"]))


def outcome_to_json(out: DecisionOutcome, system: EquationSystem, null=None) -> dict:
    return {
        "verdict": out.verdict.value,
        "states": out.states,
        "max_length": out.max_length,
        "note": out.note,
        "witness": (derivation_to_json(out.witness, system, null)
                    if out.witness is not None else None),
    }
