"""Decoding certificates: how to read an original tape back off a reduced machine's tape."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

CERT_VERSION = "cert/1"
KINDS = ("symbol-blocks", "tuple-field", "seeded-two-state")


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    """Position and symbol mapping from a reduced machine back to its original.

    ``symbol-blocks``: every original cell is ``block`` consecutive digit
    cells; ``codes`` maps original symbols to digit tuples.  The tuple kinds
    map each reduced symbol to the original symbol it carries (``decode``).
    Positions map as ``orig_origin + sign * (pos - sim_origin)`` (divided by
    the block length first), with ``sign = -1`` when ``mirror`` is set.

    ``seed`` and ``start_state`` describe the reduced machine's starting
    configuration for a blank original tape with the head at 0 (``None``
    means the machine's own start state).

    ``overhead`` and ``setup`` bound the reduced machine's running time:
    ``T`` original steps take at most ``overhead * T + setup`` reduced steps.
    """

    kind: str
    pass_name: str
    original_blank: str
    decode: Mapping[str, str] = field(default_factory=dict)
    codes: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    block: int = 1
    base: int | None = None
    sim_origin: int = 0
    orig_origin: int = 0
    mirror: bool = False
    overflow: int | None = None
    overhead: int = 1
    setup: int = 0
    seed: Mapping[int, str] = field(default_factory=dict)
    start_state: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CertificateError(f"unknown certificate kind {self.kind!r}")
        if self.kind == "symbol-blocks":
            if not self.codes or self.base is None or self.block < 1:
                raise CertificateError("symbol-blocks needs codes, base and block >= 1")
            if any(len(c) != self.block for c in self.codes.values()):
                raise CertificateError("every code must have the block length")
            if len(set(self.codes.values())) != len(self.codes):
                raise CertificateError("codes are not injective")
        elif not self.decode:
            raise CertificateError(f"{self.kind} needs a symbol decode table")

    def budget_for(self, steps: int) -> int:
        return self.overhead * steps + self.setup

    def decode_tape(self, tape: Mapping[int, str]) -> dict[int, str]:
        """Original non-blank cells encoded by the reduced tape ``tape`` (non-blank cells only)."""
        sign = -1 if self.mirror else 1
        out: dict[int, str] = {}
        if self.kind == "symbol-blocks":
            inverse = {c: s for s, c in self.codes.items()}
            zero = self.codes[self.original_blank]
            cells: dict[int, list[int]] = {}
            for pos, sym in tape.items():
                rel = pos - self.sim_origin
                blk, off = divmod(rel, self.block)
                digits = cells.setdefault(blk, list(zero))
                try:
                    digits[off] = int(sym)
                except ValueError as exc:
                    raise CertificateError(f"cell {pos} holds non-digit {sym!r}") from exc
            for blk, digits in cells.items():
                sym = inverse.get(tuple(digits))
                if sym is None:
                    raise CertificateError(f"block {blk} holds unused code {digits}")
                if sym != self.original_blank:
                    out[self.orig_origin + sign * blk] = sym
            return out
        for pos, sym in tape.items():
            if sym not in self.decode:
                raise CertificateError(f"cell {pos} holds unknown symbol {sym!r}")
            orig = self.decode[sym]
            if orig != self.original_blank:
                out[self.orig_origin + sign * (pos - self.sim_origin)] = orig
        return out

    def to_json(self) -> str:
        body = {
            "format": CERT_VERSION,
            "kind": self.kind,
            "pass": self.pass_name,
            "original_blank": self.original_blank,
            "block": self.block,
            "base": self.base,
            "sim_origin": self.sim_origin,
            "orig_origin": self.orig_origin,
            "mirror": self.mirror,
            "overflow": self.overflow,
            "overhead": self.overhead,
            "setup": self.setup,
            "seed": {str(p): v for p, v in self.seed.items()},
            "start_state": self.start_state,
            "codes": {s: list(c) for s, c in self.codes.items()},
            "decode": dict(self.decode),
        }
        return json.dumps(body, indent=1, sort_keys=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"certificate is not valid JSON: {exc}") from exc
        if not isinstance(d, dict) or d.get("format") != CERT_VERSION:
            raise CertificateError(f"expected a {CERT_VERSION} certificate")
        try:
            return cls(
                kind=d["kind"], pass_name=d["pass"], original_blank=d["original_blank"],
                decode=dict(d.get("decode", {})),
                codes={s: tuple(c) for s, c in d.get("codes", {}).items()},
                block=int(d.get("block", 1)), base=d.get("base"),
                sim_origin=int(d.get("sim_origin", 0)), orig_origin=int(d.get("orig_origin", 0)),
                mirror=bool(d.get("mirror", False)), overflow=d.get("overflow"),
                overhead=int(d.get("overhead", 1)), setup=int(d.get("setup", 0)),
                seed={int(p): v for p, v in d.get("seed", {}).items()},
                start_state=d.get("start_state"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, CertificateError):
                raise
            raise CertificateError(f"malformed certificate: {exc}") from exc

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "Certificate":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))
