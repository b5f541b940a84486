"""Co-simulation of an original machine and a reduction of it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from tmlab.machine import Configuration, Machine, Outcome, run
from tmlab.transforms.certificate import Certificate, CertificateError
from tmlab.transforms.reduced import ReducedMachine


@dataclass(frozen=True)
class Verdict:
    kind: str  # "equivalent" | "diverged" | "budget-exhausted"
    detail: str = ""
    original_steps: int = 0
    reduced_steps: int = 0

    @property
    def equivalent(self) -> bool:
        return self.kind == "equivalent"

    def __str__(self):
        s = f"{self.kind} (original {self.original_steps} steps, reduced {self.reduced_steps} steps)"
        return f"{s}: {self.detail}" if self.detail else s


def _first_mismatch(a: Mapping[int, str], b: Mapping[int, str]) -> str:
    for p in sorted(set(a) | set(b)):
        if a.get(p) != b.get(p):
            return f"cell {p}: original {a.get(p, '<blank>')}, decoded {b.get(p, '<blank>')}"
    return ""


def verify_simulation(original: Machine, reduced: ReducedMachine | Machine, budget: int,
                      certificate: Certificate | None = None, tape: Mapping[int, str] | None = None,
                      head: int = 0, reduced_start: Configuration | None = None) -> Verdict:
    """Run ``original`` for ``budget`` steps and the reduction for the matching budget, then compare.

    The reduction may be given as a :class:`ReducedMachine` or as a bare
    machine plus ``certificate`` (as loaded from files); in the latter case
    the reduced machine starts from the certificate's seed (blank original
    tape, head 0) unless ``reduced_start`` is supplied.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    tape = dict(tape or {})
    if isinstance(reduced, ReducedMachine):
        start, cert = reduced.start(tape, head)
        machine = reduced.machine
    else:
        if certificate is None:
            raise CertificateError("a bare reduced machine needs a certificate")
        machine, cert = reduced, certificate
        start = reduced_start or Configuration.initial(machine, tape=cert.seed, state=cert.start_state)
    if cert.original_blank != original.blank:
        raise CertificateError("certificate blank does not match the original machine")
    if cert.kind != "symbol-blocks":
        unknown = set(cert.decode.values()) - set(original.symbols)
        if unknown:
            raise CertificateError(f"certificate decodes to unknown symbols {sorted(unknown)}")
    elif set(cert.codes) != set(original.symbols):
        raise CertificateError("certificate codes do not cover the original alphabet")

    orig = run(original, budget, config=Configuration.initial(original, head=head, tape=tape))
    if orig.outcome is Outcome.BUDGET_EXHAUSTED:
        # one-sided check: the reduction must not halt before simulating `budget` steps
        red = run(machine, budget, config=start)
        if red.halted:
            return Verdict("diverged", "reduced machine halted while the original was still running",
                           orig.steps, red.steps)
        return Verdict("budget-exhausted", "", orig.steps, red.steps)

    red = run(machine, cert.budget_for(orig.steps), config=start)
    if red.outcome is not orig.outcome:
        return Verdict("diverged", f"original {orig.outcome.value}, reduced {red.outcome.value}",
                       orig.steps, red.steps)
    try:
        decoded = cert.decode_tape(red.final.tape)
    except CertificateError as exc:
        return Verdict("diverged", f"undecodable tape: {exc}", orig.steps, red.steps)
    mismatch = _first_mismatch(orig.final.tape, decoded)
    if mismatch:
        return Verdict("diverged", mismatch, orig.steps, red.steps)
    return Verdict("equivalent", "", orig.steps, red.steps)
