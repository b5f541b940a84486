"""Command-line entry point: ``tmlab <command> ...``.

Exit status: 0 success, 1 bad input (parse or validation), 2 runtime
failure (undefined transition, size guard), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from tmlab import __version__
from tmlab.machine import Hooks, MachineError, Outcome, run
from tmlab.tmformat import FORMAT_VERSION, ParseError, load_machine, save_machine, serialize_machine, snapshot_line, trace_line
from tmlab.transforms.certificate import CERT_VERSION, Certificate, CertificateError


class UsageError(Exception):
    """Bad input: exit 1."""


class RuntimeFailure(Exception):
    """The requested computation failed: exit 2."""


def _nonneg(text: str) -> int:
    try:
        v = int(text.replace("_", ""))
    except ValueError:
        v = -1
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _pos(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _load(path: str):
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"{path}: file not found")
    return load_machine(p)


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands


def cmd_gen(args) -> int:
    from tmlab.friedman import FriedmanParams, generate

    try:
        params = FriedmanParams(args.k, args.delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    mach = generate(params)
    comment = f"search machine k={args.k} delta={args.delta}: {mach.n} states, {mach.m} symbols"
    if args.output:
        save_machine(mach, args.output, comment)
    else:
        sys.stdout.write(serialize_machine(mach, comment))
    print(f"{mach.n} states, {mach.m} symbols", file=sys.stderr)
    return 0


def cmd_run(args) -> int:
    from tmlab.machine import Configuration

    mach = _load(args.machine)
    hooks = None
    if args.trace:
        out = sys.stdout
        hooks = Hooks(trace=lambda *row: out.write(trace_line(*row) + "\n"))
    res = run(mach, args.limit, hooks, Configuration.initial(mach, head=args.head), engine=args.engine)
    support = res.final.support()
    payload = {"outcome": res.outcome.value, "steps": res.steps, "state": res.final.state,
               "head": res.final.head, "support": list(support) if support else None,
               "nonblank": len(res.final.tape)}
    if res.undefined_at:
        payload["undefined_at"] = list(res.undefined_at)
    text = f"{res.outcome.value} after {res.steps} steps (state {res.final.state}, head {res.final.head})"
    if res.undefined_at:
        text += f"; no transition for {res.undefined_at}"
    if args.show_tape and support:
        text += "\n" + " ".join(res.final.window(support[0], support[1], mach.blank))
    _emit(args, text, payload)
    if res.outcome is Outcome.UNDEFINED:
        return 2
    return 0


def cmd_snapshot(args) -> int:
    mach = _load(args.machine)
    if args.every < 1:
        raise UsageError("--every must be positive")
    if args.decode_segments:
        from tmlab.friedman import decode_segments

        print("step\tN\ti\tl\tlmax\tword\twellformed")

        def emit(snap):
            v = decode_segments(mach, snap.config)
            print(f"{snap.step}\t{v.N}\t{v.i}\t{v.l}\t{v.lmax}\t{v.word or '-'}\t{int(v.wellformed)}")
    else:
        print("step\tstate\tpos\tsupport_lo\tsupport_hi" + ("\twindow" if args.window else ""))

        def emit(snap):
            print(snapshot_line(snap, args.window, mach.blank))

    res = run(mach, args.limit, Hooks(snapshot_every=args.every, on_snapshot=emit))
    print(f"# {res.outcome.value} after {res.steps} steps", file=sys.stderr)
    return 2 if res.outcome is Outcome.UNDEFINED else 0


PASSES = ("symbols", "states3", "states2b1", "states2-seeded", "states2-empty")


def _reduce(mach, name: str, base: int | None):
    from tmlab import transforms as t

    if name in ("symbols", "states2b1") and base is None:
        raise UsageError(f"--base is required for --pass {name}")
    if name == "symbols":
        return t.reduce_symbols(mach, base)
    if name == "states2b1":
        return t.reduce_states_2b1(mach, base)
    if name == "states3":
        return t.reduce_states_3(mach)
    if name == "states2-seeded":
        return t.reduce_states_2_seeded(mach)
    return t.reduce_states_2_empty(mach)


def cmd_reduce(args) -> int:
    mach = _load(args.input)
    try:
        rm = _reduce(mach, args.pass_name, args.base)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    save_machine(rm.machine, args.output, f"{args.pass_name} reduction of {args.input}")
    if args.emit_cert:
        rm.certificate.save(args.emit_cert)
    ok = rm.within_bounds()
    _emit(args, f"{args.pass_name}: {rm.bound_report()}" + ("" if ok else "  (bound exceeded)"),
          {"pass": args.pass_name, "states": rm.machine.n, "symbols": rm.machine.m,
           "bound_states": rm.claimed_bounds[0], "bound_symbols": rm.claimed_bounds[1], "within_bounds": ok})
    return 0


def cmd_verify(args) -> int:
    from tmlab.lab.verify import verify_simulation

    orig, red = _load(args.original), _load(args.reduced)
    cert_path = Path(args.cert)
    if not cert_path.is_file():
        raise UsageError(f"{args.cert}: file not found")
    cert = Certificate.load(cert_path)
    verdict = verify_simulation(orig, red, args.budget, certificate=cert)
    _emit(args, str(verdict), {"verdict": verdict.kind, "detail": verdict.detail,
                               "original_steps": verdict.original_steps, "reduced_steps": verdict.reduced_steps})
    return 0 if verdict.kind != "diverged" else 2


def cmd_nk(args) -> int:
    from tmlab.words import n_of_k

    try:
        res = n_of_k(args.k, args.max_len, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = str(res) + (f"\nwitness: {res.witness}" if args.witness else "")
    _emit(args, text, {"k": res.k, "value": res.value, "exact": res.exact,
                       **({"witness": res.witness} if args.witness else {})})
    return 0


def cmd_star(args) -> int:
    from tmlab.words import NOTES, blocks, satisfies_star

    word = args.word
    if not word.isdigit() or "0" in word:
        raise UsageError("words are written with the letters 1..9")
    verdict = satisfies_star(word)
    text = f"{word}: " + ("satisfies (*)" if verdict is True else f"violates (*) at (i, j) = {verdict}")
    note = NOTES.get(word)
    if note:
        text += f"\nnote: {note}"
    _emit(args, text, {"word": word, "satisfies": verdict is True,
                       "pair": None if verdict is True else list(verdict), "blocks": blocks(word),
                       **({"note": note} if note else {})})
    return 0


def cmd_milestones(args) -> int:
    from tmlab.friedman import FriedmanParams, generate, machine_milestones, reference_algorithm_milestones

    mach = generate(FriedmanParams(args.k, args.delta))
    ref = reference_algorithm_milestones(args.k, args.count)
    got, _ = machine_milestones(mach, args.count, limit=args.limit)
    agree = got.milestones == ref.milestones[: len(got.milestones)] and len(got.milestones) == len(ref.milestones)
    if args.format == "json":
        print(json.dumps({"k": args.k, "count": len(got.milestones), "agree": agree,
                          "milestones": [[m.N, m.word, m.lmax] for m in got.milestones]}))
    else:
        print("N\tword\tlmax\treference")
        for a, b in zip(got.milestones, ref.milestones):
            print(f"{a.N}\t{a.word}\t{a.lmax}\t{'ok' if a == b else f'{b.N} {b.word} {b.lmax}'}")
        print(f"{len(got.milestones)} milestones, {'all agree' if agree else 'MISMATCH'}")
    return 0 if agree else 2


def cmd_bb(args) -> int:
    from tmlab.lab.busybeaver import ClassTooLarge, bb_enumerate

    try:
        res = bb_enumerate(args.states, args.symbols, args.cutoff, jobs=args.jobs, limit=args.max_machines)
    except ClassTooLarge as exc:
        raise RuntimeFailure(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = (f"BB({args.states},{args.symbols}) champion: {res.champion_steps} steps "
            f"(machine #{res.champion_index}); {res.halting} halt, {res.exceeded} run past {args.cutoff}")
    if args.states == 2 and args.symbols == 2:
        text += ("\nnote: counts steps including the halting transition; the often-quoted 4 for this class "
                 "is the number of ones printed, not the step count")
    if args.show_champion and res.champion is not None:
        text += "\n" + serialize_machine(res.champion).rstrip()
    _emit(args, text, {"states": args.states, "symbols": args.symbols, "cutoff": args.cutoff,
                       "champion_steps": res.champion_steps, "champion_index": res.champion_index,
                       "halting": res.halting, "exceeded": res.exceeded})
    return 0


def cmd_ack(args) -> int:
    from tmlab.lab.ackermann import ackermann

    try:
        v = ackermann(args.f, args.c, args.bit_budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = f"A({args.f},{args.c}) = {v.value}" if v.exact else f"A({args.f},{args.c}): {v.overflow}"
    _emit(args, text, {"f": args.f, "c": args.c, "exact": v.exact,
                       "value": str(v.value) if v.exact else None,
                       "overflow": None if v.exact else str(v.overflow)})
    return 0


def cmd_frontier(args) -> int:
    from tmlab.lab.frontier import PRESETS, PUBLISHED_TOTALS, FrontierError, frontier_count, parse_impls

    try:
        impls = PRESETS[args.preset] if args.preset else parse_impls(args.impl)
        res = frontier_count(impls)
    except FrontierError as exc:
        raise UsageError(str(exc)) from exc
    if sum(b.count for b in res.bands) != res.total:
        raise AssertionError("band decomposition does not sum to the total")
    published = PUBLISHED_TOTALS.get(args.preset) if args.preset else None
    text = res.table()
    if published is not None:
        text += f"\npublished total {published}, computed {res.total}, delta {res.total - published:+d}"
    _emit(args, text, {"total": res.total, "published": published,
                       "bands": [[b.n_lo, b.n_hi, b.m_hi, b.count] for b in res.bands]})
    return 0


def cmd_estimate(args) -> int:
    from tmlab.transforms.estimates import estimate_substates, linear_in_k, search_machine_profile

    value = estimate_substates(search_machine_profile(args.k, args.b, args.l, args.delta))
    a, c = linear_in_k(args.b, args.l, args.delta)
    _emit(args, f"b={args.b} l={args.l}: {a}+{c}k substates = {value} at k={args.k}",
          {"b": args.b, "l": args.l, "k": args.k, "delta": args.delta, "constant": a, "per_k": c, "value": value})
    return 0


def cmd_corpus(args) -> int:
    from tmlab.lab.corpus import halting_corpus

    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    machines = halting_corpus(args.seed, args.count, args.max_steps)
    for i, m in enumerate(machines):
        save_machine(m, out / f"m{i:03d}.tm", f"seed {args.seed}, machine {i}")
    print(f"wrote {len(machines)} machines to {out}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tmlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version",
                   version=f"tmlab {__version__} (machine format {FORMAT_VERSION}, certificate format {CERT_VERSION})")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    sp = cmd("gen", cmd_gen, "generate the (*)-search machine")
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--delta", type=int, choices=(0, 1), default=0)
    sp.add_argument("-o", "--output")

    sp = cmd("run", cmd_run, "run a machine from the blank tape")
    sp.add_argument("machine")
    sp.add_argument("--limit", type=_nonneg, default=10**6)
    sp.add_argument("--head", type=int, default=0)
    sp.add_argument("--trace", action="store_true", help="print one TSV line per step")
    sp.add_argument("--show-tape", action="store_true")
    sp.add_argument("--engine", choices=("auto", "python", "numba"), default="auto")

    sp = cmd("snapshot", cmd_snapshot, "print periodic snapshots of a run")
    sp.add_argument("machine", nargs="?")
    sp.add_argument("--machine", dest="machine_opt")
    sp.add_argument("--every", type=_pos, default=1000)
    sp.add_argument("--limit", type=_nonneg, default=10**6)
    sp.add_argument("--window", action="store_true", help="append the non-blank tape window")
    sp.add_argument("--decode-segments", action="store_true")

    sp = cmd("reduce", cmd_reduce, "apply a reduction pass")
    sp.add_argument("--pass", dest="pass_name", choices=PASSES, required=True)
    sp.add_argument("--base", type=int)
    sp.add_argument("input")
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--emit-cert")

    sp = cmd("verify", cmd_verify, "co-simulate a machine and its reduction")
    sp.add_argument("original")
    sp.add_argument("reduced")
    sp.add_argument("--cert", required=True)
    sp.add_argument("--budget", type=_nonneg, default=10**4)

    sp = cmd("nk", cmd_nk, "longest (*)-word length n(k)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--jobs", type=_pos, default=1)

    sp = cmd("star", cmd_star, "check a word for (*)")
    sp.add_argument("word")

    sp = cmd("milestones", cmd_milestones, "compare the search machine with the word-level search")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--delta", type=int, choices=(0, 1), default=0)
    sp.add_argument("--count", type=_pos, default=50)
    sp.add_argument("--limit", type=_nonneg, default=10**9)

    sp = cmd("bb", cmd_bb, "exhaustive Busy Beaver search")
    sp.add_argument("--states", type=_pos, required=True)
    sp.add_argument("--symbols", type=_pos, required=True)
    sp.add_argument("--cutoff", type=_pos, default=1000)
    sp.add_argument("--jobs", type=_pos, default=1)
    sp.add_argument("--max-machines", type=_pos, default=50_000_000)
    sp.add_argument("--show-champion", action="store_true")

    sp = cmd("ack", cmd_ack, "Ackermann value under a bit budget")
    sp.add_argument("--f", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--bit-budget", type=_pos, default=10**6)

    sp = cmd("frontier", cmd_frontier, "count classes not settled by a set of machine sizes")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--preset", choices=("n3", "n4"))
    g.add_argument("--impl", help='comma-separated sizes, e.g. "2x1840,3x1080,276x2"')

    sp = cmd("estimate", cmd_estimate, "substate estimate for the symbol reduction of the search machine")
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--b", type=int, default=2)
    sp.add_argument("--l", type=int, default=3)
    sp.add_argument("--delta", type=int, choices=(0, 1), default=0)

    sp = cmd("corpus", cmd_corpus, "write a seeded corpus of quickly halting machines")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=_pos, default=100)
    sp.add_argument("--max-steps", type=_pos, default=200)
    sp.add_argument("-o", "--output", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    if args.command == "snapshot":
        args.machine = args.machine or args.machine_opt
        if not args.machine:
            print("tmlab snapshot: a machine file is required", file=sys.stderr)
            return 1
    try:
        return args.func(args)
    except (UsageError, ParseError, CertificateError, MachineError) as exc:
        print(f"tmlab {args.command}: {exc}", file=sys.stderr)
        return 1
    except RuntimeFailure as exc:
        print(f"tmlab {args.command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"tmlab {args.command}: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"tmlab {args.command}: internal error: {exc!r}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
