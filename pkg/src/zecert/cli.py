"""Command-line front end.

Four commands: check a document, reproduce a named result, verify a
saved certificate or report, synthesize a channel spec from a
subspace.  Output is either human-readable text or newline-delimited
JSON records with sorted keys; equal configurations produce
byte-identical structured output because budgets are converted to
deterministic work units, never measured wall time.

Exit codes: 0 all checks decided, 2 something UNDECIDED, 1 a failed
check or a certificate that does not re-verify, 64 usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import constructions as catalog
from . import gaussian as gaussian_mod
from . import io as zio
from . import zeroerr
from .certificates import Certificate, dec_matrix, verify_certificate
from .channel import KrausChannel, choi_rank, noncommutative_graph
from .matrices import QMatrix, trace
from .rank1 import is_transitive
from .scalars import format_scalar
from .subspace import OperatorSubspace

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 64


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by all commands.

    budget_ms is converted into deterministic iteration and tick
    counts; nothing reads the clock, so equal configurations yield
    byte-identical structured output."""

    seed: int = 0
    budget_ms: int = 30000
    max_denominator: int = 10**6
    format: str = "text"
    verbosity: int = 0
    deep: bool = False

    def search_budget(self) -> zeroerr.SearchBudget:
        iterations = max(4, min(200, self.budget_ms // 750))
        minor = max(200, self.budget_ms * 20 // 3)
        return zeroerr.SearchBudget(
            seed=self.seed,
            iterations=iterations,
            max_denominator=self.max_denominator,
            minor_budget=minor,
        )


class Reporter:
    """Ordered check records plus the worst outcome seen."""

    def __init__(self, config: RunConfig, stream=None):
        self.config = config
        self.stream = stream or sys.stdout
        self.index = 0
        self.failed = False
        self.undecided = False

    def emit(self, name: str, outcome: str, **fields):
        # outcome: pass | fail | undecided | skipped | info
        self.index += 1
        if outcome == "fail":
            self.failed = True
        if outcome == "undecided":
            self.undecided = True
        record = {"check": self.index, "name": name, "outcome": outcome}
        record.update(fields)
        if self.config.format == "structured":
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            detail = ""
            extras = {
                k: v for k, v in fields.items()
                if self.config.verbosity > 0 or k in ("value", "status", "verdict", "reason")
            }
            if extras:
                detail = "  " + ", ".join(f"{k}={v}" for k, v in sorted(extras.items()))
            self.stream.write(f"[{outcome.upper():>9}] {name}{detail}\n")

    def exit_code(self) -> int:
        if self.failed:
            return EXIT_FAILED
        if self.undecided:
            return EXIT_UNDECIDED
        return EXIT_OK


def _verdict_fields(v: zeroerr.PositivityVerdict) -> dict:
    fields = {"status": v.status}
    if v.certificate is not None:
        fields["strategy"] = v.certificate.strategy
        fields["verdict"] = v.certificate.verdict
    if v.witness is not None:
        phi, psi = v.witness
        fields["witness_phi"] = [format_scalar(x) for x in phi]
        fields["witness_psi"] = [format_scalar(x) for x in psi]
    return fields


def _emit_verdict(rep: Reporter, name: str, v: zeroerr.PositivityVerdict):
    if v.status == zeroerr.UNDECIDED:
        rep.emit(name, "undecided", **_verdict_fields(v))
        return
    if v.certificate is not None and not verify_certificate(v.certificate):
        rep.emit(name, "fail", reason="certificate failed re-verification")
        return
    rep.emit(name, "pass", **_verdict_fields(v))


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def _check_subspace(doc: dict, rep: Reporter) -> None:
    S = zio.subspace_from_doc(doc)
    rep.emit("subspace.ambient", "info", value=S.ambient)
    rep.emit("subspace.dim", "info", value=S.dim)
    symmetric = S.is_symmetric()
    unital = S.contains_identity()
    rep.emit("subspace.symmetric", "pass" if symmetric else "info", value=symmetric)
    rep.emit("subspace.unital", "pass" if unital else "info", value=unital)
    cert = is_transitive(S, **rep.config.search_budget().transitivity_kwargs())
    if cert.verdict == "UNDECIDED":
        rep.emit("subspace.transitivity", "undecided", verdict=cert.verdict,
                 strategy=cert.strategy)
        return
    if not verify_certificate(cert):
        rep.emit("subspace.transitivity", "fail",
                 reason="certificate failed re-verification")
        return
    rep.emit("subspace.transitivity", "pass", verdict=cert.verdict,
             strategy=cert.strategy)
    if symmetric and unital:
        budget = rep.config.search_budget()
        _emit_verdict(rep, "subspace.cbar0", zeroerr.cbar0_positive(S, budget))


def _check_channel(doc: dict, rep: Reporter) -> None:
    n, b, ops = zio.channel_raw_from_doc(doc)
    try:
        ch = KrausChannel(n, b, ops)
    except ValueError as exc:
        rep.emit("channel.validity", "fail", value=False, reason=str(exc))
        return
    rep.emit("channel.validity", "pass", value=True)
    G = noncommutative_graph(ch)
    rep.emit("channel.graph_dim", "info", value=G.dim)
    rep.emit("channel.choi_rank", "info", value=choi_rank(ch))
    ok = G.is_noncommutative_graph()
    rep.emit("channel.graph_symmetric_unital", "pass" if ok else "fail", value=ok)
    budget = rep.config.search_budget()
    r = zeroerr.ri2_classify(ch, budget)
    _emit_verdict(rep, "channel.cbar0", r.cbar0)
    _emit_verdict(rep, "channel.qbar0", r.qbar0)
    outcome = "undecided" if r.value == zeroerr.UNDECIDED else "pass"
    rep.emit("channel.ri2", outcome, value=str(r.value), lower=r.lower, upper=r.upper)


def _check_gaussian(doc: dict, rep: Reporter) -> None:
    spec = zio.gaussian_from_doc(doc)
    valid = gaussian_mod.validate(spec)
    rep.emit("gaussian.validity", "pass" if valid else "fail", value=valid)
    if not valid:
        return
    r = gaussian_mod.classify_zero_error(spec)
    rep.emit("gaussian.cbar0", "pass", value=r["cbar0"])
    rep.emit("gaussian.qbar0", "pass", value=r["qbar0"])
    rep.emit("gaussian.kernel_dim", "info", value=r["kernel_dim"])


def cmd_check(path: str, config: RunConfig, stream=None) -> int:
    rep = Reporter(config, stream)
    try:
        doc = zio.load_doc(path)
        kind = doc.get("kind")
        if kind == "subspace":
            _check_subspace(doc, rep)
        elif kind == "channel":
            _check_channel(doc, rep)
        elif kind == "gaussian":
            _check_gaussian(doc, rep)
        else:
            print(f"check does not handle kind {kind!r}", file=sys.stderr)
            return EXIT_USAGE
    except zio.FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return rep.exit_code()


# ---------------------------------------------------------------------------
# reproduce
# ---------------------------------------------------------------------------


def _expect(rep: Reporter, name: str, ok: bool, **fields):
    rep.emit(name, "pass" if ok else "fail", **fields)


def _reproduce_theorem1(rep: Reporter) -> None:
    L = catalog.L_theorem1()
    _expect(rep, "graph.symmetric", L.is_symmetric())
    _expect(rep, "graph.unital", L.contains_identity())
    _expect(rep, "graph.dim", L.dim == 8, value=L.dim)
    cert = is_transitive(L)
    _expect(rep, "graph.transitive", cert.verdict == "TRANSITIVE"
            and verify_certificate(cert), strategy=cert.strategy)
    tensor_cert = zeroerr.tensor_cbar0_producer(L, L)()
    A = dec_matrix(tensor_cert.evidence["a"])
    F = dec_matrix(tensor_cert.evidence["f"])
    basis = L.basis()
    for i, X in enumerate(basis):
        for j, Y in enumerate(basis):
            val = trace(F @ X @ A @ Y.transpose())
            _expect(rep, f"tensor.pair_check[{i},{j}]", val.is_zero(),
                    value=format_scalar(val))
    _expect(rep, "tensor.not_transitive", tensor_cert.verdict == "NOT_TRANSITIVE"
            and verify_certificate(tensor_cert), strategy=tensor_cert.strategy)
    ch = catalog.theorem1_channel()
    report = zeroerr.superactivation_check(ch, ch, rep.config.search_budget())
    _expect(rep, "corollary.classification", report.kind == zeroerr.CLASSICAL,
            value=report.kind)
    tc, _ = report.tensor
    _expect(rep, "corollary.tensor_witness", tc.witness is not None
            and verify_certificate(tc.certificate))


def _reproduce_theorem2(rep: Reporter) -> None:
    L1, L2 = catalog.L1_L2()
    _expect(rep, "graph1.dim", L1.dim == 23, value=L1.dim)
    _expect(rep, "graph2.dim", L2.dim == 23, value=L2.dim)
    for name, G in (("graph1", L1), ("graph2", L2)):
        cert = is_transitive(G)
        _expect(rep, f"{name}.transitive", cert.verdict == "TRANSITIVE"
                and verify_certificate(cert), strategy=cert.strategy)
    pv = catalog.theorem2_vectors()
    b1, b2 = L1.basis(), L2.basis()
    n2 = L2.ambient
    for i, M1 in enumerate(b1):
        for j, M2 in enumerate(b2):
            cross = zeroerr.tensor_sandwich(pv.psi, M1, M2, pv.phi, n2)
            bal1 = zeroerr.tensor_sandwich(pv.phi, M1, M2, pv.phi, n2)
            bal2 = zeroerr.tensor_sandwich(pv.psi, M1, M2, pv.psi, n2)
            _expect(rep, f"pair[{i},{j}]", cross.is_zero() and bal1 == bal2)
    ok, pairs = zeroerr.qbar0_witness_check_pairs(L1, L2, pv.phi, pv.psi)
    _expect(rep, "all_pairs", ok and pairs == 529, value=pairs)


def _reproduce_extreme(rep: Reporter) -> None:
    ch1, ch2 = catalog.extreme_pair()
    for name, ch, G in (("channel1", ch1, catalog.L1_L2()[0]),
                        ("channel2", ch2, catalog.L1_L2()[1])):
        _expect(rep, f"{name}.dims", ch.dim_in == 8, value=ch.dim_in)
        _expect(rep, f"{name}.choi_rank", choi_rank(ch) == 5, value=choi_rank(ch))
        _expect(rep, f"{name}.graph_matches", noncommutative_graph(ch) == G)
    spec = catalog.synthesize(catalog.L1_L2()[0])
    _expect(rep, "output_bound", spec.output_bound <= 40, value=spec.output_bound)
    report = zeroerr.superactivation_check(ch1, ch2, rep.config.search_budget())
    _expect(rep, "classification", report.kind == zeroerr.EXTREME, value=report.kind)
    tc, tq = report.tensor
    _expect(rep, "tensor.qbar0", tq.status == zeroerr.POSITIVE
            and verify_certificate(tq.certificate),
            pair_checks=tq.certificate.budget.get("pair_checks"))
    for i, (c, q) in enumerate(report.components, start=1):
        _expect(rep, f"component{i}.cbar0_zero", c.status == zeroerr.ZERO)


def _reproduce_lemma6(rep: Reporter) -> None:
    N, M = catalog.N_and_M()
    _expect(rep, "N.dim", N.dim == 9, value=N.dim)
    _expect(rep, "M.dim", M.dim == 7, value=M.dim)
    from .rank1 import DiagonalParametrization, staircase_certificate

    for name, S in (("N", N), ("N_hat", N.schur_map(catalog.T_shur()))):
        P = DiagonalParametrization.from_generators(S.basis())
        cert = staircase_certificate(P)
        _expect(rep, f"{name}.staircase", cert.verdict == "NO_RANK_ONE"
                and verify_certificate(cert))
    units = [QMatrix.unvec([1 if k == t else 0 for k in range(16)], 4, 4)
             for t in range(16)]
    count = 0
    ok = True
    for A in units:
        for B in units:
            lhs = trace(catalog.shur_hat(A) @ catalog.shur_hat(B))
            rhs = trace(A @ B)
            ok = ok and lhs == rhs
            count += 1
    _expect(rep, "pairing_identity", ok and count == 256, pairs=count)


def _reproduce_remark1(rep: Reporter) -> None:
    R = catalog.remark1_subspace()
    analysis = zeroerr.commutant_analysis(R)
    _expect(rep, "commutant.dim", analysis.dim == 1, value=analysis.dim)
    v = zeroerr.qbar0_positive(R, rep.config.search_budget())
    _expect(rep, "qbar0.positive", v.status == zeroerr.POSITIVE, status=v.status)
    if v.witness is not None:
        phi, psi = v.witness
        _expect(rep, "qbar0.witness_check",
                zeroerr.qbar0_witness_check(R, phi, psi),
                witness_phi=[format_scalar(x) for x in phi],
                witness_psi=[format_scalar(x) for x in psi])
    else:
        rep.emit("qbar0.witness_check", "fail", reason="no witness extracted")


def _reproduce_l0(rep: Reporter) -> None:
    from .rank1 import tensor_nontransitivity

    L0 = catalog.L0()
    L0p = catalog.L0_perp()
    _expect(rep, "L0.dim", L0.dim == 8, value=L0.dim)
    _expect(rep, "L0.unital", L0.contains_identity())
    _expect(rep, "L0.nonsymmetric", not L0.is_symmetric())
    _expect(rep, "perp.matches", L0.bilinear_perp() == L0p)
    for name, S in (("L0", L0), ("perp", L0p)):
        cert = is_transitive(S)
        _expect(rep, f"{name}.transitive", cert.verdict == "TRANSITIVE"
                and verify_certificate(cert), strategy=cert.strategy)
    pv = catalog.theorem2_vectors()
    A = QMatrix.unvec(list(pv.u), 4, 4)
    F = QMatrix.unvec(list(pv.v), 4, 4).transpose()
    for name, S in (("L0", L0), ("perp", L0p)):
        cert = tensor_nontransitivity(S, S, A, F)
        _expect(rep, f"{name}.tensor_not_transitive",
                cert.verdict == "NOT_TRANSITIVE" and verify_certificate(cert),
                pair_checks=cert.budget.get("pair_checks"))


def _reproduce_corollary_symmetric(rep: Reporter) -> None:
    bundle = catalog.symmetric_example()
    G = bundle.graph
    book = bundle.bookkeeping
    _expect(rep, "graph.dim", G.dim == 174, value=G.dim)
    _expect(rep, "dims.input", book["input_dim"] == 16, value=book["input_dim"])
    _expect(rep, "dims.environment", book["reported_environment_dim"] == 10,
            value=book["reported_environment_dim"])
    _expect(rep, "dims.output_bound", book["reported_output_bound"] <= 40,
            value=book["reported_output_bound"])
    cert = is_transitive(G)
    _expect(rep, "graph.transitive", cert.verdict == "TRANSITIVE"
            and verify_certificate(cert), strategy=cert.strategy)
    if not rep.config.deep:
        rep.emit("tensor.qbar0_pairs", "skipped",
                 reason="30276 generator pairs; run with --deep")
        return
    registered = zeroerr.tensor_qbar0_witness(G, G)
    if registered is None:
        rep.emit("tensor.qbar0_pairs", "fail", reason="no registered witness")
        return
    _, _, phi, psi = registered
    ok, pairs = zeroerr.qbar0_witness_check_pairs(G, G, phi, psi)
    _expect(rep, "tensor.qbar0_pairs", ok and pairs == 174 * 174, pairs=pairs)
    report = zeroerr.superactivation_check(
        bundle.channel, bundle.channel, rep.config.search_budget()
    )
    _expect(rep, "classification", report.kind == zeroerr.EXTREME,
            value=report.kind)


def _reproduce_gaussian_demo(rep: Reporter) -> None:
    from fractions import Fraction

    half = Fraction(1, 2)
    ident = QMatrix.identity(2)
    pd = gaussian_mod.GaussianSpec(1, 1, ident, (0, 0), QMatrix.diag([half, half]))
    degenerate = gaussian_mod.GaussianSpec(1, 1, ident, (0, 0), QMatrix.diag([0, 3]))
    ideal = gaussian_mod.GaussianSpec(1, 1, ident, (0, 0), QMatrix.zeros(2))
    expected = [
        ("positive_definite", pd, "ZERO", "ZERO"),
        ("rank_one_kernel", degenerate, "POSITIVE_INFINITE", "ZERO"),
        ("zero_noise", ideal, "POSITIVE_INFINITE", "POSITIVE_INFINITE"),
    ]
    for name, spec, want_c, want_q in expected:
        _expect(rep, f"{name}.valid", gaussian_mod.validate(spec))
        r = gaussian_mod.classify_zero_error(spec)
        _expect(rep, f"{name}.cbar0", r["cbar0"] == want_c, value=r["cbar0"])
        _expect(rep, f"{name}.qbar0", r["qbar0"] == want_q, value=r["qbar0"])
    record = gaussian_mod.gaussian_nonsuperactivation(pd, ideal)
    _expect(rep, "nonsuperactivation", record["superactivation_possible"] is False,
            kernel_dims=record["kernel_dims"])


_REPRODUCTIONS = {
    "theorem1": _reproduce_theorem1,
    "theorem2": _reproduce_theorem2,
    "extreme": _reproduce_extreme,
    "lemma6": _reproduce_lemma6,
    "remark1": _reproduce_remark1,
    "l0": _reproduce_l0,
    "corollary-symmetric": _reproduce_corollary_symmetric,
    "gaussian-demo": _reproduce_gaussian_demo,
}


def cmd_reproduce(name: str, config: RunConfig, stream=None) -> int:
    fn = _REPRODUCTIONS.get(name)
    if fn is None:
        known = ", ".join(sorted(_REPRODUCTIONS))
        print(f"unknown reproduction {name!r}; known: {known}", file=sys.stderr)
        return EXIT_USAGE
    rep = Reporter(config, stream)
    fn(rep)
    # a reproduction must decide everything it does not explicitly skip
    if rep.undecided:
        return EXIT_FAILED
    return rep.exit_code()


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _verify_record(record) -> bool:
    if not isinstance(record, dict):
        raise zio.FormatError("record must be an object")
    kind = record.get("kind")
    if kind == "certificate":
        try:
            cert = Certificate.from_record(record)
        except (KeyError, ValueError, TypeError) as exc:
            raise zio.FormatError(f"bad certificate: {exc}") from None
        return verify_certificate(cert)
    if kind == "positivity_verdict":
        cert = record.get("certificate")
        ok = True
        if cert is not None:
            ok = _verify_record(cert)
        return ok
    if kind == "superactivation_report":
        parts = []
        for pair in record.get("components", []):
            parts.extend(pair)
        parts.extend(record.get("tensor", []))
        return all(_verify_record(p) for p in parts)
    raise zio.FormatError(f"verify does not handle kind {kind!r}")


def cmd_verify(path: str, config: RunConfig, stream=None) -> int:
    del config
    try:
        record = zio.load_doc(path)
        ok = _verify_record(record)
    except zio.FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("verified" if ok else "FAILED", file=stream or sys.stdout)
    return EXIT_OK if ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# synthesize
# ---------------------------------------------------------------------------


def cmd_synthesize(path: str, config: RunConfig, out: str | None = None,
                   stream=None) -> int:
    rep = Reporter(config, stream)
    try:
        doc = zio.load_doc(path)
        if doc.get("kind") != "subspace":
            print("synthesize expects a subspace file", file=sys.stderr)
            return EXIT_USAGE
        L = zio.subspace_from_doc(doc)
    except zio.FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not L.is_symmetric():
        print("precondition failed: L-cond (the subspace must be symmetric)",
              file=sys.stderr)
        return EXIT_FAILED
    if not L.contains_identity():
        print("precondition failed: L-cond (the subspace must contain the "
              "unit matrix)", file=sys.stderr)
        return EXIT_FAILED
    spec = catalog.synthesize(L)
    rep.emit("spec.dims", "info", n=spec.n, d=spec.d, m=spec.m,
             output_bound=spec.output_bound)
    ch = catalog.exact_channel(spec)
    _expect(rep, "channel.graph_equality", noncommutative_graph(ch) == L)
    _expect(rep, "channel.choi_rank", choi_rank(ch) == spec.m,
            value=choi_rank(ch))
    dest = out or (path[:-5] if path.endswith(".json") else path) + ".spec.json"
    zio.save_doc(zio.pseudo_diagonal_to_doc(spec), dest)
    rep.emit("spec.written", "info", path=dest)
    return rep.exit_code()


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zecert",
        description="exact zero-error capacity workbench",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget-ms", type=int, default=30000,
                        help="search budget, mapped to deterministic work units")
    parser.add_argument("--max-denominator", type=int, default=10**6)
    parser.add_argument("--format", choices=("text", "structured"),
                        default="text")
    parser.add_argument("--deep", action="store_true",
                        help="run the heavy exact tensor checks")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", help="run all checks a document supports")
    p.add_argument("path")
    p = sub.add_parser("reproduce", help="machine-check a named result")
    p.add_argument("name")
    p = sub.add_parser("verify", help="re-verify a saved certificate or report")
    p.add_argument("path")
    p = sub.add_parser("synthesize", help="emit a channel spec realizing a graph")
    p.add_argument("path")
    p.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; the contract wants 64
        return EXIT_USAGE if exc.code else EXIT_OK
    config = RunConfig(
        seed=args.seed,
        budget_ms=args.budget_ms,
        max_denominator=args.max_denominator,
        format=args.format,
        verbosity=args.verbose,
        deep=args.deep,
    )
    if args.command == "check":
        return cmd_check(args.path, config)
    if args.command == "reproduce":
        return cmd_reproduce(args.name, config)
    if args.command == "verify":
        return cmd_verify(args.path, config)
    if args.command == "synthesize":
        return cmd_synthesize(args.path, config, out=args.out)
    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
