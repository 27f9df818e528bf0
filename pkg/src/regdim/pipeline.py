"""
Verification pipeline.

For one Ext module: build it, decompose it, verify the filtration, compute
its Betti table, and compare reg ≤ filtration bound ≤ dim ≤ n − i. Analyze
runs this for selected indices of one ideal; sweep runs it over a corpus.
"""
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Iterable, Optional, Union

from regdim.algebra.linalg import PrimeField
from regdim.algebra.monomials import MonomialIdeal
from regdim.corpus import CorpusSpec, enumerate_ideals
from regdim.exceptions import InputError, RegdimError, VerificationFailure
from regdim.filtration.betti import (
    betti_degree_range,
    koszul_betti,
    koszul_euler_characteristic,
    minimal_generator_counts,
    regularity,
    regularity_witness,
)
from regdim.filtration.stanley import (
    build_stanley_decomposition,
    counting_mismatches,
    face_summary,
    filtration_reg_bound,
    krull_dimension,
    verify_filtration,
)
from regdim.homology.cech import DEFAULT_FIELD
from regdim.homology.ext import DEFAULT_GROWTH_LIMIT, build_ext_module, hilbert_function, is_finite_length
from regdim.homology.taylor import DEFAULT_MAX_GENERATORS, oracle_mismatches
from regdim.ideal_format import format_ideal
from regdim.reports import (
    AnalysisReport,
    FailureWitness,
    HilbertEntry,
    IdealEcho,
    ModuleRecord,
    OracleMismatch,
    OracleStatus,
    StanleyEntry,
    SweepSummary,
)

logger = logging.getLogger("regdim_pipeline")

PROGRESS_INTERVAL = 500


def _oracle_status(module, max_generators: int) -> OracleStatus:
    ideal = module.ideal
    if len(ideal.gens) > max_generators:
        logger.warning(f"Taylor oracle skipped for {ideal}: {len(ideal.gens)} generators exceed {max_generators}")
        return OracleStatus(skipped_reason=f"{len(ideal.gens)} generators exceed the cap of {max_generators}")
    mismatches = oracle_mismatches(module, max_generators)
    return OracleStatus(
        checked=True,
        degrees_compared=len(module.box.extended(below=1).degrees()),
        mismatches=[
            OracleMismatch(index=module.index, degree=list(a), cech=found, taylor=expected)
            for a, found, expected in mismatches
        ],
    )


def verify_theorem(ideal: MonomialIdeal, i: int, field: PrimeField = DEFAULT_FIELD, oracle: bool = False,
                   growth_limit: int = DEFAULT_GROWTH_LIMIT,
                   max_generators: int = DEFAULT_MAX_GENERATORS) -> ModuleRecord:
    """
    Check reg(Ext^i) ≤ dim(Ext^i) ≤ n − i for one module, with every
    intermediate certificate.

    Args:
        ideal: Proper monomial ideal
        i: Ext index
        field: Coefficient field
        oracle: Also compare the Hilbert function with the Taylor oracle
        growth_limit: Shell-growth rounds for the Ext box
        max_generators: Taylor oracle generator cap

    Returns:
        ModuleRecord; inspect ``passed`` / ``failures()``

    Raises:
        InputError: for the unit ideal or i outside 0..n
        InvariantViolation: if an internal consistency check fails
    """
    module = build_ext_module(ideal, i, field, growth_limit)
    decomposition = build_stanley_decomposition(module)
    filtration = verify_filtration(decomposition, module)
    counting = counting_mismatches(decomposition)
    betti = koszul_betti(module)

    euler_ok = True
    for a in betti_degree_range(module):
        alternating = sum((-1) ** k * b for (k, c), b in betti.entries.items() if c == a)
        if alternating != koszul_euler_characteristic(module, a):
            euler_ok = False
            break

    reg = regularity(betti)
    witness = regularity_witness(betti)
    bound = filtration_reg_bound(decomposition)
    dim = krull_dimension(decomposition)
    top = ideal.n - i
    finite = not module.is_zero and is_finite_length(module)

    record = ModuleRecord(
        index=i,
        n=ideal.n,
        box_lower=list(module.box.lower),
        box_upper=list(module.box.upper),
        hilbert=[HilbertEntry(degree=list(a), dim=d) for a, d in hilbert_function(module)],
        stanley=[
            StanleyEntry(face=[j + 1 for j in face], degree=list(degree), count=count)
            for face, degree, count in face_summary(decomposition)
        ],
        filtration=filtration,
        counting_mismatches=[list(b) for b, _, _ in counting],
        betti=[(k, list(a), b) for k, a, b in betti.triples()],
        minimal_generators_consistent=minimal_generator_counts(module) == betti.row(0),
        euler_consistent=euler_ok,
        reg_exact=reg,
        reg_witness=(witness[0], list(witness[1])) if witness else None,
        reg_filtration_bound=bound,
        dim=dim,
        finite_length=finite,
        determinedness_checks=module.determinedness_checks,
    )
    if not module.is_zero:
        record.pass_theorem = reg is not None and dim is not None and reg <= dim
        record.pass_corollary = dim is not None and dim <= top
        record.pass_chain = None not in (reg, bound, dim) and reg <= bound <= dim <= top
        record.pass_finite_length = not finite or (reg is not None and reg <= 0)
    if oracle:
        record.oracle = _oracle_status(module, max_generators)

    if record.passed:
        logger.debug(f"Ext^{i} of {ideal}: reg {reg}, bound {bound}, dim {dim}")
    else:
        logger.error(f"Ext^{i} of {ideal} failed: {'; '.join(record.failures())}")
    return record


def _timed_verify(i: int, ideal: MonomialIdeal, field: PrimeField, oracle: bool, growth_limit: int,
                  max_generators: int) -> tuple[ModuleRecord, float]:
    started = time.perf_counter()
    record = verify_theorem(ideal, i, field, oracle, growth_limit, max_generators)
    return record, time.perf_counter() - started


def analyze_ideal(ideal: MonomialIdeal, indices: Optional[Iterable[int]] = None, field: PrimeField = DEFAULT_FIELD,
                  oracle: bool = False, jobs: int = 1, growth_limit: int = DEFAULT_GROWTH_LIMIT,
                  max_generators: int = DEFAULT_MAX_GENERATORS, timing: bool = False) -> AnalysisReport:
    """
    Run :func:`verify_theorem` for the requested Ext indices (default all).

    Raises:
        UnitIdealError: for the unit ideal
        InputError: for an index outside 0..n
    """
    ideal.require_proper()
    chosen = sorted(set(indices)) if indices is not None else list(range(ideal.n + 1))
    outside = [i for i in chosen if not 0 <= i <= ideal.n]
    if outside:
        raise InputError(f"Ext index {outside[0]} outside 0..{ideal.n}")
    logger.info(f"Analyzing {ideal} over GF({field.p}) for indices {chosen}")

    worker = partial(_timed_verify, ideal=ideal, field=field, oracle=oracle, growth_limit=growth_limit,
                     max_generators=max_generators)
    started = time.perf_counter()
    if jobs > 1 and len(chosen) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, chosen))
    else:
        results = [worker(i) for i in chosen]
    elapsed = time.perf_counter() - started

    records = [record for record, _ in results]
    checked = [record.oracle for record in records if record.oracle.checked]
    skipped = next((record.oracle.skipped_reason for record in records if record.oracle.skipped_reason), None)
    aggregate = OracleStatus(
        checked=bool(checked),
        skipped_reason=skipped,
        degrees_compared=sum(status.degrees_compared for status in checked),
        mismatches=[m for status in checked for m in status.mismatches],
    )
    report = AnalysisReport(
        ideal=IdealEcho.from_ideal(ideal),
        characteristic=field.p,
        indices=chosen,
        records=records,
        oracle=aggregate,
    )
    if timing:
        report.timing = {f"ext_{i}": round(seconds, 6) for i, (_, seconds) in zip(chosen, results)}
        report.timing["total"] = round(elapsed, 6)
    return report


def raise_for_failures(report: AnalysisReport) -> None:
    """
    Raises:
        VerificationFailure: naming the first failing module and its witness
    """
    for record in report.records:
        if not record.passed:
            raise VerificationFailure(
                f"Ext^{record.index} of {report.ideal.text}: {'; '.join(record.failures())}",
                witness=record.witness(),
            )


def _sweep_task(task: tuple[MonomialIdeal, int], field: PrimeField, oracle: bool, growth_limit: int,
                max_generators: int) -> tuple[Optional[ModuleRecord], Optional[str]]:
    ideal, i = task
    try:
        return verify_theorem(ideal, i, field, oracle, growth_limit, max_generators), None
    except RegdimError as e:
        logger.error(f"Ext^{i} of {ideal} raised {type(e).__name__}: {e}")
        return None, f"{type(e).__name__}: {e}"


def run_sweep(spec: CorpusSpec, field: PrimeField = DEFAULT_FIELD, oracle: bool = False, jobs: int = 1,
              growth_limit: int = DEFAULT_GROWTH_LIMIT, max_generators: int = DEFAULT_MAX_GENERATORS,
              replay_path: Optional[Union[str, Path]] = None) -> SweepSummary:
    """
    Verify every (ideal, i) pair of a corpus.

    Results are folded in corpus order whatever the worker count, so the
    summary is deterministic. Failures are written to ``replay_path``.

    Raises:
        InputError: if the corpus exceeds its bounds
    """
    ideals = list(enumerate_ideals(spec))
    tasks = [(ideal, i) for ideal in ideals for i in range(ideal.n + 1)]
    logger.info(f"Sweep over {len(ideals)} ideals, {len(tasks)} modules, GF({field.p}), jobs={jobs}")

    worker = partial(_sweep_task, field=field, oracle=oracle, growth_limit=growth_limit,
                     max_generators=max_generators)
    summary = SweepSummary(corpus=spec.model_dump(mode="json"), characteristic=field.p, ideals=len(ideals))
    if jobs > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        outcomes = pool.map(worker, tasks, chunksize=max(1, len(tasks) // (jobs * 8)))
    else:
        pool = None
        outcomes = map(worker, tasks)
    try:
        for count, ((ideal, i), (record, error)) in enumerate(zip(tasks, outcomes), start=1):
            summary.modules_checked += 1
            if record is not None:
                if not record.is_zero:
                    summary.nonzero_modules += 1
                if record.equality:
                    summary.equality_cases += 1
                if record.oracle.checked:
                    summary.oracle_checked += 1
                elif record.oracle.skipped_reason:
                    summary.oracle_skipped += 1
            messages = [error] if error else record.failures()
            if messages:
                summary.failures += 1
                summary.witnesses.append(FailureWitness(
                    ideal=IdealEcho.from_ideal(ideal),
                    index=i,
                    messages=messages,
                    witness=record.witness() if record is not None else {},
                ))
            if count % PROGRESS_INTERVAL == 0:
                logger.info(f"Checked {count}/{len(tasks)} modules, {summary.failures} failures")
    finally:
        if pool is not None:
            pool.shutdown()

    if summary.failures:
        logger.error(f"Sweep found {summary.failures} failing modules")
        if replay_path is not None:
            write_replay(summary, replay_path)
    else:
        logger.info(f"Sweep passed: {summary.modules_checked} modules, {summary.equality_cases} with reg = dim")
    return summary


def write_replay(summary: SweepSummary, path: Union[str, Path]) -> Path:
    """Write failing ideals in the ideal text format, ready for ``regdim analyze``."""
    entries = [
        {
            "ideal_file": format_ideal(MonomialIdeal(n=w.ideal.n, gens=tuple(tuple(g) for g in w.ideal.generators))),
            "index": w.index,
            "messages": w.messages,
            "witness": w.witness,
        }
        for w in summary.witnesses
    ]
    payload = {"schema_version": summary.schema_version, "characteristic": summary.characteristic,
               "corpus": summary.corpus, "failures": entries}
    path = Path(path)
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    logger.info(f"Replay witnesses written to {path}")
    return path


