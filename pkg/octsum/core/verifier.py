"""Bounded verification runs producing deterministic certificates."""

import hashlib
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional

from ..config import settings
from ..models.certificate import Certificate, CertificateVerdict, ClaimFailure, SampleWitness
from ..models.escalation import NodeStatus
from ..schemas.theorem_schema import (
    CANDIDATE_TRIPLES,
    CRITERION_INTEGERS,
    QUATERNARY_TRUANTS,
    RESULT_LABELS,
    SHALLOW_TRUANTS,
    TheoremId,
)
from ..utils.error_utils import ClaimFailed, InvalidInputError, UnknownTheoremError
from ..utils.log_utils import log_verification, verify_logger
from .cache import ResultCache
from .escalator import criterion_set, escalate
from .octsum import check_bound, representable_table
from .pipelines import get_pipeline

SIXTY_DEPTH = 5
SIXTY_MIN_BOUND = 60


def parse_theorem_id(value: str) -> TheoremId:
    """Resolve a theorem id or its catalogue label (T2.1, L3.5-7, ...; case-insensitive)."""
    try:
        return TheoremId(value)
    except ValueError:
        pass
    by_label = {label.lower(): theorem_id for theorem_id, label in RESULT_LABELS.items()}
    key = value.strip().lower()
    if key in by_label:
        return by_label[key]
    if key == "l3.5":
        raise UnknownTheoremError(f"{value!r} needs the extra coefficient, e.g. L3.5-7")
    raise UnknownTheoremError(
        f"unknown theorem id {value!r}; expected one of {[t.value for t in TheoremId]} or {list(RESULT_LABELS.values())}"
    )


def _sample_points(bound: int) -> List[int]:
    stride = max(1, bound // settings.SAMPLE_WITNESSES)
    return list(range(stride, bound + 1, stride))[:settings.SAMPLE_WITNESSES]


class _Run:
    """Claim bookkeeping for one verification run."""

    def __init__(self):
        self.claims: Counter = Counter()
        self.failure: Optional[ClaimFailure] = None

    def check(self, n: int, condition: bool, claim: str, detail: str) -> bool:
        self.claims[claim] += 1
        if not condition and self.failure is None:
            self.failure = ClaimFailure(n=n, claim=claim, detail=detail)
        return condition


def _verify_sum(theorem_id: TheoremId, bound: int, cache: ResultCache) -> Certificate:
    pipeline = get_pipeline(theorem_id)
    s = pipeline.sum
    expected = set(pipeline.expected_exceptions)
    table = representable_table(s, bound)
    exceptions = [n for n in range(1, bound + 1) if not table[n]]
    sample_at = set(_sample_points(bound))
    samples: List[SampleWitness] = []
    run = _Run()

    for n in range(0, bound + 1):
        if n >= 1 and not run.check(
            n, bool(table[n]) == (n not in expected), "exceptional_set",
            f"table says {'represented' if table[n] else 'not represented'}",
        ):
            break

        if n in expected:
            if not run.check(n, cache.represents(s, n) is None, "exceptional_value", "expected exception is represented"):
                break
            continue

        if pipeline.is_direct(n):
            witness = cache.represents(s, n)
            if not run.check(n, witness is not None, "direct_search", f"{n} not represented by {s}"):
                break
        else:
            try:
                witness = pipeline.witness(n)
            except ClaimFailed as e:
                run.check(n, False, e.claim, e.detail)
                break
            if not run.check(n, bool(table[n]), "pipeline_direct_agreement", "construction succeeded where the table says not represented"):
                break

        if n in sample_at:
            samples.append(SampleWitness(n=n, coeffs=s.coeffs, xs=witness.xs))

    claims = run.claims + pipeline.claims
    return Certificate(
        theorem_id=theorem_id.value,
        label=RESULT_LABELS[theorem_id],
        coeffs=s.coeffs,
        bound=bound,
        verdict=CertificateVerdict.PASS if run.failure is None else CertificateVerdict.FAIL,
        failure=run.failure,
        expected_exceptions=sorted(expected),
        exceptions=exceptions,
        direct_threshold=pipeline.threshold,
        claims_checked=dict(sorted(claims.items())),
        sample_witnesses=samples,
        notes=list(pipeline.notes),
        engine_version=settings.ENGINE_VERSION,
    )


def _verify_sixty(bound: int) -> Certificate:
    """Rebuild the escalation to five coefficients and check every table it must reproduce."""
    tree_bound = max(bound, SIXTY_MIN_BOUND)
    tree = escalate(SIXTY_DEPTH, tree_bound)
    run = _Run()
    nodes = {node.sum.coeffs: node for node in tree.walk()}

    for coeffs, value in sorted(SHALLOW_TRUANTS.items()):
        node = nodes.get(coeffs)
        run.check(value, node is not None and node.truant_value == value, "shallow_truant",
                  f"{coeffs} should have truant {value}, got {None if node is None else node.truant_value}")

    quaternary = {c: node for c, node in nodes.items() if len(c) == 4}
    universal = sorted(c for c, node in quaternary.items() if node.status == NodeStatus.BOUNDED_UNIVERSAL)
    truants = {c: node.truant_value for c, node in quaternary.items() if node.status == NodeStatus.TRUANT}
    candidates = sorted((1,) + triple for triple in CANDIDATE_TRIPLES)
    run.check(0, universal == candidates, "candidate_table",
              f"{len(universal)} bounded-universal quadruples, expected {len(candidates)}")
    run.check(max(QUATERNARY_TRUANTS.values()), truants == QUATERNARY_TRUANTS, "quaternary_truants",
              f"truant quadruples {sorted(truants.items())}")

    quinary = [node for c, node in nodes.items() if len(c) == SIXTY_DEPTH]
    stuck = sorted(node.sum.coeffs for node in quinary if node.status != NodeStatus.BOUNDED_UNIVERSAL)
    run.check(0, not stuck, "quinary_universal", f"quinary sums with truants: {stuck}")

    found = criterion_set(tree)
    run.check(max(CRITERION_INTEGERS), tuple(found) == CRITERION_INTEGERS, "criterion_set", f"criterion set {found}")

    return Certificate(
        theorem_id=TheoremId.SIXTY.value,
        label=RESULT_LABELS[TheoremId.SIXTY],
        coeffs=(),
        bound=tree_bound,
        verdict=CertificateVerdict.PASS if run.failure is None else CertificateVerdict.FAIL,
        failure=run.failure,
        exceptions=found,
        claims_checked=dict(sorted(run.claims.items())),
        notes=[f"escalation to {SIXTY_DEPTH} coefficients, {len(nodes)} nodes"],
        engine_version=settings.ENGINE_VERSION,
    )


def verify_theorem(theorem_id: TheoremId, bound: Optional[int] = None, cache: Optional[ResultCache] = None) -> Certificate:
    """
    Check every claim of one result for all n up to the bound.

    Below a construction's threshold n is checked by direct search, above it
    the construction must succeed; expected exceptions must be missed and
    nothing else. The first failing claim is recorded with its n.

    Args:
        theorem_id: Result to verify
        bound: Largest n checked (settings.DEFAULT_BOUND when None)
        cache: Result cache for direct searches (a fresh one from settings.CACHE_PATH when None)

    Returns:
        Certificate of the run
    """
    if not isinstance(theorem_id, TheoremId):
        theorem_id = parse_theorem_id(str(theorem_id))
    bound = settings.DEFAULT_BOUND if bound is None else bound
    if bound < 1:
        raise InvalidInputError(f"bound must be positive, got {bound}")
    check_bound(bound)

    own_cache = cache is None
    if own_cache:
        cache = ResultCache(path=settings.CACHE_PATH)

    started = time.time()
    if theorem_id == TheoremId.SIXTY:
        certificate = _verify_sixty(bound)
    else:
        certificate = _verify_sum(theorem_id, bound, cache)
    certificate.elapsed = time.time() - started

    if own_cache:
        cache.save()

    details: Dict[str, Any] = {"cache": cache.stats()}
    if certificate.failure is not None:
        details["failure"] = certificate.failure.model_dump()
    log_verification(verify_logger, theorem_id.value, bound, certificate.verdict.value, certificate.elapsed, details)
    return certificate


def _verify_one(args) -> Certificate:
    theorem_id, bound = args
    return verify_theorem(theorem_id, bound, ResultCache())


def verify_all(bound: Optional[int] = None, workers: Optional[int] = None) -> List[Certificate]:
    """
    Verify every theorem id, in catalogue order.

    Args:
        bound: Largest n checked (settings.DEFAULT_BOUND when None)
        workers: Process count (settings.WORKERS when None); 1 runs in-process with a shared cache

    Returns:
        One certificate per theorem id
    """
    bound = settings.DEFAULT_BOUND if bound is None else bound
    workers = settings.WORKERS if workers is None else workers
    ids = list(TheoremId)

    if workers <= 1:
        cache = ResultCache(path=settings.CACHE_PATH)
        certificates = [verify_theorem(theorem_id, bound, cache) for theorem_id in ids]
        cache.save()
        return certificates

    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_verify_one, [(theorem_id, bound) for theorem_id in ids]))


def certificate_json(certificate: Certificate) -> str:
    """Canonical certificate text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(certificate.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def certificate_digest(certificate: Certificate) -> str:
    return hashlib.sha256(certificate_json(certificate).encode("utf-8")).hexdigest()
