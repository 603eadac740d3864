"""Truants, the escalation tree, the universality criterion and the classifier."""

import json
import time
from typing import List, Optional, Set

import numpy as np

from ..config import settings
from ..models.escalation import ClassificationReport, EscalationNode, NodeStatus, Verdict
from ..models.octsum import OctSum
from ..schemas.report_schemas import QuaternaryTable
from ..schemas.theorem_schema import CRITERION_INTEGERS, provenance_for
from ..utils.error_utils import (
    CriterionContradictionError,
    InvalidInputError,
    ShallowTreeError,
    WitnessValidationError,
)
from ..utils.log_utils import escalation_logger, log_escalation, log_scan
from .octsum import check_bound, exceptions_up_to, extend_table, oct_values_array, represents, representable_table

CRITERION_MIN_DEPTH = 5
CRITERION_MIN_BOUND = 60


def _first_missing(table: np.ndarray) -> Optional[int]:
    missing = np.flatnonzero(~table[1:])
    return int(missing[0]) + 1 if len(missing) else None


def _assert_truant(s: OctSum, value: int) -> None:
    """Re-check a table truant with the search kernel."""
    if represents(s, value) is not None:
        raise WitnessValidationError(f"table truant {value} of {s} is represented by search")
    for m in range(1, value):
        if represents(s, m) is None:
            raise WitnessValidationError(f"{m} < truant {value} of {s} is not represented by search")


def truant(s: OctSum, bound: int) -> Optional[int]:
    """
    Smallest positive integer not represented by Phi_s.

    Args:
        s: Sum of generalized octagonal numbers
        bound: Search range [1, bound]

    Returns:
        The truant, or None when every n <= bound is represented
    """
    if bound < 1:
        raise InvalidInputError(f"bound must be positive, got {bound}")
    started = time.time()
    value = _first_missing(representable_table(s, bound))
    log_scan(escalation_logger, s.key, bound, [] if value is None else [value], time.time() - started)
    if value is not None:
        _assert_truant(s, value)
    return value


def _grow(s: OctSum, table: np.ndarray, values: np.ndarray, bound: int, max_depth: int) -> EscalationNode:
    value = _first_missing(table)
    if value is not None:
        _assert_truant(s, value)
    status = NodeStatus.BOUNDED_UNIVERSAL if value is None else NodeStatus.TRUANT
    node = EscalationNode(
        sum=s,
        status=status,
        truant_value=value,
        bound=bound,
        provenance=provenance_for(s.coeffs),
    )
    log_escalation(escalation_logger, s.coeffs, status.value, value)

    if value is None or s.k >= max_depth:
        return node

    low = s.coeffs[-1] if s.k else 1
    for c in range(low, value + 1):
        child = s.extend(c)
        node.children.append(_grow(child, extend_table(table, c, values), values, bound, max_depth))
    return node


def escalate(max_depth: int, bound: Optional[int] = None) -> EscalationNode:
    """
    Build the escalation tree rooted at the empty sum.

    Every truant node with fewer than max_depth coefficients gets one child per
    coefficient c with last <= c <= truant. Nodes without a truant up to the
    bound are leaves marked bounded-universal.

    Args:
        max_depth: Largest number of coefficients in the tree
        bound: Truant search range (settings.DEFAULT_BOUND when None)

    Returns:
        Root EscalationNode
    """
    if max_depth < 1:
        raise InvalidInputError(f"max_depth must be positive, got {max_depth}")
    bound = settings.DEFAULT_BOUND if bound is None else bound
    if bound < 1:
        raise InvalidInputError(f"bound must be positive, got {bound}")
    check_bound(bound)

    started = time.time()
    values = oct_values_array(bound)
    root_table = np.zeros(bound + 1, dtype=bool)
    root_table[0] = True
    tree = _grow(OctSum(), root_table, values, bound, max_depth)

    log_data = {
        "max_depth": max_depth,
        "bound": bound,
        "nodes": sum(1 for _ in tree.walk()),
        "elapsed": round(time.time() - started, 3),
    }
    escalation_logger.info(f"Escalation tree: {json.dumps(log_data)}")
    return tree


def criterion_set(tree: EscalationNode, force: bool = False) -> List[int]:
    """
    Union of all truant values in the tree.

    Args:
        tree: Root of an escalation tree
        force: Extract even from a tree too shallow or too weakly bounded

    Returns:
        Sorted list of distinct truants
    """
    if not force and (tree.max_depth() < CRITERION_MIN_DEPTH or tree.bound < CRITERION_MIN_BOUND):
        raise ShallowTreeError(
            f"criterion extraction needs depth >= {CRITERION_MIN_DEPTH} and bound >= {CRITERION_MIN_BOUND}, "
            f"got depth {tree.max_depth()} and bound {tree.bound}"
        )
    values: Set[int] = {node.truant_value for node in tree.walk() if node.truant_value is not None}
    return sorted(values)


def classify(s: OctSum, bound: Optional[int] = None, use_criterion: bool = True) -> ClassificationReport:
    """
    Decide universality of Phi_s.

    With the criterion, the first criterion integer missed is the witness; a sum
    missing none is universal and is additionally scanned up to the bound. In
    scan-only mode the verdict comes from the truant search alone.

    Args:
        s: Sum of generalized octagonal numbers
        bound: Corroboration or scan range (settings.DEFAULT_BOUND when None)
        use_criterion: Check the criterion integers first

    Returns:
        ClassificationReport
    """
    bound = settings.DEFAULT_BOUND if bound is None else bound

    if not use_criterion:
        value = truant(s, bound)
        if value is None:
            return ClassificationReport(sum=s, verdict=Verdict.BOUNDED_UNIVERSAL_UNPROVEN, checked_bound=bound)
        return ClassificationReport(sum=s, verdict=Verdict.NOT_UNIVERSAL, witness=value, checked_bound=bound)

    for n in CRITERION_INTEGERS:
        if represents(s, n) is None:
            return ClassificationReport(sum=s, verdict=Verdict.NOT_UNIVERSAL, witness=n, checked_bound=0)

    missing = exceptions_up_to(s, bound)
    if missing:
        raise CriterionContradictionError(f"{s} represents every criterion integer but misses {missing[0]}")
    return ClassificationReport(sum=s, verdict=Verdict.UNIVERSAL_BY_CRITERION, checked_bound=bound)


def candidate_quaternaries(bound: Optional[int] = None) -> QuaternaryTable:
    """
    Split the four-coefficient escalations into bounded-universal sums and truant sums.

    Args:
        bound: Truant search range (settings.DEFAULT_BOUND when None)

    Returns:
        QuaternaryTable with both lists sorted by coefficient vector
    """
    tree = escalate(4, bound)
    universal = []
    truants = []
    for node in tree.walk():
        if node.depth != 4:
            continue
        if node.status == NodeStatus.BOUNDED_UNIVERSAL:
            universal.append(node.sum.coeffs)
        else:
            truants.append((node.sum.coeffs, node.truant_value))
    return QuaternaryTable(bound=tree.bound, universal=sorted(universal), truants=sorted(truants))


def tree_to_json(tree: EscalationNode) -> str:
    """Canonical JSON text of a tree (sorted keys, children sorted by coefficients)."""
    return json.dumps(tree.to_canonical(), sort_keys=True, indent=2)
