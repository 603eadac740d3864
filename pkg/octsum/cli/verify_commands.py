"""Verification and criterion cross-check commands."""

import argparse
from pathlib import Path
from typing import List

import pandas as pd

from ..config import settings
from ..core.qform_engine import verify_criterion
from ..core.verifier import certificate_digest, certificate_json, parse_theorem_id, verify_all, verify_theorem
from ..models.certificate import Certificate
from ..models.qform import DiagonalForm
from ..schemas.report_schemas import VerifySummaryRow
from ..utils.file_utils import ensure_dir, write_text
from ..utils.parse_utils import parse_bound, parse_coeffs


def _verdict_line(certificate: Certificate) -> str:
    line = f"{certificate.theorem_id}: {certificate.verdict.value} (max {certificate.bound})"
    if certificate.failure is not None:
        line += f" at n={certificate.failure.n}, {certificate.failure.claim}: {certificate.failure.detail}"
    return line


def summary_frame(certificates: List[Certificate]) -> pd.DataFrame:
    """
    One row per certificate, in the order given.

    Args:
        certificates: Verification results

    Returns:
        DataFrame with the VerifySummaryRow columns
    """
    rows = []
    for certificate in certificates:
        row = VerifySummaryRow(
            theorem_id=certificate.theorem_id,
            label=certificate.label,
            bound=certificate.bound,
            verdict=certificate.verdict.value,
            failure_n=None if certificate.failure is None else certificate.failure.n,
            failure_claim=None if certificate.failure is None else certificate.failure.claim,
            exceptions=" ".join(str(n) for n in certificate.exceptions),
            sha256=certificate_digest(certificate),
        )
        rows.append(row.model_dump())
    return pd.DataFrame(rows, columns=list(VerifySummaryRow.model_fields))


def cmd_verify(args: argparse.Namespace) -> int:
    """Exit 0 on pass, 1 on fail."""
    certificate = verify_theorem(parse_theorem_id(args.theorem), args.max)
    print(_verdict_line(certificate))
    if args.cert:
        write_text(args.cert, certificate_json(certificate))
    return 0 if certificate.passed else 1


def cmd_verify_all(args: argparse.Namespace) -> int:
    """Write one certificate per theorem id plus summary.csv; exit 1 if any fails."""
    certificates = verify_all(args.max, args.workers)
    out = ensure_dir(args.out)
    for certificate in certificates:
        write_text(out / f"{certificate.theorem_id}.json", certificate_json(certificate))

    frame = summary_frame(certificates)
    frame.to_csv(out / "summary.csv", index=False)
    print(frame[["theorem_id", "label", "bound", "verdict", "failure_n", "exceptions"]].to_string(index=False))
    return 0 if all(c.passed for c in certificates) else 1


def cmd_criterion(args: argparse.Namespace) -> int:
    """Exit 0 when the closed-form criterion agrees with search everywhere it is asserted."""
    report = verify_criterion(DiagonalForm(coeffs=args.form), args.max)
    form = "<" + ",".join(str(a) for a in report.form) + ">"
    print(f"{form} on {report.domain}: {report.checked} checked, {len(report.disagreements)} disagreements")
    if not report.agrees:
        print("disagreements: " + " ".join(str(n) for n in report.disagreements[:20]))
        return 1
    return 0


def register(subparsers) -> None:
    """Add the verification commands to a subparser group."""
    parser = subparsers.add_parser("verify", help="Verify one result up to a bound")
    parser.add_argument("--theorem", required=True, help="Theorem id or label, e.g. phi-1-1-2-14, L3.2, L3.5-7 or T3.1")
    parser.add_argument("--max", type=parse_bound, default=settings.DEFAULT_BOUND)
    parser.add_argument("--cert", help="Write the certificate JSON to this path")
    parser.set_defaults(handler=cmd_verify)

    parser = subparsers.add_parser("verify-all", help="Verify every result and write certificates")
    parser.add_argument("--max", type=parse_bound, default=settings.DEFAULT_BOUND)
    parser.add_argument("--out", type=Path, default=settings.CERT_DIR)
    parser.add_argument("--workers", type=int, default=settings.WORKERS)
    parser.set_defaults(handler=cmd_verify_all)

    parser = subparsers.add_parser("criterion", help="Cross-check a ternary criterion against search")
    parser.add_argument("--form", type=parse_coeffs, required=True)
    parser.add_argument("--max", type=parse_bound, default=settings.DEFAULT_BOUND)
    parser.set_defaults(handler=cmd_criterion)
