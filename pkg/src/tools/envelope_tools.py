"""
Envelope Tools

Report-producing wrappers for the degree search, ideal measurement and worked
examples. Every function returns a JSON-ready dict; library failures come back as
``{"error": ..., "field": ...}``.
"""

import json
from pathlib import Path
from typing import Optional, Union

import structlog
from pydantic import ValidationError

from src.algebra.groebner import Ideal, profile
from src.algebra.multipoly import GREVLEX, GRLEX, MonomialOrder, format_poly, parse_poly
from src.config import ConeStrategy, OrderName, get_settings
from src.envelope.algorithm import EnvelopeBoundResult, algorithm1
from src.envelope.classification import classify_gl2_profile, gl2_envelope_table
from src.envelope.examples import EXAMPLE_NAMES, run_example
from src.errors import InputFormatError, ParameterError, WorkbenchError
from src.groups.catalog import named_group
from src.groups.matgroup import FiniteMatGroup, group_from_json
from src.models.schemas import (
    Algorithm1Report,
    ExampleReport,
    IdealFile,
    VarietyProfileReport,
    first_error_field,
)
from src.tools.errors import error_report

logger = structlog.get_logger(__name__)

GL2_TABLE = "gl2-table"


def load_json_file(path: Union[str, Path]) -> dict:
    """Read a UTF-8 JSON object from ``path``."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}", field="file") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputFormatError("top level must be a JSON object")
    return data


def _order(name: Optional[str]) -> MonomialOrder:
    return MonomialOrder.from_name(name or get_settings().default_order.value)


def _algorithm1_report(
    group: FiniteMatGroup, result: EnvelopeBoundResult, strategy: ConeStrategy
) -> dict:
    report = Algorithm1Report(
        group=group.name or "file",
        order_of_group=group.order,
        num_lines=result.num_lines,
        gb_max_degree=result.max_gb_degree,
        gb_size=result.gb_size,
        d=result.d,
        degree=result.profile.degree,
        dimension=result.profile.dimension,
        order=OrderName(result.order.name),
        strategy=strategy,
        certificates=result.certificates,
    )
    return report.model_dump(mode="json")


def run_algorithm1(
    group: Optional[str] = None,
    file: Optional[Union[str, Path]] = None,
    order: Optional[str] = None,
    strategy: Optional[str] = None,
    compare_orders: bool = False,
) -> dict:
    """
    Find the least degree d whose truncated basis cuts out the scalar cone.

    Args:
        group: Catalog tag such as ``binary-icosahedral``
        file: Path to a group file, used when no tag is given
        order: ``grlex`` or ``grevlex``; defaults from settings
        strategy: ``intersection`` or ``interpolation``; defaults from settings
        compare_orders: Also run under the other graded order and report both d values

    Returns:
        Algorithm1Report as a dict, or an error report
    """
    if (group is None) == (file is None):
        return error_report(ParameterError("give exactly one of a group tag or a group file"))
    try:
        if group is not None:
            finite = named_group(group)
        else:
            finite = group_from_json(load_json_file(file), name=Path(file).stem)
        mono_order = _order(order)
        cone_strategy = ConeStrategy(strategy or get_settings().default_strategy)
        result = algorithm1(finite, order=mono_order, strategy=cone_strategy)
        report = _algorithm1_report(finite, result, cone_strategy)

        if compare_orders:
            other = GREVLEX if mono_order == GRLEX else GRLEX
            second = algorithm1(finite, order=other, strategy=cone_strategy)
            report["d_by_order"] = {mono_order.name: result.d, other.name: second.d}
            if second.d != result.d:
                logger.warning(
                    "Degree bound depends on the monomial order",
                    group=finite.name,
                    **report["d_by_order"],
                )
    except WorkbenchError as exc:
        return error_report(exc)
    return report


def compute_degree(
    ideal: Optional[Union[str, Path]] = None, data: Optional[dict] = None
) -> dict:
    """
    Dimension and degree of the zero set of an ideal file.

    Args:
        ideal: Path to an ideal file
        data: Already-loaded ideal file contents

    Returns:
        Dictionary with the profile and the reduced Groebner basis as strings
    """
    try:
        if data is None:
            if ideal is None:
                raise ParameterError("no ideal given")
            data = load_json_file(ideal)
        try:
            parsed = IdealFile.model_validate(data)
        except ValidationError as exc:
            raise InputFormatError(exc.errors()[0]["msg"], field=first_error_field(exc)) from exc

        gens = []
        for index, text in enumerate(parsed.generators):
            try:
                gens.append(parse_poly(text, parsed.vars, parsed.conductor))
            except InputFormatError as exc:
                raise InputFormatError(exc.message, field=f"generators.{index}") from exc
        order = MonomialOrder.from_name(parsed.order.value)
        built = Ideal.of(gens, order, nvars=len(parsed.vars))
        measured = profile(built)
    except WorkbenchError as exc:
        return error_report(exc)

    basis = built.groebner()
    logger.info("Ideal measured", vars=len(parsed.vars), gb_size=len(basis), **measured.as_dict())
    return {
        **VarietyProfileReport(**measured.as_dict()).model_dump(),
        "vars": list(parsed.vars),
        "order": order.name,
        "gb_size": len(basis),
        "gb_max_degree": built.max_degree(),
        "basis": [format_poly(g, parsed.vars, order) for g in basis],
    }


def _profile_dict(p) -> Optional[dict]:
    return None if p is None else VarietyProfileReport(**p.as_dict()).model_dump()


def get_gl2_table() -> dict:
    """Non-finite GL2 envelope rows with their classification labels."""
    rows = []
    for row in gl2_envelope_table():
        entry = row.as_dict()
        entry["classified_as"] = classify_gl2_profile(row.profile.dimension, row.profile.degree)
        rows.append(entry)
    return {"name": GL2_TABLE, "rows": rows}


def run_examples(name: Optional[str] = None, param: Optional[int] = None) -> dict:
    """
    Measure the worked examples.

    Args:
        name: One example family, ``gl2-table``, or None for every family
        param: Family parameter; only meaningful with ``name``

    Returns:
        Dictionary with one ExampleReport per family and whether all matched
    """
    if name == GL2_TABLE:
        try:
            return get_gl2_table()
        except WorkbenchError as exc:
            return error_report(exc)
    if name is None and param is not None:
        return error_report(ParameterError("--param needs --name"), field="param")

    names = EXAMPLE_NAMES if name is None else (name,)
    reports = []
    try:
        for example in names:
            outcome = run_example(example, param)
            reports.append(
                ExampleReport(
                    name=outcome.name,
                    param=outcome.param,
                    group=_profile_dict(outcome.group),
                    envelope=_profile_dict(outcome.envelope),
                    expected=outcome.expected,
                    matches=outcome.matches,
                ).model_dump()
            )
    except WorkbenchError as exc:
        return error_report(exc)
    return {"examples": reports, "all_match": all(r["matches"] for r in reports)}
