"""Schemas for the tabular outputs, using pandera."""

import pandas as pd
import pandera as pa
from loguru import logger
from pandera import Check, Column, DataFrameSchema

PREDICATE_VALUES = ["definite", "indefinite", "inapplicable"]
SCAN_VALUES = ["definite", "indefinite", "degenerate", "inapplicable"]


# Region grid: one row per (s, t) point
RegionGridSchema = DataFrameSchema({
    "s": Column(pa.Float, nullable=False, description="s coordinate"),
    "t": Column(pa.Float, nullable=False, description="t coordinate"),
    "predicate": Column(pa.String, Check.isin(PREDICATE_VALUES), description="Closed-form verdict"),
    "scan": Column(pa.String, Check.isin(SCAN_VALUES), description="Sign-scan verdict"),
}, strict=True, ordered=True)


# Scan census: one row per signature of the box
ScanCensusSchema = DataFrameSchema({
    "signature": Column(pa.String, nullable=False, unique=True, description="Comma-separated parts"),
    "radius": Column(pa.Int, Check.ge(0), description="max |λ_i|"),
    "sign": Column(pa.Int, Check.isin([-1, 0, 1]), description="Sign of the reduced eigenvalue"),
    "log_abs": Column(pa.Float, nullable=True, description="log |c_λ| (reduced); empty for zero"),
}, strict=True, ordered=True)


def _collect_errors(e: pa.errors.SchemaErrors) -> list:
    errors = []
    for error in e.schema_errors:
        if hasattr(error, "failure_cases") and error.failure_cases is not None:
            if isinstance(error.failure_cases, str):
                errors.append(error.failure_cases)
            else:
                errors.append(str(error))
        else:
            errors.append(str(error))
    return errors


def validate_region_grid(df: pd.DataFrame) -> dict:
    """Validate a region grid; agreement between the verdict columns is reported too."""
    try:
        RegionGridSchema.validate(df, lazy=True)
    except pa.errors.SchemaErrors as e:
        errors = _collect_errors(e)
        logger.error(f"Region grid validation failed: {errors}")
        return {"valid": False, "errors": errors}
    mismatched = df[df["predicate"] != df["scan"]]
    if len(mismatched):
        errors = [f"s={row.s}, t={row.t}: predicate {row.predicate}, scan {row.scan}" for row in mismatched.itertuples()]
        logger.error(f"Region grid has {len(errors)} disagreements")
        return {"valid": False, "errors": errors}
    logger.info("Region grid validation passed")
    return {"valid": True, "errors": []}


def validate_scan_census(df: pd.DataFrame) -> dict:
    """Validate a scan census table."""
    try:
        ScanCensusSchema.validate(df, lazy=True)
        logger.info("Scan census validation passed")
        return {"valid": True, "errors": []}
    except pa.errors.SchemaErrors as e:
        errors = _collect_errors(e)
        logger.error(f"Scan census validation failed: {errors}")
        return {"valid": False, "errors": errors}
