"""Cataloged reference codes with their recorded facts.

Each entry rebuilds a specific code from scratch and asserts what is known
about it: dimension, complementary-dual verdict, run length, distance bounds,
optimality class.  A mismatch raises AssertionFailed naming the first bad
quantity, which is the point: these are regression anchors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .analysis import CodeReport, build_report
from .constructions import (
    binary_construction2,
    qary_lrc_lcd_even,
    qary_lrc_lcd_general,
)
from .cosets import longest_consecutive_run
from .cyclic import CyclicCode
from .errors import AssertionFailed


@dataclass(frozen=True)
class Preset:
    id: str
    family: str
    build: Callable[[int], CyclicCode]  # takes a table budget
    r: int
    expect: dict


PRESETS: dict[str, Preset] = {
    "3.1": Preset(
        id="3.1", family="c2",
        build=lambda budget: binary_construction2(6, 2, table_budget=budget),
        r=2,
        expect={"k": 30, "d_lower": 10, "run": (59, 9), "lcd": True, "r_verified": 2},
    ),
    "3.2": Preset(
        id="3.2", family="c2",
        build=lambda budget: binary_construction2(8, 4, (1, 254, 3, 252), table_budget=budget),
        r=4,
        expect={"k": 172, "d_lower": 14, "run": (249, 13), "lcd": True, "r_verified": 4},
    ),
    "3.3": Preset(
        id="3.3", family="t33",
        build=lambda budget: qary_lrc_lcd_even(37, 36, 20, 5, table_budget=budget),
        r=5,
        expect={"k": 20, "zeros": 16, "d_lower": 14, "d_upper": 14,
                "optimality": "optimal", "lcd": True, "r_verified": 5},
    ),
    "3.4": Preset(
        id="3.4", family="t34",
        build=lambda budget: qary_lrc_lcd_general(17, 16, 8, 3, table_budget=budget),
        r=3,
        expect={"k": 8, "d_lower": 6, "d_upper": 7, "optimality": "within-one",
                "lcd": True, "r_verified": 3},
    ),
    "3.5a": Preset(
        id="3.5a", family="t34",
        build=lambda budget: qary_lrc_lcd_general(67, 66, 35, 5, table_budget=budget),
        r=5,
        expect={"k": 35, "d_lower": 26, "d_upper": 26, "optimality": "optimal",
                "lcd": True, "r_verified": 5},
    ),
    "3.5b": Preset(
        id="3.5b", family="t34",
        build=lambda budget: qary_lrc_lcd_general(67, 66, 37, 5, table_budget=budget),
        r=5,
        expect={"k": 37, "d_lower": 22, "d_upper": 23, "optimality": "within-one",
                "lcd": True, "r_verified": 5},
    ),
}


def run_preset(preset_id: str, *, table_budget: int, search_budget: int
               ) -> tuple[CyclicCode, CodeReport]:
    """Rebuild a cataloged code, verify its recorded facts, return the report."""
    if preset_id not in PRESETS:
        raise AssertionFailed(f"unknown preset id {preset_id!r}; "
                              f"known: {', '.join(sorted(PRESETS))}")
    preset = PRESETS[preset_id]
    code = preset.build(table_budget)
    report = build_report(code, claimed_r=preset.r, budget=search_budget)
    _check(preset, code, report)
    return code, report


def _check(preset: Preset, code: CyclicCode, report: CodeReport):
    exp = preset.expect

    def bail(what: str, wanted, got):
        raise AssertionFailed(f"preset {preset.id}: {what} expected {wanted}, got {got}")

    if code.k != exp["k"]:
        bail("dimension", exp["k"], code.k)
    if "zeros" in exp and len(code.zeros) != exp["zeros"]:
        bail("defining set size", exp["zeros"], len(code.zeros))
    if "run" in exp:
        run = longest_consecutive_run(code.zeros)
        if run != tuple(exp["run"]):
            bail("consecutive root run", tuple(exp["run"]), run)
    if report.lcd.consensus != exp["lcd"]:
        bail("lcd", exp["lcd"], report.lcd.consensus)
    if report.d_lower != exp["d_lower"]:
        bail("distance lower bound", exp["d_lower"], report.d_lower)
    if "d_upper" in exp and report.d_upper != exp["d_upper"]:
        bail("distance upper bound", exp["d_upper"], report.d_upper)
    if "optimality" in exp and report.optimality != exp["optimality"]:
        bail("optimality class", exp["optimality"], report.optimality)
    if report.r_verified != exp["r_verified"]:
        bail("verified locality", exp["r_verified"], report.r_verified)
