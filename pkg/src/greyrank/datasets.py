"""Bundled example problems."""

from __future__ import annotations

from pathlib import Path

from .problem import DecisionProblem, parse_problem

__all__ = ["fighter_problem_path", "load_fighter_problem"]

_DATA_DIR = Path(__file__).parent / "data"


def fighter_problem_path() -> Path:
    """Path to the bundled fighter-development-plan selection problem.

    Five candidate plans scored on nine attributes covering all four value
    kinds, with interval subjective weights and per-plan preferences.
    """
    return _DATA_DIR / "fighter.json"


def load_fighter_problem() -> DecisionProblem:
    return parse_problem(fighter_problem_path())
