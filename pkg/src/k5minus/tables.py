"""Endpoint tables for the two bridging-path case analyses.

Each table classifies where a connecting path's endpoints can land and what
that landing yields: a K5-minus subdivision, a wheel that beats the current
short one, or a residual configuration that needs the secondary-path
arguments.  Row/column keys name the host regions; the letter variants (2a
vs 2b etc.) distinguish the two sides of the subdivided rim segments.
"""

from __future__ import annotations

K5MINUS = "K5MINUS"
SHORTER_W4 = "SHORTER_W4"
RESIDUAL = "RESIDUAL"

# Case (c)(i): path R between
#   G1 = R1 u R2 u P1 u P2 u P   and   G2 = R3 u R4 u P3 u P4 u Q,
# avoiding {v1, v, v3}.  Rows: where the G1 endpoint lies; columns: the G2
# endpoint.  R2 splits at p1, R4 splits at q3.
C1_ROWS = ("R1", "v2R2p1", "p1R2v3", "P1", "P2", "P")
C1_COLS = ("R3", "v4R4q3", "q3R4v1", "P3", "P4", "Q")

_C1_IDS = {
    "R1": {"R3": "1", "v4R4q3": "2a", "q3R4v1": "2b", "P3": "3", "P4": "4", "Q": "5"},
    "v2R2p1": {"R3": "6a", "v4R4q3": "7a", "q3R4v1": "7c", "P3": "8a", "P4": "9a", "Q": "10a"},
    "p1R2v3": {"R3": "6b", "v4R4q3": "7b", "q3R4v1": "7d", "P3": "8b", "P4": "9b", "Q": "10b"},
    "P1": {"R3": "11", "v4R4q3": "12", "q3R4v1": "12", "P3": "13", "P4": "14", "Q": "15"},
    "P2": {"R3": "16", "v4R4q3": "17a", "q3R4v1": "17b", "P3": "18", "P4": "19", "Q": "20"},
    "P": {"R3": "21", "v4R4q3": "22a", "q3R4v1": "22b", "P3": "23", "P4": "24", "Q": "25"},
}

C1_K5MINUS = {"1", "2a", "4", "5", "6a", "7a", "10a", "16", "21", "22a", "25"}
C1_SHORTER = {
    "3", "8a", "8b", "9a", "9b", "11", "12", "14", "15",
    "17a", "17b", "18", "19", "20", "23", "24",
}
C1_RESIDUAL = {"2b", "6b", "7b", "7c", "7d", "10b", "13", "22b"}


def c1_case(row: str, col: str) -> str:
    return _C1_IDS[row][col]


def c1_outcome(case_id: str) -> str:
    if case_id in C1_K5MINUS:
        return K5MINUS
    if case_id in C1_SHORTER:
        return SHORTER_W4
    if case_id in C1_RESIDUAL:
        return RESIDUAL
    raise KeyError(case_id)


# Case (d)(i): path R between G1 = R1 u R2 u P2 and G2 = R3 u R4 u P4,
# avoiding {v1, v, v3} and not meeting P, Q, P1, P3.
D1_ROWS = ("R1", "R2", "P2")
D1_COLS = ("R3", "R4", "P4")

_D1_IDS = {
    "R1": {"R3": "1", "R4": "2", "P4": "3"},
    "R2": {"R3": "4", "R4": "5", "P4": "6"},
    "P2": {"R3": "7", "R4": "8", "P4": "9"},
}

D1_K5MINUS = {"1", "5"}
D1_SHORTER = {"3", "6", "7", "8", "9"}
D1_RESIDUAL = {"2", "4"}


def d1_case(row: str, col: str) -> str:
    return _D1_IDS[row][col]


def d1_outcome(case_id: str) -> str:
    if case_id in D1_K5MINUS:
        return K5MINUS
    if case_id in D1_SHORTER:
        return SHORTER_W4
    if case_id in D1_RESIDUAL:
        return RESIDUAL
    raise KeyError(case_id)


_RANK = {K5MINUS: 0, SHORTER_W4: 1, RESIDUAL: 2}


def outcome_rank(outcome: str) -> int:
    return _RANK[outcome]
