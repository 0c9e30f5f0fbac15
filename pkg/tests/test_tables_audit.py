from k5minus.audit import audit_tables
from k5minus.finder import SearchBudget
from k5minus.tables import (
    C1_COLS,
    C1_ROWS,
    C1_K5MINUS,
    C1_RESIDUAL,
    C1_SHORTER,
    D1_K5MINUS,
    D1_RESIDUAL,
    D1_SHORTER,
    c1_case,
    c1_outcome,
    d1_case,
    d1_outcome,
)


def test_c1_cells_cover_assignments():
    ids = {c1_case(r, c) for r in C1_ROWS for c in C1_COLS}
    assert ids == C1_K5MINUS | C1_SHORTER | C1_RESIDUAL
    # 36 cells, case 12 appears twice
    cells = [c1_case(r, c) for r in C1_ROWS for c in C1_COLS]
    assert len(cells) == 36 and cells.count("12") == 2


def test_c1_outcome_partition():
    assert not (C1_K5MINUS & C1_SHORTER)
    assert not (C1_K5MINUS & C1_RESIDUAL)
    assert not (C1_SHORTER & C1_RESIDUAL)
    assert c1_outcome("1") == "K5MINUS"
    assert c1_outcome("14") == "SHORTER_W4"
    assert c1_outcome("13") == "RESIDUAL"


def test_d1_outcomes():
    assert D1_K5MINUS == {"1", "5"}
    assert D1_SHORTER == {"3", "6", "7", "8", "9"}
    assert D1_RESIDUAL == {"2", "4"}
    assert d1_case("R2", "R4") == "5"
    assert d1_outcome("5") == "K5MINUS"


def test_full_audit_passes():
    report = audit_tables(SearchBudget(2_000_000))
    failures = report.failures()
    assert report.all_pass, [f"{r.name}: wanted {r.expected} got {r.result}"
                             for r in failures]
    # 36 C1 cells + 9 D1 cells present
    assert sum(1 for r in report.rows if r.group == "table_c1") == 36
    assert sum(1 for r in report.rows if r.group == "table_d1") == 9
    assert sum(1 for r in report.rows if r.group == "figure") >= 50


def test_audit_json_shape():
    report = audit_tables()
    js = report.to_json()
    assert js["all_pass"] is True
    assert {"name", "group", "expected", "result", "pass"} == set(js["rows"][0])
