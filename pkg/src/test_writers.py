import pandas as pd

from cone_analysis import run_cone_search
from excel_writer import write_tables_xlsx
from gold_tables import TABLE2_KEY_COLUMNS, table1_frame, table2_frame
from pdf_writer import clean_text, write_elimination_pdf
from refinement import refute_all


def _table2() -> pd.DataFrame:
    frame = table2_frame(3, 7)
    frame["status"] = "refuted"
    frame["reason"] = ""
    return frame


def test_excel_tables_read_back(tmp_path):
    path = tmp_path / "tables.xlsx"
    cases = [case.to_record() for case in run_cone_search(3).ledger]
    write_tables_xlsx(table1_frame(3, 5), _table2(), cases, str(path))

    sheet1 = pd.read_excel(path, sheet_name="Table 1", header=2)
    assert list(sheet1["t"]) == [3, 4, 5]
    assert list(sheet1["|S(t)|"]) == [128, 196, 277]
    assert set(sheet1["match"]) == {"yes"}

    sheet2 = pd.read_excel(path, sheet_name="Table 2", header=2, dtype=str)
    assert list(sheet2.columns[:len(TABLE2_KEY_COLUMNS)]) == TABLE2_KEY_COLUMNS
    assert list(sheet2["valencies"]) == ["5;8;13;20", "7;13;23", "6;9;21;30", "11;16;23;32"]

    cones = pd.read_excel(path, sheet_name="Cones", header=2)
    assert len(cones) == 3
    assert list(cones["n"]) == [29, 22, 22]


def test_excel_marks_mismatches(tmp_path):
    path = tmp_path / "tables.xlsx"
    table1 = table1_frame(4, 4)
    table1.loc[0, "|K(t)|"] = 115
    write_tables_xlsx(table1, _table2(), [], str(path))
    sheet1 = pd.read_excel(path, sheet_name="Table 1", header=2)
    assert list(sheet1["match"]) == ["no"]


def test_pdf_report(tmp_path, survivor_rows):
    path = tmp_path / "report" / "elimination_report.pdf"
    candidates = refute_all(survivor_rows.values()).candidates
    cases = [case.to_record() for case in run_cone_search(3).ledger]
    write_elimination_pdf(table1_frame(3, 7), candidates, cases, str(path), 3, 7)
    assert path.read_bytes().startswith(b"%PDF")


def test_pdf_report_without_survivors(tmp_path):
    path = tmp_path / "empty.pdf"
    write_elimination_pdf(table1_frame(3, 3), (), [], str(path), 3, 3)
    assert path.stat().st_size > 0


def test_clean_text():
    assert clean_text("2√2 ≤ 3") == "2sqrt2 <= 3"
    assert clean_text(12) == "12"
