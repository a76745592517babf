import os

import pandas as pd
from fpdf import FPDF
from fpdf.fonts import FontFace

from gold_tables import TABLE1, TABLE1_COLUMNS

# --- CONSTANTS & COLORS ---
C_BLUE_PRIMARY = (89, 120, 247)   # #5978F7
C_BLUE_LOGO    = (73, 106, 154)   # #496A94
C_LIGHT_BG     = (245, 247, 255)
C_GREY_BORDER  = (200, 200, 200)
C_TEXT_GREY    = (100, 100, 100)
C_MISMATCH     = (248, 215, 218)
C_WHITE        = (255, 255, 255)


class EliminationPDF(FPDF):
    def __init__(self, orientation='P', unit='mm', format='A4'):
        super().__init__(orientation, unit, format)
        self.show_standard_header = False
        self.header_text = "ELIMINATION REPORT"
        self.main_font = 'Helvetica'

    def header(self):
        if self.show_standard_header:
            self.set_y(10)
            self.set_font(self.main_font, 'B', 16)
            self.set_text_color(*C_BLUE_LOGO)
            self.cell(0, 10, self.header_text, new_x="LMARGIN", new_y="NEXT", align='L')

            self.set_draw_color(*C_BLUE_LOGO)
            self.set_line_width(0.3)
            line_y = self.get_y()
            self.line(10, line_y, self.w - 12, line_y)
            self.ln(5)

    def footer(self):
        # no page number on the title page
        if self.page_no() == 1:
            return
        self.set_y(-15)
        self.set_draw_color(*C_BLUE_LOGO)
        self.set_line_width(0.3)
        self.line(10, self.get_y() - 2, self.w - 12, self.get_y() - 2)
        self.set_font(self.main_font, 'I', 10)
        self.set_text_color(150, 150, 150)
        self.cell(0, 5, f'Page {self.page_no()}', align='C')


def clean_text(text) -> str:
    """Core fonts are latin-1 only; surds print as sqrt."""
    text = str(text).replace("√", "sqrt").replace("≠", "!=").replace("≤", "<=")
    return text.encode("latin-1", "replace").decode("latin-1")


def write_elimination_pdf(table1: pd.DataFrame, candidates, cone_cases: list[dict], output_path: str,
                          t_min: int, t_max: int):
    print(f"   > Generating PDF Report: {output_path}")

    pdf = EliminationPDF()
    pdf.set_auto_page_break(auto=True, margin=20)
    header_style = FontFace(emphasis="BOLD", color=C_WHITE, fill_color=C_BLUE_PRIMARY)
    mismatch_style = FontFace(emphasis="BOLD", fill_color=C_MISMATCH)

    #  ==========================================
    #   TITLE PAGE
    #  ==========================================
    pdf.add_page()
    pdf.set_y(pdf.h / 3)
    pdf.set_font(pdf.main_font, 'B', 24)
    pdf.set_text_color(*C_BLUE_LOGO)
    pdf.cell(0, 14, "Three-eigenvalue search", new_x="LMARGIN", new_y="NEXT", align='C')
    pdf.set_font(pdf.main_font, '', 14)
    pdf.set_text_color(*C_TEXT_GREY)
    pdf.cell(0, 10, f"Second largest eigenvalue at most 1, t = {t_min}..{t_max}",
             new_x="LMARGIN", new_y="NEXT", align='C')

    #  ==========================================
    #   STAGE COUNTS
    #  ==========================================
    pdf.show_standard_header = True
    pdf.header_text = "Stage counts"
    pdf.add_page()
    pdf.set_font(pdf.main_font, '', 10)
    pdf.set_text_color(0, 0, 0)
    pdf.set_draw_color(*C_GREY_BORDER)
    with pdf.table(col_widths=(15, 25, 25, 25, 40), text_align=("CENTER", "RIGHT", "RIGHT", "RIGHT", "CENTER"),
                   borders_layout="HORIZONTAL_LINES", align="CENTER", width=130, line_height=6) as table:
        h = table.row()
        for title in ("t", "|S(t)|", "|K(t)|", "|M(t)|", "published"):
            h.cell(title, style=header_style)
        for t, *counts in table1[TABLE1_COLUMNS].itertuples(index=False, name=None):
            computed = tuple(int(v) for v in counts)
            published = TABLE1.get(int(t))
            r = table.row()
            r.cell(str(int(t)))
            for i, value in enumerate(computed):
                differs = published is not None and published[i] != value
                r.cell(str(value), style=mismatch_style if differs else None)
            r.cell("-" if published is None else "/".join(str(v) for v in published))

    #  ==========================================
    #   SURVIVORS AND THEIR CERTIFICATES
    #  ==========================================
    pdf.header_text = "Surviving candidates"
    pdf.add_page()
    if not candidates:
        pdf.set_font(pdf.main_font, '', 12)
        pdf.cell(0, 8, "No candidate survived the multiplicity stage.", new_x="LMARGIN", new_y="NEXT")
    for c in candidates:
        p = c.params
        pdf.set_font(pdf.main_font, 'B', 12)
        pdf.set_text_color(*C_BLUE_LOGO)
        pdf.cell(0, 8, clean_text(f"t={p.t}  (n,s,m) = {p.label}  valencies {c.valencies.valencies}  "
                                  f"multiplicities {c.counts.counts}"), new_x="LMARGIN", new_y="NEXT")
        pdf.set_font(pdf.main_font, '', 10)
        pdf.set_text_color(0, 0, 0)
        pdf.multi_cell(0, 5, clean_text(f"Status: {c.status}. {c.reason or ''}"), new_x="LMARGIN", new_y="NEXT")
        pdf.ln(1)
        with pdf.table(col_widths=(25, 12, 22, 131), text_align=("LEFT", "CENTER", "LEFT", "LEFT"),
                       borders_layout="HORIZONTAL_LINES", width=190, line_height=5) as table:
            h = table.row()
            for title in ("check", "class", "verdict", "detail"):
                h.cell(title, style=header_style)
            for f in c.findings:
                r = table.row()
                r.cell(f.check)
                r.cell("" if f.class_index is None else str(f.class_index + 1))
                r.cell(f.verdict)
                r.cell(clean_text(f.detail))
        pdf.ln(6)

    #  ==========================================
    #   CONE LEDGER
    #  ==========================================
    pdf.header_text = "Cones with three valencies"
    pdf.add_page()
    pdf.set_font(pdf.main_font, '', 10)
    if not cone_cases:
        pdf.cell(0, 8, "No t in range admits the cone case search.", new_x="LMARGIN", new_y="NEXT")
    else:
        with pdf.table(col_widths=(10, 22, 22, 14, 14, 14, 14, 50),
                       text_align=("CENTER", "RIGHT", "RIGHT", "RIGHT", "RIGHT", "RIGHT", "RIGHT", "LEFT"),
                       borders_layout="HORIZONTAL_LINES", width=160, align="CENTER", line_height=5) as table:
            h = table.row()
            for title in ("t", "alpha_x", "alpha_y", "n", "s", "m", "n1", "reason"):
                h.cell(title, style=header_style)
            for case in cone_cases:
                r = table.row()
                for key in ("t", "alpha_x", "alpha_y", "n", "s", "m", "n1", "reason"):
                    value = case.get(key)
                    r.cell(clean_text("" if value is None else value))

    out_dir = os.path.dirname(output_path)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    pdf.output(output_path)
