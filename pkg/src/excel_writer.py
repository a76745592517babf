import pandas as pd

from gold_tables import TABLE1, TABLE1_COLUMNS


def write_tables_xlsx(table1: pd.DataFrame, table2: pd.DataFrame, cone_cases: list[dict], output_path: str):
    """Workbook with one sheet per table; data headers sit on the third row of each sheet."""
    print(f"   > Writing Excel tables to: {output_path}")

    with pd.ExcelWriter(output_path, engine='xlsxwriter') as writer:
        workbook = writer.book

        # ==========================================
        # 1. DEFINE COLORS & STATIC FORMATS
        # ==========================================
        c_gblue = '#5978F7'
        c_header_bg = '#E4E5EB'
        c_mismatch_bg = '#F8D7DA'
        bg_color_1 = '#F0F0F0'
        bg_color_2 = '#FAFAFA'

        fmt_title = workbook.add_format({'bold': True, 'font_size': 16, 'font_color': c_gblue})
        fmt_header = workbook.add_format({'bold': True, 'text_wrap': True, 'valign': 'vcenter', 'align': 'center',
                                          'fg_color': c_header_bg, 'right': 1, 'right_color': '#FFFFFF'})
        fmt_num = [workbook.add_format({'align': 'right', 'indent': 1, 'bg_color': bg}) for bg in (bg_color_1, bg_color_2)]
        fmt_txt = [workbook.add_format({'align': 'left', 'indent': 1, 'bg_color': bg}) for bg in (bg_color_1, bg_color_2)]
        fmt_mismatch = workbook.add_format({'align': 'right', 'indent': 1, 'bold': True, 'bg_color': c_mismatch_bg})

        def write_header(sheet, row, headers):
            sheet.set_row(row, 22)
            for col, name in enumerate(headers):
                sheet.write(row, col, name, fmt_header)

        # ==========================================
        # SHEET 1: STAGE COUNTS
        # ==========================================
        sheet = workbook.add_worksheet('Table 1')
        writer.sheets['Table 1'] = sheet
        sheet.hide_gridlines(2)
        sheet.write('A1', "Stage counts per t", fmt_title)
        headers = ['t', '|S(t)|', '|K(t)|', '|M(t)|', 'published S', 'published K', 'published M', 'match']
        write_header(sheet, 2, headers)

        row = 3
        for i, (t, *counts) in enumerate(table1[TABLE1_COLUMNS].itertuples(index=False, name=None)):
            band = i % 2
            computed = tuple(int(v) for v in counts)
            published = TABLE1.get(int(t))
            sheet.write(row, 0, int(t), fmt_num[band])
            for col, value in enumerate(computed, start=1):
                differs = published is not None and published[col - 1] != value
                sheet.write(row, col, value, fmt_mismatch if differs else fmt_num[band])
            for col in range(3):
                sheet.write(row, 4 + col, published[col] if published else "", fmt_num[band])
            sheet.write(row, 7, "yes" if published == computed else "no", fmt_txt[band])
            row += 1
        sheet.set_column('A:A', 6)
        sheet.set_column('B:G', 12)
        sheet.set_column('H:H', 8)

        # ==========================================
        # SHEET 2: SURVIVORS
        # ==========================================
        survivors = workbook.add_worksheet('Table 2')
        writer.sheets['Table 2'] = survivors
        survivors.hide_gridlines(2)
        survivors.write('A1', "Surviving parameter arrays", fmt_title)
        write_header(survivors, 2, list(table2.columns))
        for i, rec in enumerate(table2.itertuples(index=False)):
            for col, value in enumerate(rec):
                value = value.item() if hasattr(value, 'item') else value
                fmt = fmt_num[i % 2] if isinstance(value, int) else fmt_txt[i % 2]
                survivors.write(3 + i, col, value, fmt)
        survivors.set_column('A:D', 8)
        survivors.set_column('E:F', 16)
        survivors.set_column('G:G', 10)
        survivors.set_column('H:H', 70)

        # ==========================================
        # SHEET 3: CONE LEDGER
        # ==========================================
        cones = workbook.add_worksheet('Cones')
        writer.sheets['Cones'] = cones
        cones.hide_gridlines(2)
        cones.write('A1', "Cone case ledger", fmt_title)
        cone_cols = ['t', 'alpha_x', 'alpha_y', 'n', 'discriminant', 's', 'm', 'n1', 'n2', 'reason']
        write_header(cones, 2, cone_cols)
        for i, case in enumerate(cone_cases):
            for col, key in enumerate(cone_cols):
                value = case.get(key)
                value = "" if value is None else value
                cones.write(3 + i, col, value, fmt_num[i % 2] if isinstance(value, int) else fmt_txt[i % 2])
        cones.set_column('A:I', 10)
        cones.set_column('J:J', 26)
