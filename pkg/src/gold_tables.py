import pandas as pd

#  ==========================================
#    PUBLISHED COUNTS
#  ==========================================

# t: (|S(t)|, |K(t)|, |M(t)|)
TABLE1 = {
    3: (128, 58, 0),   4: (196, 116, 1),  5: (277, 113, 2),
    6: (375, 173, 0),  7: (492, 159, 1),  8: (610, 225, 0),
    9: (748, 233, 0),  10: (898, 297, 0), 11: (546, 272, 0),
    12: (497, 287, 0), 13: (455, 237, 0), 14: (409, 245, 0),
    15: (377, 214, 0), 16: (340, 220, 0), 17: (311, 184, 0),
    18: (273, 190, 0), 19: (248, 162, 0), 20: (220, 172, 0),
    21: (189, 137, 0), 22: (163, 137, 0), 23: (143, 120, 0),
    24: (118, 104, 0), 25: (95, 92, 0),   26: (76, 71, 0),
    27: (61, 59, 0),   28: (43, 43, 0),   29: (27, 27, 0),
}

# (t, n, s, m, valencies, multiplicities)
TABLE2 = (
    (4, 31, 15, 9, (5, 8, 13, 20), (5, 10, 5, 11)),
    (5, 36, 19, 9, (7, 13, 23), (6, 12, 18)),
    (5, 45, 28, 12, (6, 9, 21, 30), (6, 3, 3, 33)),
    (7, 45, 20, 8, (11, 16, 23, 32), (6, 27, 6, 6)),
)

TABLE1_COLUMNS = ["t", "|S(t)|", "|K(t)|", "|M(t)|"]
TABLE2_KEY_COLUMNS = ["t", "n", "s", "m", "valencies", "multiplicities"]


def format_tuple(values) -> str:
    """'5;8;13;20', the CSV-safe rendering of a valency or multiplicity tuple."""
    return ";".join(str(v) for v in values)


def table1_frame(t_min: int = 3, t_max: int = 29) -> pd.DataFrame:
    rows = [(t, *TABLE1[t]) for t in range(t_min, t_max + 1)]
    return pd.DataFrame(rows, columns=TABLE1_COLUMNS)


def table2_frame(t_min: int = 3, t_max: int = 29) -> pd.DataFrame:
    rows = [(t, n, s, m, format_tuple(k), format_tuple(c))
            for t, n, s, m, k, c in TABLE2 if t_min <= t <= t_max]
    return pd.DataFrame(rows, columns=TABLE2_KEY_COLUMNS)


# === COMPARISON ===
def compare_table1(computed: pd.DataFrame) -> list[str]:
    """One message per cell that disagrees with the published counts."""
    mismatches = []
    for row in computed[TABLE1_COLUMNS].itertuples(index=False, name=None):
        t = int(row[0])
        if t not in TABLE1:
            mismatches.append(f"t={t}: no published row")
            continue
        for column, got, expected in zip(TABLE1_COLUMNS[1:], row[1:], TABLE1[t]):
            if int(got) != expected:
                mismatches.append(f"t={t} {column}: computed {got}, published {expected}")
    return mismatches


def compare_table2(computed: pd.DataFrame, t_min: int = 3, t_max: int = 29) -> list[str]:
    expected = {tuple(str(v) for v in row) for row in table2_frame(t_min, t_max).itertuples(index=False)}
    got = {tuple(str(v) for v in row) for row in computed[TABLE2_KEY_COLUMNS].itertuples(index=False)}
    mismatches = [f"missing survivor {','.join(row)}" for row in sorted(expected - got)]
    mismatches += [f"unexpected survivor {','.join(row)}" for row in sorted(got - expected)]
    return mismatches
