import pytest

from gold_tables import TABLE2
from multiplicity_enum import Candidate, MultiplicityArray
from spectral_enum import SpectralParams
from valency_enum import ValencyArray


def make_candidate(t, n, s, m, valencies, counts) -> Candidate:
    params = SpectralParams(t=t, n=n, s=s, m=m)
    array = ValencyArray.from_valencies(params, valencies)
    return Candidate.from_array(MultiplicityArray(valencies=array, counts=tuple(counts)))


@pytest.fixture
def survivor_rows():
    """The four published survivors, keyed by (t, n)."""
    return {(row[0], row[1]): make_candidate(*row) for row in TABLE2}
