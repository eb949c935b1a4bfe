import pytest

from impactz import JournalData

Y = 2000


@pytest.fixture
def roa_pair():
    """Two-year RoA reversal pair: 3 vs 2 flips under +25 uncited."""
    j = JournalData("J", {Y - 1: 10, Y - 2: 10},
                    {(Y, Y - 1): 30, (Y, Y - 2): 30})
    jp = JournalData("J'", {Y - 1: 30, Y - 2: 30},
                     {(Y, Y - 1): 60, (Y, Y - 2): 60})
    return j, jp


@pytest.fixture
def diachronous_pair():
    """Three-year diachronous reversal pair (s=0)."""
    j = JournalData("J", {Y: 20},
                    {(Y, Y): 10, (Y + 1, Y): 20, (Y + 2, Y): 30})
    jp = JournalData("J'", {Y: 60},
                     {(Y, Y): 20, (Y + 1, Y): 40, (Y + 2, Y): 60})
    return j, jp


@pytest.fixture
def aor_pair():
    """Two-year AoR reversal pair: 13/6 vs 9/4 flips under +10 at Y-1."""
    j = JournalData("J", {Y - 1: 30, Y - 2: 20},
                    {(Y, Y - 1): 10, (Y, Y - 2): 80})
    jp = JournalData("J'", {Y - 1: 30, Y - 2: 20},
                     {(Y, Y - 1): 120, (Y, Y - 2): 10})
    return j, jp
