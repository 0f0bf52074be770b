"""Serialization contract: 17-digit round trips and schema validation."""

import io
import struct

import pytest

from pqbernstein.analysis import ConvergenceReport
from pqbernstein.reporting import (
    format_cell,
    read_report_csv,
    read_report_json,
    write_report_csv,
    write_report_json,
)


def _bits(x: float) -> bytes:
    return struct.pack("<d", x)


def sample_report():
    return ConvergenceReport(
        params={"command": "demo", "n": "3"},
        columns=["n", "value"],
        rows=[[3, 0.1 + 0.2], [4, 1.0 / 3.0]],
        verdicts={"ok": "true"},
    )


class TestFormatCell:
    def test_floats_survive_round_trip(self):
        for v in (0.1 + 0.2, 1e-300, 2.0007, 9.0 / 14.0, 1.7976931348623157e308):
            assert _bits(float(format_cell(v))) == _bits(v)

    def test_ints_and_bools(self):
        assert format_cell(7) == "7"
        assert format_cell(True) == "true"
        assert format_cell(False) == "false"


class TestCsvRoundTrip:
    def test_values_bit_identical(self):
        buf = io.StringIO()
        write_report_csv(sample_report(), buf)
        back = read_report_csv(io.StringIO(buf.getvalue()))
        assert back.columns == ["n", "value"]
        assert _bits(back.rows[0][1]) == _bits(0.1 + 0.2)
        assert back.verdicts == {"ok": "true"}
        assert back.params["command"] == "demo"

    def test_ragged_row_rejected(self):
        text = "# a=b\nx,y\n1,2\n3\n"
        with pytest.raises(ValueError, match="line 4"):
            read_report_csv(io.StringIO(text))

    def test_missing_columns_rejected(self):
        with pytest.raises(ValueError, match="column"):
            read_report_csv(io.StringIO("# a=b\n"))


class TestJsonRoundTrip:
    def test_values_bit_identical(self):
        buf = io.StringIO()
        write_report_json(sample_report(), buf)
        back = read_report_json(io.StringIO(buf.getvalue()))
        assert _bits(float(back.rows[1][1])) == _bits(1.0 / 3.0)
        assert back.columns == ["n", "value"]
