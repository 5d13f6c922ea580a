import re

import pytest

from conftest import random_program
from snnchip.chip.simulation import TraceRecord, run_simulation
from snnchip.chip.top import ChipInputs, IDLE_INPUTS
from snnchip.core.regfile import WriteEvent
from snnchip.errors import ProgramParseError, StimulusParseError, TraceParseError
from snnchip.formats.program import ProgramFile, parse_literal, parse_program, render_program
from snnchip.formats.stimulus import hold_stimulus, parse_stimulus, render_stimulus
from snnchip.formats.tracefile import CSV_HEADER, read_trace_csv, write_trace_csv, write_trace_vcd
from snnchip.spi.peripheral import SpiLineSample

STIMULUS_HEADER = "cycle,i0,i1,i2,sclk,mosi,cs_n,reset\n"


def zero_records(count):
    return [TraceRecord(c, (0,) * 6, (0,) * 6, (False,) * 6) for c in range(count)]


def check_vcd(text):
    """Minimal structural VCD check; returns {timestamp: [changed ids]}."""
    header, _, body = text.partition("$enddefinitions $end")
    assert body, "missing $enddefinitions"
    assert re.search(r"\$timescale\s+1\s*ns\s+\$end", header)

    declared = {}
    for size, ident, name in re.findall(r"\$var\s+wire\s+(\d+)\s+(\S+)\s+(\S+)\s+\$end", header):
        declared[ident] = (int(size), name)

    changes = {}
    now = None
    for token in body.split("\n"):
        token = token.strip()
        if not token or token.startswith("$"):
            continue
        if token.startswith("#"):
            t = int(token[1:])
            assert now is None or t > now, "timestamps must increase"
            now = t
            changes.setdefault(now, [])
            continue
        if token[0] in "01xz":
            ident = token[1:]
        else:
            assert token[0] == "b", f"unexpected line {token!r}"
            ident = token.split()[1]
        assert ident in declared, f"undeclared id {ident!r}"
        changes.setdefault(0 if now is None else now, []).append(declared[ident][1])
    return declared, changes


class TestProgramFormat:

    def test_single_directive(self):
        assert parse_program("write 0x09 0x7F").writes == [WriteEvent(0x09, 0x7F)]

    def test_comments_and_blank_lines(self):
        assert parse_program("# comment\n\nwrite 0 255").writes == [WriteEvent(0x00, 0xFF)]

    def test_trailing_comment(self):
        assert parse_program("write 0x0A 3   # leak\n").writes == [WriteEvent(0x0A, 3)]

    def test_range_error_names_location(self):
        with pytest.raises(ProgramParseError) as excinfo:
            parse_program("write 0x09 300", source="prog.txt")
        err = excinfo.value
        assert (err.line, err.column) == (1, 12)
        assert str(err).startswith("prog.txt:1:12:")
        assert "out of range" in str(err)

    @pytest.mark.parametrize("text, line, column", [
        ("writ 0 0", 1, 1),
        ("\n  write 0x1G 0", 2, 9),
        ("write 1", 1, 8),
        ("write 1 2 3", 1, 11),
        ("# ok\nwrite -1 2", 2, 7),
    ])
    def test_malformed_lines(self, text, line, column):
        with pytest.raises(ProgramParseError) as excinfo:
            parse_program(text)
        assert (excinfo.value.line, excinfo.value.column) == (line, column)

    def test_parse_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_program("bogus")

    @pytest.mark.parametrize("token, value", [("0x1f", 31), ("0X10", 16), ("42", 42), ("0x", None), ("1e3", None)])
    def test_literals(self, token, value):
        assert parse_literal(token) == value

    def test_render_round_trip(self, rng):
        program = ProgramFile(random_program(rng, max_writes=30, max_addr=0xFF))
        text = render_program(program)
        assert text.startswith("#")
        assert parse_program(text).writes == program.writes

    def test_render_labels_mapped_registers(self):
        text = render_program([WriteEvent(0x09, 10), WriteEvent(0x40, 1)])
        assert "write 0x09 0x0A  # threshold\n" in text
        assert "write 0x40 0x01\n" in text


class TestStimulusFormat:

    def test_single_row(self):
        inputs = parse_stimulus(STIMULUS_HEADER + "0,12,0,0,0,0,1,0\n")
        assert inputs == [ChipInputs(external_currents=(12, 0, 0))]
        assert hold_stimulus(inputs, 4) == [ChipInputs(external_currents=(12, 0, 0))] * 4

    def test_gaps_hold_previous_row(self):
        inputs = parse_stimulus(STIMULUS_HEADER + "0,1,2,3,0,0,1,0\n5,0,0,0,0,0,1,0\n")
        assert len(inputs) == 6
        assert inputs[1:5] == [inputs[0]] * 4
        assert inputs[5].external_currents == (0, 0, 0)

    def test_cycles_before_first_row_are_idle(self):
        inputs = parse_stimulus(STIMULUS_HEADER + "2,9,9,9,1,1,0,0\n")
        assert inputs[:2] == [IDLE_INPUTS, IDLE_INPUTS]
        assert inputs[2].lines == SpiLineSample(sclk=True, mosi=True, cs_n=False)

    def test_spi_columns_are_optional(self):
        inputs = parse_stimulus("cycle,i0,i1,i2\n0,5,6,7\n")
        assert inputs == [ChipInputs(external_currents=(5, 6, 7))]

    def test_empty_fields_default_to_idle(self):
        inputs = parse_stimulus(STIMULUS_HEADER + "0,1,1,1,,,,\n")
        assert inputs[0].lines == SpiLineSample() and not inputs[0].reset

    @pytest.mark.parametrize("rows, line, column", [
        ("0,300,0,0,0,0,1,0\n", 2, 2),
        ("0,1,0,0,0,0,1,0\n0,2,0,0,0,0,1,0\n", 3, 1),
        ("3,1,0,0,0,0,1,0\n1,2,0,0,0,0,1,0\n", 3, 1),
        ("0,a,0,0,0,0,1,0\n", 2, 2),
        ("0,1,0,0,2,0,1,0\n", 2, 5),
        ("0,1,0\n", 2, 4),
        ("0,²,0,0,0,0,1,0\n", 2, 2),
        ("٣,1,0,0,0,0,1,0\n", 2, 1),
    ])
    def test_errors_name_location(self, rows, line, column):
        with pytest.raises(StimulusParseError) as excinfo:
            parse_stimulus(STIMULUS_HEADER + rows)
        assert (excinfo.value.line, excinfo.value.column) == (line, column)

    @pytest.mark.parametrize("header", ["cycle,i0,i1\n", "cycle,i0,i1,i2,bogus\n", "cycle,i0,i0,i1,i2\n", ""])
    def test_bad_headers(self, header):
        with pytest.raises(StimulusParseError):
            parse_stimulus(header)

    def test_cycle_limit_stops_gap_expansion(self):
        text = STIMULUS_HEADER + "0,1,0,0,0,0,1,0\n1000000000,2,0,0,0,0,1,0\n"
        inputs = parse_stimulus(text, cycles=4)
        assert inputs == [ChipInputs(external_currents=(1, 0, 0))] * 4

    def test_cycle_limit_keeps_rows_inside_it(self):
        text = STIMULUS_HEADER + "0,1,0,0,0,0,1,0\n2,2,0,0,0,0,1,0\n9,3,0,0,0,0,1,0\n"
        inputs = parse_stimulus(text, cycles=3)
        assert [i.external_currents[0] for i in inputs] == [1, 1, 2]

    def test_rows_past_the_limit_are_still_checked(self):
        text = STIMULUS_HEADER + "0,1,0,0,0,0,1,0\n50,300,0,0,0,0,1,0\n"
        with pytest.raises(StimulusParseError) as excinfo:
            parse_stimulus(text, cycles=2)
        assert (excinfo.value.line, excinfo.value.column) == (3, 2)

    def test_zero_cycle_limit(self):
        assert parse_stimulus(STIMULUS_HEADER + "0,1,0,0,0,0,1,0\n", cycles=0) == []

    def test_rejects_negative_cycle_limit(self):
        with pytest.raises(ValueError):
            parse_stimulus(STIMULUS_HEADER, cycles=-1)

    def test_render_round_trip(self, rng):
        inputs = []
        for _ in range(50):
            if rng.random() < 0.4 and inputs:
                inputs.append(inputs[-1])
                continue
            sclk, mosi, cs_n, reset = (bool(v) for v in rng.integers(0, 2, size=4))
            inputs.append(ChipInputs(
                lines=SpiLineSample(sclk, mosi, cs_n),
                external_currents=tuple(int(v) for v in rng.integers(0, 256, size=3)),
                reset=reset,
            ))
        text = render_stimulus(inputs)
        assert text.startswith(STIMULUS_HEADER)
        assert parse_stimulus(text) == inputs

    def test_render_keeps_trailing_held_cycles(self):
        inputs = [ChipInputs(external_currents=(1, 0, 0))] * 3
        assert parse_stimulus(render_stimulus(inputs)) == inputs


class TestTraceCsv:

    def test_empty_trace_is_header_only(self):
        assert write_trace_csv([]) == ",".join(CSV_HEADER) + "\n"

    def test_header_spelling(self):
        assert CSV_HEADER[:7] == ["cycle", "v1_0", "v1_1", "v1_2", "v2_0", "v2_1", "v2_2"]
        assert CSV_HEADER[7] == "r1_0" and CSV_HEADER[13] == "s1_0" and CSV_HEADER[-1] == "s2_2"

    def test_row_count_matches_cycles(self):
        trace = run_simulation([], [], 7)
        assert len(write_trace_csv(trace).splitlines()) == 1 + 7

    def test_round_trip(self, rng):
        program = random_program(rng, max_writes=8, max_addr=0x0B)
        stimulus = [ChipInputs(external_currents=tuple(int(v) for v in row))
                    for row in rng.integers(0, 256, size=(30, 3))]
        trace = run_simulation(program, stimulus, 30)
        assert read_trace_csv(write_trace_csv(trace)) == trace.records

    @pytest.mark.parametrize("text", [
        "",
        "cycle,v1_0\n",
        ",".join(CSV_HEADER) + "\n0,1\n",
        ",".join(CSV_HEADER) + "\n" + ",".join(["0"] * 18 + ["x"]) + "\n",
        ",".join(CSV_HEADER) + "\n" + ",".join(["0"] * 18 + ["²"]) + "\n",
        ",".join(CSV_HEADER) + "\n" + ",".join(["1"] + ["0"] * 18) + "\n" + ",".join(["1"] + ["0"] * 18) + "\n",
    ])
    def test_reader_rejects_malformed(self, text):
        with pytest.raises(TraceParseError):
            read_trace_csv(text)


class TestTraceVcd:

    def test_structure(self):
        trace = run_simulation([], [ChipInputs(external_currents=(3, 0, 0))] * 4, 4)
        declared, changes = check_vcd(write_trace_vcd(trace))
        assert len(declared) == 18
        assert sorted(size for size, _ in declared.values()) == [1] * 6 + [8] * 12
        assert any("s1_0" in names for names in changes.values())

    def test_all_zero_trace_has_no_later_changes(self):
        _, changes = check_vcd(write_trace_vcd(zero_records(3)))
        assert all(t == 0 for t, names in changes.items() if names)
        assert not any(t > 0 for t in changes)

    def test_empty_trace(self):
        declared, _ = check_vcd(write_trace_vcd([]))
        assert len(declared) == 18

    def test_only_changes_are_dumped(self):
        records = zero_records(4)
        records[2] = TraceRecord(2, (7, 0, 0, 0, 0, 0), (0,) * 6, (False,) * 6)
        _, changes = check_vcd(write_trace_vcd(records))
        assert changes[2] == ["v1_0"]
        assert changes[3] == ["v1_0"]
        assert 1 not in changes

    def test_deterministic(self):
        trace = run_simulation([], [ChipInputs(external_currents=(9, 9, 9))] * 6, 6)
        assert write_trace_vcd(trace) == write_trace_vcd(trace)
