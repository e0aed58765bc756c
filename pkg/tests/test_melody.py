import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvtfractals import (
    CellSet,
    DegenerateSeriesError,
    EmptyInputError,
    InsufficientDataError,
    NoteEvent,
    cells_to_notes,
    pitch_series,
    read_series_csv,
    resolve_scale,
    spectral_exponent,
    write_midi,
    write_notes_csv,
    zero_carry_set,
)
from helpers import brute_force_run_count, parse_smf


class TestCellsToNotes:
    def test_generator_melody(self):
        notes = cells_to_notes(zero_carry_set(2, 1), ticks_per_cell=120)
        assert len(notes) == 2
        # bottom row maps to the base pitch, the row above to the next degree
        assert notes[0] == NoteEvent(onset=0, duration=120, pitch=60, velocity=100)
        assert notes[1] == NoteEvent(onset=0, duration=240, pitch=62, velocity=100)

    def test_single_cell(self):
        notes = cells_to_notes(CellSet(2, 0, [(0, 0)]), ticks_per_cell=90)
        assert notes == [NoteEvent(onset=0, duration=90, pitch=60, velocity=100)]

    def test_full_row_is_one_note(self):
        extent = 8
        cells = CellSet(2, 3, [(0, c) for c in range(extent)])
        notes = cells_to_notes(cells, ticks_per_cell=50)
        assert len(notes) == 1
        assert notes[0].duration == extent * 50

    def test_gap_splits_runs(self):
        cells = CellSet(2, 2, [(1, 0), (1, 1), (1, 3)])
        notes = cells_to_notes(cells, ticks_per_cell=10)
        assert [(n.onset, n.duration) for n in notes] == [(0, 20), (30, 10)]

    def test_empty_cells(self):
        with pytest.raises(EmptyInputError):
            cells_to_notes(CellSet(2, 1, []))

    def test_pitch_clamped_to_midi_range(self):
        cells = zero_carry_set(2, 6)  # extent 64, top rows push past pitch 127
        notes = cells_to_notes(cells, base_pitch=80)
        assert max(n.pitch for n in notes) == 127
        assert all(0 <= n.pitch <= 127 for n in notes)

    def test_sorted_by_onset_then_pitch(self):
        notes = cells_to_notes(zero_carry_set(3, 3))
        assert [(n.onset, n.pitch) for n in notes] == sorted(
            (n.onset, n.pitch) for n in notes
        )

    @pytest.mark.parametrize("base,depth", [(2, 4), (2, 5), (3, 3), (5, 2)])
    def test_note_count_matches_run_oracle(self, base, depth):
        cells = zero_carry_set(base, depth)
        assert len(cells_to_notes(cells)) == brute_force_run_count(cells)

    @pytest.mark.parametrize("base,depth", [(2, 5), (4, 2)])
    def test_total_duration_covers_every_cell(self, base, depth):
        cells = zero_carry_set(base, depth)
        notes = cells_to_notes(cells, ticks_per_cell=7)
        assert sum(n.duration for n in notes) == len(cells) * 7

    def test_scale_degrees(self):
        cells = CellSet(8, 1, [(row, 0) for row in range(8)])
        notes = cells_to_notes(cells, scale="major", base_pitch=60)
        assert sorted(n.pitch for n in notes) == [60, 62, 64, 65, 67, 69, 71, 72]

    def test_named_and_explicit_scales_agree(self):
        cells = zero_carry_set(3, 2)
        named = cells_to_notes(cells, scale="minor")
        explicit = cells_to_notes(cells, scale=(0, 2, 3, 5, 7, 8, 10))
        assert named == explicit

    def test_unknown_scale(self):
        with pytest.raises(ValueError):
            resolve_scale("dorian-ish")


class TestPitchSeries:
    def test_max_reduction_at_shared_onset(self):
        notes = [
            NoteEvent(0, 120, 60, 100),
            NoteEvent(0, 120, 64, 100),
        ]
        assert pitch_series(notes) == [64.0]

    def test_sequential_onsets(self):
        notes = [
            NoteEvent(0, 120, 60, 100),
            NoteEvent(120, 120, 62, 100),
            NoteEvent(240, 120, 64, 100),
        ]
        assert pitch_series(notes) == [60.0, 62.0, 64.0]

    def test_held_note_does_not_mask_later_onsets(self):
        notes = [
            NoteEvent(0, 500, 70, 100),
            NoteEvent(100, 100, 50, 100),
        ]
        assert pitch_series(notes) == [70.0, 50.0]

    def test_length_is_distinct_onset_count(self):
        notes = cells_to_notes(zero_carry_set(2, 4))
        assert len(pitch_series(notes)) == len({n.onset for n in notes})

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            pitch_series([])


class TestSpectralExponent:
    def test_white_noise(self):
        rng = np.random.default_rng(0)
        report = spectral_exponent(rng.uniform(size=4096))
        assert -0.3 <= report.beta <= 0.3
        assert report.series_length == 4096
        assert report.frequencies_used == 2048

    def test_random_walk(self):
        rng = np.random.default_rng(0)
        report = spectral_exponent(np.cumsum(rng.uniform(size=4096)))
        assert 1.6 <= report.beta <= 2.4

    def test_constant_series(self):
        with pytest.raises(DegenerateSeriesError):
            spectral_exponent([5.0] * 64)

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            spectral_exponent(list(range(31)))

    @given(
        st.integers(min_value=0, max_value=2**32 - 1),
        st.floats(min_value=-100, max_value=100),
        st.floats(min_value=0.01, max_value=100),
    )
    @settings(max_examples=40)
    def test_shift_and_scale_invariance(self, seed, shift, scale):
        rng = np.random.default_rng(seed)
        series = rng.normal(size=256)
        base = spectral_exponent(series)
        shifted = spectral_exponent(series + shift)
        scaled = spectral_exponent(series * scale)
        assert shifted.beta == pytest.approx(base.beta, abs=1e-6)
        assert scaled.beta == pytest.approx(base.beta, abs=1e-6)


class TestWriteMidi:
    def test_empty_notes(self, tmp_path):
        path = tmp_path / "empty.mid"
        write_midi([], ticks_per_quarter=480, tempo_bpm=120, path=path)
        data = path.read_bytes()
        assert data.startswith(b"MThd")
        division, tempo_us, notes = parse_smf(data)
        assert division == 480
        assert tempo_us == 500_000
        assert notes == []

    def test_single_note_deltas(self, tmp_path):
        path = tmp_path / "one.mid"
        write_midi(
            [NoteEvent(0, 120, 60, 100)], ticks_per_quarter=120, tempo_bpm=120, path=path
        )
        data = path.read_bytes()
        # after the tempo event: delta 0 note-on 60, delta 120 note-off 60
        assert b"\x00\x90\x3c\x64\x78\x80\x3c\x40" in data
        _, _, notes = parse_smf(data)
        assert notes == [(0, 120, 60)]

    def test_header_and_single_track(self, tmp_path):
        path = tmp_path / "m.mid"
        notes = cells_to_notes(zero_carry_set(2, 3))
        write_midi(notes, ticks_per_quarter=480, tempo_bpm=90, path=path)
        data = path.read_bytes()
        assert data.startswith(b"MThd")
        assert data.count(b"MTrk") == 1

    @pytest.mark.parametrize("base,depth", [(2, 4), (3, 3)])
    def test_round_trip_multiset(self, tmp_path, base, depth):
        notes = cells_to_notes(zero_carry_set(base, depth))
        path = tmp_path / "rt.mid"
        write_midi(notes, ticks_per_quarter=480, tempo_bpm=120, path=path)
        _, _, parsed = parse_smf(path.read_bytes())
        assert sorted(parsed) == sorted((n.onset, n.duration, n.pitch) for n in notes)

    def test_byte_stable(self, tmp_path):
        notes = cells_to_notes(zero_carry_set(3, 2))
        a, b = tmp_path / "a.mid", tmp_path / "b.mid"
        write_midi(notes, ticks_per_quarter=480, tempo_bpm=120, path=a)
        write_midi(notes, ticks_per_quarter=480, tempo_bpm=120, path=b)
        assert a.read_bytes() == b.read_bytes()

    def test_simultaneous_offs_precede_ons(self, tmp_path):
        notes = [NoteEvent(0, 100, 60, 90), NoteEvent(100, 100, 62, 90)]
        path = tmp_path / "seq.mid"
        write_midi(notes, ticks_per_quarter=480, tempo_bpm=120, path=path)
        data = path.read_bytes()
        off_60 = data.index(b"\x80\x3c")
        on_62 = data.index(b"\x90\x3e")
        assert off_60 < on_62

    def test_invalid_division(self, tmp_path):
        with pytest.raises(ValueError):
            write_midi([], ticks_per_quarter=10, tempo_bpm=120, path=tmp_path / "x.mid")

    def test_tempo_too_slow_for_three_bytes(self, tmp_path):
        with pytest.raises(ValueError):
            write_midi([], ticks_per_quarter=480, tempo_bpm=3, path=tmp_path / "x.mid")

    def test_long_delta_uses_vlq(self, tmp_path):
        notes = [NoteEvent(0, 100, 60, 90), NoteEvent(100_000, 50, 61, 90)]
        path = tmp_path / "vlq.mid"
        write_midi(notes, ticks_per_quarter=480, tempo_bpm=120, path=path)
        _, _, parsed = parse_smf(path.read_bytes())
        assert sorted(parsed) == [(0, 100, 60), (100_000, 50, 61)]


class TestNotesCsv:
    def test_empty_list(self, tmp_path):
        path = tmp_path / "notes.csv"
        write_notes_csv([], path)
        assert path.read_bytes() == b"onset,duration,pitch,velocity\n"

    def test_single_note(self, tmp_path):
        path = tmp_path / "notes.csv"
        write_notes_csv([NoteEvent(0, 120, 60, 100)], path)
        assert path.read_bytes() == b"onset,duration,pitch,velocity\n0,120,60,100\n"

    def test_round_trip(self, tmp_path):
        notes = cells_to_notes(zero_carry_set(3, 2))
        path = tmp_path / "notes.csv"
        write_notes_csv(notes, path)
        lines = path.read_text().splitlines()
        parsed = [tuple(int(v) for v in line.split(",")) for line in lines[1:]]
        assert parsed == [(n.onset, n.duration, n.pitch, n.velocity) for n in notes]


class TestReadSeriesCsv:
    def test_plain_values(self, tmp_path):
        path = tmp_path / "series.csv"
        path.write_text("1.5\n2\n-3.25\n")
        assert read_series_csv(path) == [1.5, 2.0, -3.25]

    def test_optional_header(self, tmp_path):
        path = tmp_path / "series.csv"
        path.write_text("value\n1\n2\n")
        assert read_series_csv(path) == [1.0, 2.0]

    def test_garbage_mid_file(self, tmp_path):
        path = tmp_path / "series.csv"
        path.write_text("1\nbogus\n3\n")
        with pytest.raises(ValueError):
            read_series_csv(path)


class TestNoteEvent:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(onset=-1, duration=1, pitch=60, velocity=100),
            dict(onset=0, duration=0, pitch=60, velocity=100),
            dict(onset=0, duration=1, pitch=128, velocity=100),
            dict(onset=0, duration=1, pitch=60, velocity=0),
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            NoteEvent(**kwargs)
