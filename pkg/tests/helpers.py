"""Independent oracles used by the test suite.

Everything here is deliberately written from the format or definition itself,
without reusing any code path from the package under test.
"""

from __future__ import annotations


def brute_force_box_count(cells, extent: int, box_size: int) -> int:
    """Count occupied boxes by scanning every aligned box explicitly."""
    occupied = set(cells)
    count = 0
    for top in range(0, extent, box_size):
        for left in range(0, extent, box_size):
            if any(
                (r, c) in occupied
                for r in range(top, top + box_size)
                for c in range(left, left + box_size)
            ):
                count += 1
    return count


def brute_force_run_count(cells) -> int:
    """Count maximal horizontal runs by probing each cell's left neighbor."""
    occupied = set(cells)
    return sum(1 for (r, c) in occupied if (r, c - 1) not in occupied)


def parse_pnm(data: bytes):
    """Parse ASCII P1/P2 data into (mode, width, height, rows-of-ints)."""
    tokens = data.decode("ascii").split()
    magic = tokens.pop(0)
    if magic == "P1":
        mode = "bilevel"
        maxval = 1
    elif magic == "P2":
        mode = "gray"
    else:
        raise ValueError(f"unsupported magic {magic!r}")
    width = int(tokens.pop(0))
    height = int(tokens.pop(0))
    if magic == "P2":
        maxval = int(tokens.pop(0))
        assert maxval == 255
    values = [int(t) for t in tokens]
    assert len(values) == width * height
    assert all(0 <= v <= maxval for v in values)
    rows = [values[i * width : (i + 1) * width] for i in range(height)]
    return mode, width, height, rows


def _read_vlq(data: bytes, pos: int) -> tuple[int, int]:
    value = 0
    while True:
        byte = data[pos]
        pos += 1
        value = (value << 7) | (byte & 0x7F)
        if not byte & 0x80:
            return value, pos


def parse_smf(data: bytes):
    """Minimal Standard MIDI File reader.

    Returns (division, tempo_us, notes) where notes is a list of
    (onset, duration, pitch) triples, pairing each note-off with the earliest
    open note-on of the same pitch. Handles running status and treats a
    note-on with velocity 0 as a note-off.
    """
    assert data[:4] == b"MThd"
    header_len = int.from_bytes(data[4:8], "big")
    fmt = int.from_bytes(data[8:10], "big")
    ntrks = int.from_bytes(data[10:12], "big")
    division = int.from_bytes(data[12:14], "big")
    assert fmt == 0 and ntrks == 1
    pos = 8 + header_len
    assert data[pos : pos + 4] == b"MTrk"
    track_len = int.from_bytes(data[pos + 4 : pos + 8], "big")
    track = data[pos + 8 : pos + 8 + track_len]
    assert len(track) == track_len

    tempo_us = None
    notes = []
    open_notes: dict[int, list[int]] = {}
    clock = 0
    status = None
    i = 0
    while i < len(track):
        delta, i = _read_vlq(track, i)
        clock += delta
        byte = track[i]
        if byte == 0xFF:
            meta_type = track[i + 1]
            length, j = _read_vlq(track, i + 2)
            payload = track[j : j + length]
            if meta_type == 0x51:
                tempo_us = int.from_bytes(payload, "big")
            i = j + length
            if meta_type == 0x2F:
                break
            continue
        if byte & 0x80:
            status = byte
            i += 1
        assert status is not None, "running status before any status byte"
        kind = status & 0xF0
        if kind in (0x80, 0x90):
            pitch, velocity = track[i], track[i + 1]
            i += 2
            if kind == 0x90 and velocity > 0:
                open_notes.setdefault(pitch, []).append(clock)
            else:
                onset = open_notes[pitch].pop(0)
                notes.append((onset, clock - onset, pitch))
        else:
            raise ValueError(f"unexpected event status {status:#x}")
    assert not any(open_notes.values()), "unterminated notes"
    return division, tempo_us, notes
