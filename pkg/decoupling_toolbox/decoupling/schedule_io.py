# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Canonical JSON schedule files."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .pauli_labels import NodeSpec, PauliLabel
from .pulse_schedule import SCENARIOS, PulseSchedule
from .schedule_verification import SequenceTimes

FORMAT_VERSION = "1"
REQUIRED_KEYS = ("scenario", "n", "d", "N", "pulses", "sequence")


@dataclass(frozen=True)
class ScheduleFile:
    """A schedule together with its time slices.

    Pulse ids in the file start at 1, matching the pulse names pi_1, pi_2, ...

    Attributes:
        - schedule (PulseSchedule): the schedule
        - times (SequenceTimes | None): explicit times, or None for uniform slices
    """

    schedule: PulseSchedule
    times: SequenceTimes | None = None

    def to_dict(self, emit_frames: bool = False) -> dict[str, Any]:
        """
        The file contents with a fixed key order.

        Args:
            - emit_frames (bool): whether to include the toggling frames

        Returns:
            - (dict): JSON-ready contents
        """
        schedule = self.schedule
        data: dict[str, Any] = {
            "version": FORMAT_VERSION,
            "scenario": schedule.scenario,
            "n": schedule.spec.n,
            "d": schedule.spec.d,
        }
        if schedule.alpha is not None:
            data["alpha"] = schedule.alpha
        data["N"] = schedule.num_steps
        data["pulses"] = [
            {"id": j, "labels": [list(node) for node in pulse.nodes]}
            for j, pulse in enumerate(schedule.pulses, start=1)
        ]
        data["sequence"] = [i + 1 for i in schedule.sequence]
        if emit_frames:
            data["frames"] = [
                [list(node) for node in frame.nodes] for frame in schedule.frames
            ]
        data["times"] = "uniform" if self.times is None else list(self.times.taus)
        return data

    def to_json(self, emit_frames: bool = False) -> str:
        """Serialize deterministically, with a trailing newline."""
        text = json.dumps(self.to_dict(emit_frames), indent=2, ensure_ascii=False)
        return text + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ScheduleFile:
        """
        Rebuild a schedule file from its contents.

        Raises:
            - ValueError: if the contents are malformed or inconsistent
        """
        if not isinstance(data, dict):
            raise ValueError("A schedule file must contain a JSON object.")
        if data.get("version") != FORMAT_VERSION:
            raise ValueError(
                f"Unsupported schedule file version {data.get('version')!r}."
            )
        missing = [key for key in REQUIRED_KEYS if key not in data]
        if missing:
            raise ValueError(f"Schedule file is missing {', '.join(missing)}.")
        if data["scenario"] not in SCENARIOS:
            raise ValueError(f"Unknown scenario {data['scenario']!r}.")
        spec = NodeSpec(_integer(data, "n"), _integer(data, "d"))
        ids: dict[int, int] = {}
        pulses = []
        alpha = data.get("alpha")
        if alpha is not None and not _is_integer(alpha):
            raise ValueError("alpha must be an integer or null.")
        for entry in _list(data, "pulses"):
            if (
                not isinstance(entry, dict)
                or not _is_integer(entry.get("id"))
                or "labels" not in entry
            ):
                raise ValueError("Every pulse needs an integer id and labels.")
            pulse_id = entry["id"]
            labels = entry["labels"]
            if pulse_id in ids:
                raise ValueError(f"Pulse id {pulse_id} is used twice.")
            ids[pulse_id] = len(pulses)
            pulses.append(_label(labels, spec))
        sequence = []
        for pulse_id in _list(data, "sequence"):
            if not _is_integer(pulse_id) or pulse_id not in ids:
                raise ValueError(
                    f"The sequence references unknown pulse id {pulse_id}."
                )
            sequence.append(ids[pulse_id])
        if len(sequence) != _integer(data, "N"):
            raise ValueError(
                f"The sequence has {len(sequence)} entries, expected {data['N']}."
            )
        schedule = PulseSchedule(
            spec, tuple(pulses), tuple(sequence), data["scenario"], alpha
        )
        if "frames" in data:
            frames = tuple(_label(frame, spec) for frame in _list(data, "frames"))
            if frames != schedule.frames:
                raise ValueError("The frames disagree with the pulse sequence.")
        times = data.get("times", "uniform")
        if times == "uniform":
            return cls(schedule)
        if (
            not isinstance(times, list)
            or len(times) != schedule.num_steps
            or not all(
                isinstance(t, (int, float)) and not isinstance(t, bool) for t in times
            )
        ):
            raise ValueError(
                "times must be 'uniform' or a list with one entry per step."
            )
        return cls(schedule, SequenceTimes(tuple(times)))

    @classmethod
    def from_json(cls, text: str) -> ScheduleFile:
        """
        Parse a schedule file.

        Raises:
            - ValueError: if the text is not valid JSON or not a valid schedule
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as ex:
            raise ValueError(f"Schedule file is not valid JSON: {ex}") from ex
        return cls.from_dict(data)


def _is_integer(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _integer(data: dict[str, Any], key: str) -> int:
    value = data[key]
    if not _is_integer(value):
        raise ValueError(f"{key} must be an integer.")
    return value


def _list(data: dict[str, Any], key: str) -> list:
    value = data[key]
    if not isinstance(value, list):
        raise ValueError(f"{key} must be a list.")
    return value


def _label(pairs, spec: NodeSpec) -> PauliLabel:
    if not isinstance(pairs, list) or len(pairs) != spec.n:
        raise ValueError(f"Labels must list {spec.n} exponent pairs.")
    try:
        return PauliLabel(tuple((int(a), int(b)) for a, b in pairs), spec.d)
    except (TypeError, ValueError) as ex:
        raise ValueError(
            f"Invalid label {pairs!r}: labels must be reduced mod {spec.d}."
        ) from ex


def read_schedule(path: str) -> ScheduleFile:
    """Read a schedule file from disk."""
    with open(path, encoding="utf-8") as handle:
        return ScheduleFile.from_json(handle.read())


def write_schedule(
    path: str, schedule_file: ScheduleFile, emit_frames: bool = False
) -> None:
    """Write a schedule file to disk."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(schedule_file.to_json(emit_frames))
