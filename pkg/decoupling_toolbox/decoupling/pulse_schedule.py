# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Pulse schedules and their toggling frames."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Sequence

import numpy as np

from ..utils.conversion import label_to_symbol
from .pauli_labels import NodeSpec, PauliLabel, label_add, render_label

SCENARIOS = ("single", "bipartite", "qubit-network", "qudit-network", "custom")


@dataclass(frozen=True)
class PulseSchedule:
    """A cyclic sequence of pulses drawn from a small set of distinct labels.

    Frame i is the label sum of the first i pulses of the sequence, so frame
    0 is the identity and frame i + 1 = frame i + pulses[sequence[i]]. Time
    slices are uniform.

    Attributes:
        - spec (NodeSpec): the network the pulses act on
        - pulses (tuple[PauliLabel, ...]): the distinct pulse labels
        - sequence (tuple[int, ...]): N indices into ``pulses``
        - scenario (str): how the schedule was built
        - alpha (int | None): qubits per logical node for network schedules
    """

    spec: NodeSpec
    pulses: tuple[PauliLabel, ...]
    sequence: tuple[int, ...]
    scenario: str = "custom"
    alpha: int | None = None

    def __post_init__(self) -> None:
        """
        Validate the pulses and the sequence.

        Closure is not checked here; see :meth:`check_closure`.

        Raises:
            - ValueError: if a pulse does not fit the network, pulses repeat, a
                sequence entry is out of range or the scenario is unknown
        """
        object.__setattr__(self, "pulses", tuple(self.pulses))
        object.__setattr__(self, "sequence", tuple(int(i) for i in self.sequence))
        if self.scenario not in SCENARIOS:
            raise ValueError(
                f"Unknown scenario {self.scenario!r}; "
                f"choose one of {', '.join(SCENARIOS)}."
            )
        if not self.sequence:
            raise ValueError("A schedule needs at least one step.")
        for pulse in self.pulses:
            if pulse.d != self.spec.d or pulse.n != self.spec.n:
                raise ValueError("Pulse labels must match the network.")
        if len(set(self.pulses)) != len(self.pulses):
            raise ValueError("Pulse labels must be distinct.")
        if any(not 0 <= i < len(self.pulses) for i in self.sequence):
            raise ValueError("The sequence references a missing pulse.")
        if self.alpha is not None and (self.alpha < 1 or self.spec.n % self.alpha):
            raise ValueError(f"alpha={self.alpha} does not divide {self.spec.n} nodes.")

    @classmethod
    def from_frames(
        cls,
        spec: NodeSpec,
        frames: Sequence[PauliLabel],
        scenario: str = "custom",
        alpha: int | None = None,
    ) -> PulseSchedule:
        """
        Build the schedule that walks a cyclic list of frames.

        Pulses are the differences of consecutive frames, including the step
        from the last frame back to the first, listed in order of first use.
        Frames are taken relative to the first one, so a list that does not
        start at the identity yields the schedule of the rebased frames
        frame - frames[0]; this conjugates every frame by the same unitary.

        Args:
            - spec (NodeSpec): the network
            - frames (Sequence[PauliLabel]): the frames in cyclic order

        Returns:
            - (PulseSchedule): the schedule

        Raises:
            - ValueError: if there are no frames
        """
        if not frames:
            raise ValueError("A schedule needs at least one frame.")
        pulses: list[PauliLabel] = []
        index: dict[PauliLabel, int] = {}
        sequence = []
        for current, following in zip(frames, list(frames[1:]) + [frames[0]]):
            pulse = label_add(following, -current)
            if pulse not in index:
                index[pulse] = len(pulses)
                pulses.append(pulse)
            sequence.append(index[pulse])
        return cls(spec, tuple(pulses), tuple(sequence), scenario, alpha)

    @property
    def num_steps(self) -> int:
        """Number of steps N."""
        return len(self.sequence)

    @property
    def distinct_pulses(self) -> int:
        """Number of distinct pulse labels."""
        return len(self.pulses)

    @property
    def weights(self) -> np.ndarray:
        """Relative length of each time slice; uniform."""
        return np.full(self.num_steps, 1.0 / self.num_steps)

    @cached_property
    def frames(self) -> tuple[PauliLabel, ...]:
        """The N toggling-frame labels."""
        frames = [PauliLabel.identity(self.spec.n, self.spec.d)]
        for i in self.sequence[:-1]:
            frames.append(label_add(frames[-1], self.pulses[i]))
        return tuple(frames)

    def check_closure(self) -> bool:
        """Whether the product of the sequenced pulses is the identity up to phase."""
        total = reduce(
            label_add,
            (self.pulses[i] for i in self.sequence),
            PauliLabel.identity(self.spec.n, self.spec.d),
        )
        return total.is_identity()

    def frame_table(self) -> np.ndarray:
        """
        The frames as an n x N symbol matrix with symbol a * d + b per node.

        Returns:
            - (np.ndarray): integer matrix with entries in [0, d^2)
        """
        table = np.array([frame.nodes for frame in self.frames], dtype=np.int64)
        return label_to_symbol(table[:, :, 0], table[:, :, 1], self.spec.d).T

    def render_pulses(self) -> list[str]:
        """One ``pi<j> = <label>`` line per distinct pulse."""
        return [
            f"π{j} = {render_label(pulse)}"
            for j, pulse in enumerate(self.pulses, start=1)
        ]

    def render_sequence(self) -> str:
        """The pulse sequence as pulse names."""
        return ",".join(f"π{i + 1}" for i in self.sequence)


def distinct_pulse_count(schedule: PulseSchedule) -> int:
    """Number of distinct pulses used by a schedule."""
    return len(schedule.pulses)
