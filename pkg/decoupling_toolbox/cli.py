# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Command-line interface ``decouple``.

Exit codes are 0 on success, 1 when a verification fails and 2 on usage
errors.
"""

from __future__ import annotations

import json
import logging
import sys
from typing import Any, Sequence

import fire

from .combinatorics.hamilton_cycles import CycleSpec, hamilton_cycle
from .combinatorics.linear_codes import build_code, dual_code
from .combinatorics.orthogonal_arrays import oa_from_code, verify_strength
from .decoupling.schedule_compiler import (
    compile_bipartite,
    compile_qubit_network,
    compile_qudit_network,
    compile_single_node,
)
from .decoupling.schedule_io import ScheduleFile, read_schedule, write_schedule
from .decoupling.schedule_verification import DEFAULT_SEEDS, verify_schedule

logger = logging.getLogger(__name__)


class VerificationError(Exception):
    """Raised by a command whose verification did not pass."""


def _parse_seeds(seeds: Any) -> list[int]:
    """Accept the forms fire produces for ``--seeds``: an int, a tuple or a string."""
    if isinstance(seeds, int):
        return [seeds]
    if isinstance(seeds, (list, tuple)):
        return [int(s) for s in seeds]
    try:
        return [int(s) for s in str(seeds).split(",") if s.strip()]
    except ValueError as ex:
        raise ValueError(f"Invalid seed list {seeds!r}.") from ex


def _input_path(kwargs: dict[str, Any]) -> str:
    """Fetch ``--in``, which cannot be a Python parameter name."""
    path = kwargs.pop("in", None)
    if kwargs:
        raise ValueError(f"Unknown flags: {', '.join('--' + key for key in kwargs)}.")
    if path is None:
        raise ValueError("--in FILE is required.")
    return str(path)


class CodesCommands:
    """Inspect linear codes."""

    def info(self, family: str = "qr5", q: int = 4, m: int = 2):
        """Print the parameters, generator matrix and dual parameters of a code."""
        code = build_code(family, q, m)
        params = code.params()
        dual = dual_code(code).params()
        print(f"{params} over GF({code.q}), dual {dual}")
        print(code.render())


class DecouplingCLI:
    """Compile and verify decoupling pulse schedules."""

    def __init__(self, verbose: bool = False):
        """Configure logging on stderr; DEBUG with ``--verbose``, WARNING otherwise."""
        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.WARNING,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
        self.codes = CodesCommands()

    def compile(
        self,
        scenario: str,
        nodes: int | None = None,
        dim: int | None = None,
        alpha: int | None = None,
        out: str | None = None,
        emit_frames: bool = False,
    ):
        """Compile a schedule and write it as JSON to stdout or ``--out``."""
        if scenario in ("single", "bipartite"):
            if dim is None:
                raise ValueError(f"--dim is required for the {scenario} scenario.")
            compiler = (
                compile_single_node if scenario == "single" else compile_bipartite
            )
            schedule = compiler(int(dim))
        elif scenario == "qubit-network":
            if nodes is None:
                raise ValueError("--nodes is required for the qubit-network scenario.")
            schedule = compile_qubit_network(int(nodes))
        elif scenario == "qudit-network":
            if nodes is None or alpha is None:
                raise ValueError(
                    "--nodes and --alpha are required for the qudit-network scenario."
                )
            schedule = compile_qudit_network(int(nodes), int(alpha))
        else:
            raise ValueError(
                f"Unknown scenario {scenario!r}; choose one of single, bipartite, "
                "qubit-network, qudit-network."
            )
        schedule_file = ScheduleFile(schedule)
        if out is None:
            sys.stdout.write(schedule_file.to_json(emit_frames))
        else:
            write_schedule(str(out), schedule_file, emit_frames)

    def verify(
        self,
        seeds: Any = ",".join(str(s) for s in DEFAULT_SEEDS),
        tol: float = 1e-10,
        mode: str = "auto",
        threads: int = 1,
        **kwargs,
    ):
        """Verify the schedule in ``--in FILE`` and print a JSON report."""
        schedule_file = read_schedule(_input_path(kwargs))
        report = verify_schedule(
            schedule_file.schedule,
            seeds=_parse_seeds(seeds),
            tol=float(tol),
            mode=mode,
            num_threads=int(threads),
        )
        print(json.dumps(report.to_dict(), indent=2))
        if not report.passed:
            raise VerificationError("verification failed")

    def oa(self, code: str = "qr5", q: int = 4, m: int = 2, force: bool = False):
        """Print the orthogonal array of a code after checking its strength."""
        array = oa_from_code(build_code(code, q, m))
        report = verify_strength(array, array.t, force=force)
        if not report.passed:
            raise VerificationError(f"strength {array.t} fails on rows {report.rows}")
        print(array.to_text())

    def cycles(self, dim: int, length: int):
        """Print the Hamilton cycle of Z_dim^length as comma-separated generators."""
        print(hamilton_cycle(CycleSpec(int(dim), int(length))).render())

    def show(self, **kwargs):
        """Render the pulses and the pulse sequence of ``--in FILE``."""
        schedule = read_schedule(_input_path(kwargs)).schedule
        print(
            f"scenario: {schedule.scenario}, n={schedule.spec.n}, "
            f"d={schedule.spec.d}, N={schedule.num_steps}"
        )
        for line in schedule.render_pulses():
            print(line)
        print(f"sequence: {schedule.render_sequence()}")


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the ``decouple`` command.

    Args:
        - argv (Sequence[str]): the arguments; defaults to ``sys.argv[1:]``

    Returns:
        - (int): the exit code
    """
    try:
        fire.Fire(
            DecouplingCLI,
            command=None if argv is None else list(argv),
            name="decouple",
        )
    except fire.core.FireExit as ex:
        return int(ex.code or 0)
    except VerificationError:
        return 1
    except (ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
