"""Oracle agreement suite behind the ``selftest`` subcommand."""
import random
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from tqdm import tqdm

from ..config import config
from ..errors import InternalError
from ..utils import setup_logger
from .connector import HurwitzConnector
from .diagrams import builtin_diagram, coxeter_word, odd_components
from .hurwitz import HurwitzEngine
from .oracle import GroupOracle
from .rootspace import RootSystem


logger = setup_logger(__name__, config.LOGS_DIR / "selftest.log", config.LOG_LEVEL, config.LOG_TO_FILE)

SELFTEST_SYSTEMS = ("A2", "B2", "A1xA1", "I2(5)", "I2(6)", "A3")


@dataclass
class SystemReport:
    name: str
    order: int = 0
    reflections: int = 0
    orbit_counts: Dict[int, int] = field(default_factory=dict)
    witnesses: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "reflections": self.reflections,
            "orbits": {str(k): v for k, v in sorted(self.orbit_counts.items())},
            "witnesses": self.witnesses,
            "ok": self.ok,
            "failures": self.failures,
        }


class SelfTest:
    """Checks the main code path against brute force on small finite groups."""

    def __init__(self, seed: Optional[int] = None, samples: Optional[int] = None):
        self.rng = random.Random(seed if seed is not None else config.SELFTEST_SEED)
        self.samples = samples if samples is not None else config.SELFTEST_SAMPLES

    def run(self, names: Sequence[str] = SELFTEST_SYSTEMS, progress: bool = True) -> Dict[str, SystemReport]:
        reports = {}
        for name in tqdm(names, desc="selftest", file=sys.stderr, disable=not progress):
            reports[name] = self.check_system(name)
            level = "passed" if reports[name].ok else "FAILED"
            logger.info(f"Selftest {name}: {level}")
        return reports

    def check_system(self, name: str) -> SystemReport:
        report = SystemReport(name)
        diagram = builtin_diagram(name)
        system = RootSystem(diagram)
        labeling = odd_components(diagram)
        oracle = GroupOracle(system)
        hurwitz = HurwitzEngine(system)
        connector = HurwitzConnector(system, labeling)

        table = oracle.enumerate_group()
        report.order = table.order
        report.reflections = len(table.reflections)

        for k, g in enumerate(table.elements):
            if system.length(g) != len(table.words[k]):
                report.failures.append(f"length of element {list(table.words[k])} disagrees with BFS")

        classes = oracle.brute_conjugacy(table)
        for k, word in enumerate(table.reflection_words):
            t = system.reflection_of_word(word)
            if system.class_of(t, labeling) != classes[k]:
                report.failures.append(f"class of reflection {list(word)} disagrees with brute force")

        cw = coxeter_word(diagram, range(1, diagram.rank + 1))
        target = table.index_of_word(cw.letters)
        n = diagram.rank
        lengths = [n, n + 2] + ([n + 4] if n == 2 else [])
        for length in lengths:
            states = oracle.all_factorizations(table, target, length)
            orbits = oracle.orbit_partition(table, states)
            report.orbit_counts[length] = len(orbits)
            if set(orbits) != set(oracle.class_multiset_partition(states, classes)):
                report.failures.append(f"length {length}: orbits differ from class-multiset partition")
            self._check_orbit_sizes(report, oracle, hurwitz, table, orbits, length)
            self._check_witnesses(report, oracle, connector, table, orbits, cw)
        return report

    def _check_orbit_sizes(self, report, oracle, hurwitz, table, orbits, length) -> None:
        for orbit in orbits[:2]:
            start = oracle.to_factorization(table, min(orbit))
            found = hurwitz.orbit_bfs(start)
            if found.size != len(orbit):
                report.failures.append(
                    f"length {length}: orbit_bfs found {found.size} states, brute force {len(orbit)}"
                )

    def _check_witnesses(self, report, oracle, connector, table, orbits, cw) -> None:
        for _ in range(self.samples):
            orbit = sorted(self.rng.choice(orbits))
            f = oracle.to_factorization(table, self.rng.choice(orbit))
            g = oracle.to_factorization(table, self.rng.choice(orbit))
            try:
                decision = connector.connect(f, g, cw)
            except InternalError as e:
                report.failures.append(f"connect raised: {e.message}")
                continue
            if not decision.equivalent or decision.witness is None:
                report.failures.append("connect rejected a pair from one brute-force orbit")
                continue
            if connector.hurwitz.replay(f, decision.witness).key != g.key:
                report.failures.append("witness does not replay")
                continue
            report.witnesses += 1
