"""Loading and validating command-line jobs."""
import json
from pathlib import Path
from typing import Any, List, Optional, Tuple

from ..config import config
from ..errors import DiagramSyntaxError, JobError
from ..models import CoxeterDiagram, CoxeterWord, JobSpec
from ..utils import parse_index_list, safe_get, setup_logger
from .diagrams import BUILTIN_DIAGRAMS, builtin_diagram, coxeter_word, parabolic_coxeter_word, parse_diagram


logger = setup_logger(__name__, config.LOGS_DIR / "cli.log", config.LOG_LEVEL, config.LOG_TO_FILE)


class JobLoader:
    """Turns raw CLI arguments into a validated JobSpec.

    Every argument may be a path to a file or the inline content itself; a
    diagram may also name a built-in system (A2, B2, A1xA1, I2(5), I2(6),
    I2(inf), A3, B3). A ``--job`` JSON file supplies defaults for any of
    ``diagram``, ``coxeter``, ``f``, ``g``, ``braid`` and ``expect``.
    """

    @staticmethod
    def read_argument(value: str, argument: str) -> str:
        """File contents when ``value`` names a readable file, else ``value`` itself."""
        path = Path(value)
        try:
            if not path.is_file():
                return value
            raw = path.read_bytes()
        except OSError:
            return value
        try:
            return raw.decode("utf-8")
        except UnicodeDecodeError as e:
            line = raw.count(b"\n", 0, e.start) + 1
            column = e.start - raw.rfind(b"\n", 0, e.start)
            message = f"{argument}: {path} is not valid UTF-8 at byte {e.start}"
            if argument == "--diagram":
                raise DiagramSyntaxError(message, line, column) from e
            raise JobError(
                message,
                {"argument": argument, "position": e.start, "line": line, "column": column},
            ) from e

    def load_diagram(self, value: Any) -> CoxeterDiagram:
        if isinstance(value, dict):
            return parse_diagram(json.dumps(value))
        if not isinstance(value, str):
            raise JobError("diagram must be DSL text, JSON, a file or a built-in name")
        if value in BUILTIN_DIAGRAMS:
            return builtin_diagram(value)
        return parse_diagram(self.read_argument(value, "--diagram"))

    def _load_json(self, value: Any, argument: str) -> Any:
        if not isinstance(value, str):
            return value
        text = self.read_argument(value, argument)
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise JobError(
                f"{argument}: invalid JSON: {e.msg}",
                location={"argument": argument, "line": e.lineno, "column": e.colno},
            ) from e

    def load_reflection_words(self, value: Any, argument: str, rank: int) -> List[Tuple[int, ...]]:
        """A factorization: a JSON list of nonempty words of simple indices."""
        data = self._load_json(value, argument)
        if not isinstance(data, list):
            raise JobError(f"{argument}: expected a list of reflection words", {"argument": argument})
        words = []
        for k, word in enumerate(data):
            location = {"argument": argument, "index": k}
            if not isinstance(word, list) or not word:
                raise JobError(f"{argument}[{k}]: a reflection word is a nonempty list", location)
            for letter in word:
                if isinstance(letter, bool) or not isinstance(letter, int) or not 1 <= letter <= rank:
                    raise JobError(f"{argument}[{k}]: letter {letter!r} outside 1..{rank}", location)
            words.append(tuple(word))
        return words

    def load_braid(self, value: Any, argument: str = "--braid") -> List[int]:
        data = self._load_json(value, argument)
        if not isinstance(data, list) or any(
            isinstance(m, bool) or not isinstance(m, int) or m == 0 for m in data
        ):
            raise JobError(f"{argument}: expected a list of nonzero integers", {"argument": argument})
        return list(data)

    def load_coxeter(
        self, value: Any, diagram: CoxeterDiagram, parabolic: bool = False, required: bool = True
    ) -> Optional[CoxeterWord]:
        if value is None:
            if not required:
                return None
            return coxeter_word(diagram, range(1, diagram.rank + 1))
        if isinstance(value, str):
            try:
                letters = parse_index_list(value)
            except ValueError as e:
                raise JobError(f"--coxeter: {e}", {"argument": "--coxeter"}) from e
        elif isinstance(value, list):
            letters = tuple(value)
        else:
            raise JobError(f"--coxeter: expected a list of generator indices, got {value!r}", {"argument": "--coxeter"})
        for letter in letters:
            if isinstance(letter, bool) or not isinstance(letter, int):
                raise JobError(f"--coxeter: letter {letter!r} is not an integer", {"argument": "--coxeter"})
        if parabolic:
            return parabolic_coxeter_word(diagram, letters)
        return coxeter_word(diagram, letters)

    def load(
        self,
        diagram: Optional[str] = None,
        coxeter: Optional[str] = None,
        f: Optional[str] = None,
        g: Optional[str] = None,
        braid: Optional[str] = None,
        expect: Optional[str] = None,
        job: Optional[str] = None,
        parabolic: bool = False,
        coxeter_required: bool = True,
        **options: Any,
    ) -> JobSpec:
        """Build a JobSpec; explicit arguments override the job file."""
        for name in ("cap", "threads"):
            if options.get(name) is not None and options[name] < 1:
                raise JobError(f"--{name} must be positive, got {options[name]}", {"argument": f"--{name}"})
        defaults = self._load_json(job, "--job") if job else {}
        if not isinstance(defaults, dict):
            raise JobError("--job: expected a JSON object", {"argument": "--job"})

        diagram = diagram if diagram is not None else safe_get(defaults, "diagram")
        if diagram is None:
            raise JobError("a diagram is required (--diagram)", {"argument": "--diagram"})
        parsed = self.load_diagram(diagram)
        rank = parsed.rank

        spec = JobSpec(diagram=parsed, options=options)
        spec.coxeter = self.load_coxeter(
            coxeter if coxeter is not None else safe_get(defaults, "coxeter"), parsed, parabolic, coxeter_required
        )
        for name, value in (("f", f), ("g", g), ("expect", expect)):
            value = value if value is not None else safe_get(defaults, name)
            if value is not None:
                setattr(spec, name, self.load_reflection_words(value, f"--{name}", rank))
        braid = braid if braid is not None else safe_get(defaults, "braid")
        if braid is not None:
            spec.braid = self.load_braid(braid)
        logger.debug(f"Loaded job for rank {rank} with options {options}")
        return spec
